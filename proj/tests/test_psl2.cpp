#include <gtest/gtest.h>

#include "psl2ogs/psl2.hpp"
#include "test_util.hpp"

using namespace psl2ogs;

namespace {

std::vector<ProjMatrix> all_elements(const Field& f) {
  std::vector<ProjMatrix> out;
  const std::uint32_t q = f.order();
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d) {
          if (f.sub(f.mul(a, d), f.mul(b, c)) != 1) continue;
          ProjMatrix m = ProjMatrix::from_codes(f, {a, b, c, d});
          if (m.codes() == std::array<std::uint32_t, 4>{a, b, c, d}) out.push_back(m);
        }
  return out;
}

}  // namespace

TEST(Psl2, Generators) {
  auto f = Field::of_order(29);
  EXPECT_TRUE(gen_u(f->zero()).is_identity());
  EXPECT_EQ(gen_h(f->element(3)), gen_h(-f->element(3)));
  EXPECT_TRUE((gen_s(*f) * gen_s(*f)).is_identity());
  EXPECT_ERROR(ErrorCode::DivisionByZero, gen_h(f->zero()));
}

TEST(Psl2, CanonicalRepresentative) {
  auto f = Field::of_order(7);
  // -I and I coincide
  const ProjMatrix minus_i = ProjMatrix::from_codes(*f, {6, 0, 0, 6});
  EXPECT_TRUE(minus_i.is_identity());
  const ProjMatrix m = ProjMatrix::from_codes(*f, {0, 6, 1, 3});
  EXPECT_EQ(m.codes(), (std::array<std::uint32_t, 4>{0, 1, 6, 4}));
  EXPECT_ERROR(ErrorCode::DetNotOne, ProjMatrix::from_codes(*f, {1, 1, 1, 1}));
  EXPECT_ERROR(ErrorCode::OutOfRange, ProjMatrix::from_codes(*f, {7, 0, 0, 1}));
}

TEST(Psl2, CharacteristicTwoStoredAsIs) {
  auto f = Field::of_order(8);
  const ProjMatrix m = ProjMatrix::from_codes(*f, {3, 1, 0, f->element(3).inverse().encode()});
  EXPECT_EQ(m.codes()[0], 3u);
}

TEST(Psl2, MultiplicationLaws) {
  auto f = Field::of_order(29);
  const Element x1 = f->element(5), x2 = f->element(17), y = f->element(9), x = f->element(12);
  const ProjMatrix s = gen_s(*f);
  EXPECT_EQ(gen_u(x1) * gen_u(x2), gen_u(x1 + x2));
  EXPECT_EQ(gen_h(y) * gen_u(x), gen_u(x * y * y) * gen_h(y));
  EXPECT_EQ(s * gen_u(x) * s, gen_u(-x.inverse()) * s * gen_u(-x) * gen_h(x));
  EXPECT_EQ(s * gen_h(y), gen_h(y.inverse()) * s);
  EXPECT_EQ(gen_h(x) * gen_h(y), gen_h(x * y));
}

TEST(Psl2, Powers) {
  auto f = Field::of_order(29);
  const ProjMatrix us = gen_u(f->element(4)) * gen_s(*f);
  EXPECT_TRUE(ppow(us, 0).is_identity());
  EXPECT_EQ(ppow(us, 2), us * us);
  EXPECT_TRUE(ppow(us, 15).is_identity());
  EXPECT_FALSE(ppow(us, 5).is_identity());
}

TEST(Psl2, ElementOrder) {
  auto f29 = Field::of_order(29);
  EXPECT_EQ(element_order(ProjMatrix::identity(*f29)), 1u);
  EXPECT_EQ(element_order(gen_u(f29->element(4)) * gen_s(*f29)), 15u);
  EXPECT_EQ(element_order(gen_s(*f29)), 2u);
  auto f4 = Field::of_order(4);
  EXPECT_EQ(element_order(gen_u(f4->element(2)) * gen_s(*f4)), 5u);
}

TEST(Psl2, Sl2OrderOfUs) {
  auto f29 = Field::of_order(29);
  EXPECT_EQ(sl2_order_of_us(*f29, f29->element(4)), 30u);
  EXPECT_EQ(sl2_order_of_us(*f29, f29->element(1)), 3u);
  auto f4 = Field::of_order(4);
  EXPECT_EQ(sl2_order_of_us(*f4, f4->element(2)), 5u);
}

TEST(Psl2, InBorel) {
  auto f = Field::of_order(29);
  EXPECT_TRUE(in_borel(gen_u(f->element(3))));
  EXPECT_FALSE(in_borel(gen_s(*f)));
  const ProjMatrix g = gen_u(f->element(14)) * gen_s(*f) * gen_u(f->element(3)) * gen_h(f->element(4));
  EXPECT_FALSE(in_borel(g));
}

TEST(Psl2, GroupOrderByDirectCount) {
  const std::pair<std::uint64_t, std::size_t> expected[] = {{2, 6},   {3, 12},  {4, 60},  {5, 60},  {7, 168},
                                                            {8, 504}, {9, 360}, {11, 660}, {13, 1092}};
  for (auto [q, n] : expected) {
    auto f = Field::of_order(q);
    EXPECT_EQ(all_elements(*f).size(), n) << "q=" << q;
    EXPECT_EQ(psl2_order(*f), n);
  }
}

TEST(Psl2, InverseAndDeterminantExhaustive) {
  for (std::uint64_t q : {5u, 8u, 9u}) {
    auto f = Field::of_order(q);
    const auto elems = all_elements(*f);
    for (const ProjMatrix& m : elems) {
      ASSERT_TRUE((m * m.inverse()).is_identity());
      ASSERT_TRUE(m.det().is_one());
      ASSERT_EQ(m.inverse(), ProjMatrix::from_entries(m.m22(), -m.m12(), -m.m21(), m.m11()));
    }
  }
}

TEST(Psl2, CrossFieldProduct) {
  auto f = Field::of_order(5);
  auto g = Field::of_order(7);
  EXPECT_ERROR(ErrorCode::FieldMismatch, gen_s(*f) * gen_s(*g));
}
