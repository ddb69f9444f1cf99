#include <gtest/gtest.h>

#include "psl2ogs/psl2.hpp"
#include "psl2ogs/seq.hpp"
#include "test_util.hpp"

using namespace psl2ogs;

namespace {

std::vector<std::uint32_t> codes(const OffsetSeq& seq) {
  std::vector<std::uint32_t> out;
  for (const Element& e : seq) out.push_back(e.encode());
  return out;
}

}  // namespace

TEST(Seq, SelectedParameters) {
  struct Row {
    std::uint64_t q, a, t;
    int b;  // -1: absent
  };
  const Row rows[] = {{2, 1, 3, -1},  {3, 0, 2, 1},   {4, 2, 5, -1},  {5, 4, 3, 1},   {7, 3, 4, 1},
                      {8, 2, 9, -1},  {9, 4, 5, 1},   {11, 5, 6, 1},  {13, 7, 7, 1},  {16, 2, 17, -1},
                      {17, 7, 9, 1},  {19, 6, 10, 1}, {23, 3, 12, 1}, {25, 6, 13, 1}, {27, 11, 14, 1},
                      {29, 4, 15, 1}, {31, 4, 16, 1}, {32, 6, 33, -1}};
  for (const Row& r : rows) {
    const OgsParams p = make_params(Field::of_order(r.q));
    EXPECT_EQ(p.a.encode(), r.a) << "q=" << r.q;
    EXPECT_EQ(p.t, r.t) << "q=" << r.q;
    EXPECT_EQ(p.b.has_value(), r.b >= 0) << "q=" << r.q;
    if (p.b) {
      EXPECT_EQ(p.b->encode(), static_cast<std::uint32_t>(r.b)) << "q=" << r.q;
    }
  }
}

TEST(Seq, Q29Tables) {
  const SeqTables t = SeqTables::build(Field::of_order(29));
  EXPECT_EQ(t.a().encode(), 4u);
  EXPECT_EQ(t.b().encode(), 1u);
  EXPECT_EQ(t.t(), 15u);
  EXPECT_EQ(t.a_seq().first(), 1);
  EXPECT_EQ(codes(t.a_seq()), (std::vector<std::uint32_t>{4, 11, 25, 26, 14, 6, 28, 5, 27, 19, 7, 8, 22, 0}));
  EXPECT_EQ(t.b_seq().first(), 0);
  EXPECT_EQ(codes(t.b_seq()),
            (std::vector<std::uint32_t>{1, 3, 23, 9, 20, 17, 21, 15, 2, 18, 12, 16, 13, 24, 10}));
  EXPECT_EQ(t.alpha().first(), -1);
  EXPECT_EQ(codes(t.alpha()),
            (std::vector<std::uint32_t>{0, 1, 4, 15, 27, 6, 26, 11, 18, 3, 23, 2, 14, 25, 28, 0}));
  EXPECT_EQ(codes(t.beta()),
            (std::vector<std::uint32_t>{1, 1, 3, 11, 12, 8, 20, 14, 7, 14, 20, 8, 12, 11, 3, 1}));
  EXPECT_EQ(codes(t.gamma()),
            (std::vector<std::uint32_t>{1, 2, 7, 26, 10, 14, 17, 25, 25, 17, 14, 10, 26, 7, 2, 1}));
  // wrap: 4 - 10^{-1} = 1
  EXPECT_EQ(t.a() - t.b_seq()[14].inverse(), t.b());
}

TEST(Seq, SmallFields) {
  const SeqTables t2 = SeqTables::build(Field::of_order(2));
  EXPECT_EQ(codes(t2.a_seq()), (std::vector<std::uint32_t>{1, 0}));
  EXPECT_FALSE(t2.has_b());
  const SeqTables t4 = SeqTables::build(Field::of_order(4));
  EXPECT_EQ(t4.a_seq().size(), 4u);
  EXPECT_TRUE(t4.a_seq()[4].is_zero());
  EXPECT_EQ(SeqTables::build(Field::of_order(5)).b_seq().size(), 3u);
  EXPECT_EQ(SeqTables::build(Field::of_order(3)).a().encode(), 0u);
}

TEST(Seq, AlphaThreeWays) {
  const SeqTables t = SeqTables::build(Field::of_order(29));
  EXPECT_EQ(alpha_closed_form(t.params(), 2).encode(), 15u);
  EXPECT_EQ(alpha_closed_form(t.params(), 5).encode(), 26u);
  EXPECT_EQ(alpha_closed_form(t.params(), 0).encode(), 1u);
  EXPECT_EQ(alpha_closed_form(t.params(), -1).encode(), 0u);
  EXPECT_EQ(alpha_chebyshev(t.params(), 3).encode(), 27u);
  EXPECT_EQ(alpha_chebyshev(t.params(), 0).encode(), 1u);
  for (std::int64_t k = -1; k <= 14; ++k) {
    EXPECT_EQ(alpha_closed_form(t.params(), k), t.alpha()[k]);
    EXPECT_EQ(alpha_chebyshev(t.params(), k), t.alpha()[k]);
  }
  EXPECT_ERROR(ErrorCode::IndexOutOfRange, alpha_closed_form(t.params(), 15));
  EXPECT_ERROR(ErrorCode::IndexOutOfRange, alpha_closed_form(t.params(), -2));
}

TEST(Seq, ClosedFormInExtensionFields) {
  for (std::uint64_t q : {8u, 16u, 25u, 27u, 32u}) {
    const SeqTables t = SeqTables::build(Field::of_order(q));
    for (std::int64_t k = -1; k <= t.alpha().last(); ++k)
      ASSERT_EQ(alpha_closed_form(t.params(), k), t.alpha()[k]) << "q=" << q << " k=" << k;
  }
}

TEST(Seq, ChebyshevNeedsOddCharacteristic) {
  const SeqTables t = SeqTables::build(Field::of_order(4));
  EXPECT_ERROR(ErrorCode::EvenCharacteristic, alpha_chebyshev(t.params(), 1));
}

TEST(Seq, BetaGammaBasics) {
  const SeqTables t = SeqTables::build(Field::of_order(29));
  EXPECT_EQ(t.beta()[0], t.b());
  EXPECT_EQ(t.gamma()[-1], t.b());
  EXPECT_TRUE(t.beta()[-1].is_one());
}

TEST(Seq, CharacteristicTwoHasNoB) {
  auto f = Field::of_order(8);
  const SeqTables t = SeqTables::build(f);
  EXPECT_ERROR(ErrorCode::NotOddCharacteristic, t.b());
  EXPECT_ERROR(ErrorCode::NotOddCharacteristic, t.beta());
  EXPECT_ERROR(ErrorCode::NotOddCharacteristic, select_b(*f, t.a_seq()));
  EXPECT_ERROR(ErrorCode::NotOddCharacteristic, make_params(f, std::nullopt, f->one()));
}

TEST(Seq, SelectBThirteen) {
  auto f = Field::of_order(13);
  const SeqTables t = SeqTables::build(f);
  const Element b = t.b();
  EXPECT_TRUE(b.is_one() || (-b).is_one());
  for (const Element& ak : t.a_seq()) EXPECT_FALSE(ak == b);
}

TEST(Seq, Overrides) {
  auto f = Field::of_order(29);
  EXPECT_ERROR(ErrorCode::InvalidA, make_params(f, f->element(2)));
  // 11 = a_2 for a = 4
  EXPECT_ERROR(ErrorCode::InvalidB, make_params(f, std::nullopt, f->element(11)));
  const OgsParams p = make_params(f, std::nullopt, f->element(3));
  EXPECT_EQ(p.b->encode(), 3u);
  const SeqTables t(p);
  EXPECT_EQ(t.b_seq()[0].encode(), 3u);
  // another valid a gives a different but still consistent table
  for (std::uint32_t a = 5; a < 29; ++a) {
    if (!a_is_valid(*f, f->element(a))) continue;
    const SeqTables other = SeqTables::build(f, f->element(a));
    EXPECT_EQ(other.a().encode(), a);
    EXPECT_TRUE(other.a_seq()[14].is_zero());
    break;
  }
}

TEST(Seq, ProductFormulasQ29) {
  const SeqTables t = SeqTables::build(Field::of_order(29));
  for (const CheckResult& r : product_formulas(t)) EXPECT_TRUE(r.status == CheckStatus::Pass) << r.name;
  // alpha_8 = 3 = a_1 ... a_8
  Element prod = t.field().one();
  for (std::int64_t i = 1; i <= 8; ++i) prod *= t.a_seq()[i];
  EXPECT_EQ(prod.encode(), 3u);
}

TEST(Seq, ProductFormulasThirteenAndCharTwo) {
  for (const CheckResult& r : product_formulas(SeqTables::build(Field::of_order(13))))
    EXPECT_EQ(r.status, CheckStatus::Pass) << r.name;
  const auto char2 = product_formulas(SeqTables::build(Field::of_order(16)));
  ASSERT_EQ(char2.size(), 4u);
  EXPECT_EQ(char2[2].status, CheckStatus::Skip);
}

TEST(Seq, InvalidASequenceDetected) {
  auto f = Field::of_order(29);
  // u(2)s is unipotent: alpha_k = k + 1 never returns to zero
  EXPECT_ERROR(ErrorCode::InternalInvariantViolation, a_sequence(f->element(2), 15));
  EXPECT_ERROR(ErrorCode::InternalInvariantViolation, alpha_recursive(f->element(2), 15));
}

TEST(Seq, OffsetIndexing) {
  const SeqTables t = SeqTables::build(Field::of_order(7));
  EXPECT_ERROR(ErrorCode::IndexOutOfRange, t.a_seq()[0]);
  EXPECT_ERROR(ErrorCode::IndexOutOfRange, t.alpha()[-2]);
  EXPECT_ERROR(ErrorCode::IndexOutOfRange, t.b_seq()[4]);
}

TEST(Seq, CosetLookup) {
  const SeqTables t = SeqTables::build(Field::of_order(29));
  const CosetSlot a5 = t.coset_of(t.field().element(14));
  EXPECT_EQ(a5.branch, CosetBranch::APower);
  EXPECT_EQ(a5.k, 5u);
  const CosetSlot b7 = t.coset_of(t.field().element(15));
  EXPECT_EQ(b7.branch, CosetBranch::BPower);
  EXPECT_EQ(b7.k, 7u);
}
