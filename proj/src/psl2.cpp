#include "psl2ogs/psl2.hpp"

#include <string>

namespace psl2ogs {

namespace {

using Codes = std::array<std::uint32_t, 4>;

Codes raw_product(const Field& f, const Codes& a, const Codes& b) noexcept {
  return {f.add(f.mul(a[0], b[0]), f.mul(a[1], b[2])), f.add(f.mul(a[0], b[1]), f.mul(a[1], b[3])),
          f.add(f.mul(a[2], b[0]), f.mul(a[3], b[2])), f.add(f.mul(a[2], b[1]), f.mul(a[3], b[3]))};
}

constexpr Codes kIdentityCodes{1, 0, 0, 1};

}  // namespace

ProjMatrix::ProjMatrix(const Field& field, std::array<std::uint32_t, 4> codes) noexcept
    : field_(&field), codes_(codes) {
  canonicalize();
}

void ProjMatrix::canonicalize() noexcept {
  if (field_->is_binary()) return;
  for (std::uint32_t c : codes_) {
    if (c == 0) continue;
    if (field_->neg(c) < c) {
      for (auto& e : codes_) e = field_->neg(e);
    }
    return;
  }
}

ProjMatrix ProjMatrix::from_entries(const Element& m11, const Element& m12, const Element& m21,
                                    const Element& m22) {
  const Field& f = m11.field();
  require_same_field(f, m12.field());
  require_same_field(f, m21.field());
  require_same_field(f, m22.field());
  if (!(m11 * m22 - m12 * m21).is_one())
    throw Error(ErrorCode::DetNotOne, "matrix determinant is not 1");
  return {f, {m11.encode(), m12.encode(), m21.encode(), m22.encode()}};
}

ProjMatrix ProjMatrix::from_codes(const Field& field, const std::array<std::uint64_t, 4>& codes) {
  return from_entries(field.element(codes[0]), field.element(codes[1]), field.element(codes[2]),
                      field.element(codes[3]));
}

ProjMatrix ProjMatrix::identity(const Field& field) { return {field, kIdentityCodes}; }

Element ProjMatrix::det() const noexcept { return m11() * m22() - m12() * m21(); }

ProjMatrix ProjMatrix::inverse() const noexcept {
  const Field& f = *field_;
  return {f, {codes_[3], f.neg(codes_[1]), f.neg(codes_[2]), codes_[0]}};
}

bool ProjMatrix::is_identity() const noexcept { return codes_ == kIdentityCodes; }

ProjMatrix operator*(const ProjMatrix& lhs, const ProjMatrix& rhs) {
  require_same_field(*lhs.field_, *rhs.field_);
  return {*lhs.field_, raw_product(*lhs.field_, lhs.codes_, rhs.codes_)};
}

bool operator==(const ProjMatrix& lhs, const ProjMatrix& rhs) {
  require_same_field(*lhs.field_, *rhs.field_);
  return lhs.codes_ == rhs.codes_;
}

ProjMatrix gen_u(const Element& x) {
  const Field& f = x.field();
  return ProjMatrix::from_entries(f.one(), x, f.zero(), f.one());
}

ProjMatrix gen_h(const Element& y) {
  const Field& f = y.field();
  return ProjMatrix::from_entries(y, f.zero(), f.zero(), y.inverse());
}

ProjMatrix gen_s(const Field& field) {
  return ProjMatrix::from_entries(field.zero(), field.one(), -field.one(), field.zero());
}

ProjMatrix ppow(const ProjMatrix& base, std::uint64_t exponent) {
  ProjMatrix result = ProjMatrix::identity(base.field());
  ProjMatrix square = base;
  while (exponent) {
    if (exponent & 1) result = result * square;
    exponent >>= 1;
    if (exponent) square = square * square;
  }
  return result;
}

std::uint64_t psl2_order(const Field& field) noexcept {
  const std::uint64_t q = field.order();
  return q * (q * q - 1) / (field.is_binary() ? 1 : 2);
}

std::uint64_t element_order(const ProjMatrix& matrix) {
  const std::uint64_t cap = psl2_order(matrix.field());
  ProjMatrix power = matrix;
  for (std::uint64_t n = 1; n <= cap; ++n) {
    if (power.is_identity()) return n;
    power = power * matrix;
  }
  throw Error(ErrorCode::InternalInvariantViolation, "element order exceeds group order");
}

std::uint64_t sl2_order_of_us(const Field& field, const Element& a) {
  require_same_field(field, a.field());
  const Codes us{field.neg(a.encode()), 1, field.neg(1), 0};
  // Element orders in SL2(q) never exceed 2(q + 1).
  const std::uint64_t cap = 2 * (std::uint64_t{field.order()} + 1);
  Codes power = us;
  for (std::uint64_t n = 1; n <= cap; ++n) {
    if (power == kIdentityCodes) return n;
    power = raw_product(field, power, us);
  }
  throw Error(ErrorCode::InternalInvariantViolation,
              "order of u(a)s in SL2 exceeds " + std::to_string(cap));
}

}  // namespace psl2ogs
