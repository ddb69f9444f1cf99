#pragma once

#include <array>
#include <cstdint>

#include "psl2ogs/gf.hpp"

namespace psl2ogs {

/// An element of PSL2(q): a determinant-one 2x2 matrix modulo {I, -I}.
///
/// The stored representative is canonical. For odd q, of M and -M we keep
/// the one whose first nonzero entry (row-major) has the smaller encoding
/// of {e, -e}. In characteristic 2 the two coincide. Equality of ProjMatrix
/// values is therefore equality of group elements.
class ProjMatrix {
 public:
  /// Throws DetNotOne, FieldMismatch.
  static ProjMatrix from_entries(const Element& m11, const Element& m12, const Element& m21,
                                 const Element& m22);
  /// Encodings in row-major order. Throws OutOfRange, DetNotOne.
  static ProjMatrix from_codes(const Field& field, const std::array<std::uint64_t, 4>& codes);
  static ProjMatrix identity(const Field& field);

  const Field& field() const noexcept { return *field_; }
  Element m11() const noexcept { return {*field_, codes_[0]}; }
  Element m12() const noexcept { return {*field_, codes_[1]}; }
  Element m21() const noexcept { return {*field_, codes_[2]}; }
  Element m22() const noexcept { return {*field_, codes_[3]}; }
  const std::array<std::uint32_t, 4>& codes() const noexcept { return codes_; }
  Element det() const noexcept;

  ProjMatrix inverse() const noexcept;
  bool is_identity() const noexcept;

  friend ProjMatrix operator*(const ProjMatrix& lhs, const ProjMatrix& rhs);
  friend bool operator==(const ProjMatrix& lhs, const ProjMatrix& rhs);

 private:
  // Caller guarantees det == 1.
  ProjMatrix(const Field& field, std::array<std::uint32_t, 4> codes) noexcept;
  void canonicalize() noexcept;

  const Field* field_;
  std::array<std::uint32_t, 4> codes_;
};

ProjMatrix gen_u(const Element& x);
/// Throws DivisionByZero for y = 0.
ProjMatrix gen_h(const Element& y);
ProjMatrix gen_s(const Field& field);

/// pmul is operator*; kept for symmetry with gen_*.
inline ProjMatrix pmul(const ProjMatrix& lhs, const ProjMatrix& rhs) { return lhs * rhs; }
/// Square-and-multiply; ppow(A, 0) is the identity.
ProjMatrix ppow(const ProjMatrix& base, std::uint64_t exponent);

/// |PSL2(q)| = q (q^2 - 1) / gcd(2, q - 1).
std::uint64_t psl2_order(const Field& field) noexcept;

/// Smallest n >= 1 with A^n = 1, by iterated multiplication.
std::uint64_t element_order(const ProjMatrix& matrix);

/// Order of the matrix u(a) s = [[-a, 1], [-1, 0]] in SL2(q), without the
/// projective identification. Equals the multiplicative order of a root of
/// lambda^2 + a lambda + 1.
std::uint64_t sl2_order_of_us(const Field& field, const Element& a);

inline bool in_borel(const ProjMatrix& matrix) noexcept { return matrix.m21().is_zero(); }

}  // namespace psl2ogs
