#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "psl2ogs/error.hpp"

namespace psl2ogs {

class Element;

/// Largest field order the library will construct.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 20;

bool is_prime(std::uint64_t n) noexcept;

/// Splits q = p^kappa. Throws NotPrimePower.
std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint64_t q);

/// GF(p^kappa) with a fixed modulus polynomial.
///
/// Elements are canonically encoded as integers 0..q-1: the coefficient
/// vector (c_0, ..., c_{kappa-1}) of the residue polynomial maps to
/// sum c_i p^i. For kappa = 1 the stored modulus is the placeholder
/// lambda - 0, i.e. {0, 1}.
///
/// The modulus for kappa >= 2 is the monic irreducible of degree kappa whose
/// lower coefficients, read as a base-p integer with c_0 least significant,
/// are smallest. Construction is therefore deterministic.
///
/// A Field is immutable. Elements keep a non-owning pointer to their field,
/// so the Field must outlive every Element created from it.
class Field {
 public:
  /// Throws NotPrime, TooLarge.
  static std::shared_ptr<const Field> create(std::uint32_t p, std::uint32_t kappa);
  /// Builds GF(q) for a prime power q. Throws NotPrimePower, TooLarge.
  static std::shared_ptr<const Field> of_order(std::uint64_t q);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return kappa_; }
  std::uint32_t order() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return kappa_ == 1; }
  bool is_binary() const noexcept { return p_ == 2; }
  /// Coefficients c_0..c_kappa, monic.
  std::span<const std::uint32_t> modulus() const noexcept { return modulus_; }

  Element zero() const;
  Element one() const;
  /// Decodes an integer encoding. Throws OutOfRange.
  Element element(std::uint64_t code) const;
  /// Maps a signed integer through Z -> GF(p) -> GF(q).
  Element from_int(std::int64_t value) const;
  Element from_coeffs(std::span<const std::uint32_t> coeffs) const;

  // Arithmetic on encodings. Arguments must be valid encodings.
  std::uint32_t add(std::uint32_t u, std::uint32_t v) const noexcept;
  std::uint32_t sub(std::uint32_t u, std::uint32_t v) const noexcept;
  std::uint32_t neg(std::uint32_t u) const noexcept;
  std::uint32_t mul(std::uint32_t u, std::uint32_t v) const noexcept;
  /// Extended Euclid. Throws DivisionByZero.
  std::uint32_t inv(std::uint32_t u) const;
  /// u^(q-2). Throws DivisionByZero.
  std::uint32_t inv_by_power(std::uint32_t u) const;
  std::uint32_t pow(std::uint32_t u, std::uint64_t e) const noexcept;

  std::vector<std::uint32_t> coeffs(std::uint32_t code) const;

  friend bool operator==(const Field& lhs, const Field& rhs) noexcept {
    return lhs.p_ == rhs.p_ && lhs.kappa_ == rhs.kappa_;
  }

 private:
  Field(std::uint32_t p, std::uint32_t kappa, std::vector<std::uint32_t> modulus);

  std::uint32_t p_;
  std::uint32_t kappa_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
};

/// Monic polynomial over GF(p) (low degree first) has no factor of degree
/// 1..deg/2. Trial division by every monic candidate.
bool is_irreducible_over_prime_field(std::span<const std::uint32_t> poly, std::uint32_t p);

/// An element of a Field. Cheap to copy.
class Element {
 public:
  Element(const Field& field, std::uint32_t code) noexcept : field_(&field), code_(code) {}

  const Field& field() const noexcept { return *field_; }
  std::uint32_t encode() const noexcept { return code_; }
  std::vector<std::uint32_t> coeffs() const { return field_->coeffs(code_); }
  bool is_zero() const noexcept { return code_ == 0; }
  bool is_one() const noexcept { return code_ == 1; }

  Element inverse() const { return {*field_, field_->inv(code_)}; }
  Element inverse_by_power() const { return {*field_, field_->inv_by_power(code_)}; }
  Element pow(std::uint64_t e) const noexcept { return {*field_, field_->pow(code_, e)}; }

  Element operator-() const noexcept { return {*field_, field_->neg(code_)}; }
  friend Element operator+(const Element& u, const Element& v);
  friend Element operator-(const Element& u, const Element& v);
  friend Element operator*(const Element& u, const Element& v);
  friend Element operator/(const Element& u, const Element& v);
  Element& operator+=(const Element& v) { return *this = *this + v; }
  Element& operator-=(const Element& v) { return *this = *this - v; }
  Element& operator*=(const Element& v) { return *this = *this * v; }

  /// Equality across different fields is a FieldMismatch, not false.
  friend bool operator==(const Element& u, const Element& v);

 private:
  const Field* field_;
  std::uint32_t code_;
};

/// Throws FieldMismatch unless the two fields are the same GF(q).
void require_same_field(const Field& lhs, const Field& rhs);

/// True iff z^2 + a z + 1 has no root in the field (exhaustive scan).
bool quadratic_is_irreducible(const Field& field, const Element& a);

}  // namespace psl2ogs
