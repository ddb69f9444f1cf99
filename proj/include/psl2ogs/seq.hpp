#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "psl2ogs/check.hpp"
#include "psl2ogs/gf.hpp"

namespace psl2ogs {

/// A finite sequence whose first index need not be zero. The recursive
/// sequences start at different places (a_1, b_0, alpha_{-1}); indexing
/// through this type keeps every caller on the mathematical index.
class OffsetSeq {
 public:
  OffsetSeq(std::int64_t first, std::vector<Element> values)
      : first_(first), values_(std::move(values)) {}

  std::int64_t first() const noexcept { return first_; }
  std::int64_t last() const noexcept { return first_ + static_cast<std::int64_t>(values_.size()) - 1; }
  std::size_t size() const noexcept { return values_.size(); }
  bool contains(std::int64_t index) const noexcept { return index >= first_ && index <= last(); }

  /// Throws IndexOutOfRange.
  const Element& operator[](std::int64_t index) const;

  const std::vector<Element>& values() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

 private:
  std::int64_t first_;
  std::vector<Element> values_;
};

/// (q + 1) / gcd(2, q + 1): the order of u(a)s in PSL2(q).
std::uint64_t coset_period(const Field& field) noexcept;

/// lambda^2 + a lambda + 1 is irreducible and u(a)s has order q + 1 in SL2(q).
bool a_is_valid(const Field& field, const Element& a);

/// Encoding-smallest valid a. Throws NoValidA.
Element select_a(const Field& field);

/// a_1 = a, a_{k+1} = a - 1/a_k, for k up to t - 1. Result is indexed from 1.
/// Throws InternalInvariantViolation if a term vanishes early or a_{t-1} != 0.
OffsetSeq a_sequence(const Element& a, std::uint64_t t);

/// 1 if 1 is not among a_1..a_{t-1}, else -1. An override is validated
/// instead. Throws NotOddCharacteristic, InvalidB.
Element select_b(const Field& field, const OffsetSeq& a_seq,
                 const std::optional<Element>& override_b = std::nullopt);

/// b_0 = b, b_{l+1} = a - 1/b_l, for l up to t - 1; checks a - 1/b_{t-1} = b.
/// Throws InternalInvariantViolation.
OffsetSeq b_sequence(const Element& a, const Element& b, std::uint64_t t);

/// alpha_{-1} = 0, alpha_0 = 1, alpha_{k+1} = a alpha_k - alpha_{k-1}.
/// Throws InternalInvariantViolation if alpha_{t-1} != 0.
OffsetSeq alpha_recursive(const Element& a, std::uint64_t t);

struct OgsParams {
  std::shared_ptr<const Field> field;
  Element a;
  std::optional<Element> b;  // absent iff characteristic 2
  std::uint64_t t;
};

/// Selects or validates a and b. Throws InvalidA, InvalidB,
/// NotOddCharacteristic (b given in characteristic 2).
OgsParams make_params(std::shared_ptr<const Field> field,
                      const std::optional<Element>& override_a = std::nullopt,
                      const std::optional<Element>& override_b = std::nullopt);

/// Second-kind Dickson value E_k(a, 1) from its binomial sum, with the
/// binomial coefficients computed as exact integers. -1 <= k <= t - 1.
Element alpha_closed_form(const OgsParams& params, std::int64_t k);

/// Chebyshev U_k(a / 2) by its own three-term recurrence. Odd q only;
/// throws EvenCharacteristic otherwise.
Element alpha_chebyshev(const OgsParams& params, std::int64_t k);

struct BetaGamma {
  OffsetSeq beta;   // beta_{-1}..beta_{t-1}
  OffsetSeq gamma;  // gamma_{-1}..gamma_{t-1}
};

/// beta_{-1} = 1, beta_k = b alpha_k - alpha_{k-1}; gamma_r = alpha_r + b beta_r.
BetaGamma beta_gamma(const OgsParams& params, const OffsetSeq& alpha);

enum class CosetBranch { APower, BPower };

struct CosetSlot {
  CosetBranch branch;
  std::uint64_t k;
};

/// Every sequence derived from one (field, a, b) choice. Immutable.
class SeqTables {
 public:
  explicit SeqTables(OgsParams params);

  static SeqTables build(std::shared_ptr<const Field> field,
                         const std::optional<Element>& override_a = std::nullopt,
                         const std::optional<Element>& override_b = std::nullopt) {
    return SeqTables(make_params(std::move(field), override_a, override_b));
  }

  const OgsParams& params() const noexcept { return params_; }
  const Field& field() const noexcept { return *params_.field; }
  std::uint64_t t() const noexcept { return params_.t; }
  const Element& a() const noexcept { return params_.a; }
  bool has_b() const noexcept { return params_.b.has_value(); }
  /// Throws NotOddCharacteristic in characteristic 2.
  const Element& b() const;

  const OffsetSeq& a_seq() const noexcept { return a_seq_; }
  const OffsetSeq& alpha() const noexcept { return alpha_; }
  // The next three throw NotOddCharacteristic in characteristic 2.
  const OffsetSeq& b_seq() const;
  const OffsetSeq& beta() const;
  const OffsetSeq& gamma() const;

  /// Which coset representative has BN coordinate a_tilde. Throws
  /// InternalInvariantViolation if no sequence term equals it.
  CosetSlot coset_of(const Element& a_tilde) const;

 private:
  OgsParams params_;
  OffsetSeq a_seq_;
  OffsetSeq alpha_;
  std::optional<OffsetSeq> b_seq_;
  std::optional<BetaGamma> beta_gamma_;
  std::vector<std::optional<CosetSlot>> coset_index_;
};

/// Checks the four product/quotient relations between a_k, b_l and
/// alpha, beta. Each entry reports its first counterexample.
std::vector<CheckResult> product_formulas(const SeqTables& tables);

}  // namespace psl2ogs
