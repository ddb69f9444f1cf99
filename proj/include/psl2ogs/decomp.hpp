#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "psl2ogs/psl2.hpp"
#include "psl2ogs/seq.hpp"

namespace psl2ogs {

/// u(x) h(y), an element of the Borel subgroup.
struct InBorel {
  Element x;
  Element y;
  friend bool operator==(const InBorel&, const InBorel&) = default;
};

/// u(a_tilde) s u(x) h(y).
struct OutsideBorel {
  Element a_tilde;
  Element x;
  Element y;
  friend bool operator==(const OutsideBorel&, const OutsideBorel&) = default;
};

using BnForm = std::variant<InBorel, OutsideBorel>;

/// [u(a) s]^k [u(b) s u(-b)]^ell u(x) h(y).
struct OgsForm {
  std::uint64_t k;
  unsigned ell;
  Element x;
  Element y;
  friend bool operator==(const OgsForm&, const OgsForm&) = default;
};

/// Of {y, -y}, the one with the smaller encoding. Identity in characteristic 2.
Element canonical_sign(const Element& y);

ProjMatrix bn_realize(const BnForm& form);
BnForm bn_decompose(const ProjMatrix& m);

/// Throws IndexOutOfRange unless 0 <= k < t (k <= q in characteristic 2),
/// ell in {0, 1}, ell = 0 in characteristic 2, and y != 0.
void validate(const SeqTables& tables, const OgsForm& form);

/// Closed-form conversion through the sequence tables. Throws IndexOutOfRange.
BnForm ogs_to_bn(const SeqTables& tables, const OgsForm& form);
/// Throws InternalInvariantViolation if a_tilde is in neither table.
OgsForm bn_to_ogs(const SeqTables& tables, const BnForm& form);

/// Literal product of generator matrices. Throws IndexOutOfRange.
ProjMatrix ogs_compose(const SeqTables& tables, const OgsForm& form);
OgsForm matrix_to_ogs(const SeqTables& tables, const ProjMatrix& m);

struct PowerBn {
  std::uint64_t k;
  Element a_tilde;
  Element x;
  Element y;  // raw, not sign-canonical
};

struct PowerBnTables {
  std::vector<PowerBn> a_branch;  // [u(a)s]^k, k = 1..t-1
  std::vector<PowerBn> b_branch;  // [u(a)s]^k [u(b)s u(-b)], k = 0..t-1; empty in char 2
};

/// x_k = -alpha_{k-2} alpha_{k-1}, y_k = alpha_{k-1};
/// x'_k = -beta_{k-1} gamma_{k-1}, y'_k = beta_{k-1}.
PowerBnTables power_bn_forms(const SeqTables& tables);

}  // namespace psl2ogs
