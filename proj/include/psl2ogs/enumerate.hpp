#pragma once

#include <cstdint>
#include <vector>

#include "psl2ogs/decomp.hpp"

namespace psl2ogs::enumeration {

/// Brute-force kernels scan all q^4 matrices; refuse anything larger.
inline constexpr std::uint32_t kMaxBruteForceOrder = 64;

/// Nonzero y with y = canonical_sign(y), in increasing encoding.
std::vector<Element> canonical_units(const Field& field);

/// Number of legal OgsForms: t * (1 or 2) * q * |canonical units|.
std::uint64_t legal_form_count(const SeqTables& tables);

/// The index-th legal form in (k, ell, x, y) lexicographic order.
/// Throws IndexOutOfRange.
OgsForm form_at(const SeqTables& tables, const std::vector<Element>& units, std::uint64_t index);

/// Injective key of a canonical matrix.
std::uint64_t pack(const ProjMatrix& m) noexcept;

struct Census {
  std::uint64_t forms;
  std::uint64_t distinct;
};

/// Sorts and deduplicates in place.
Census census(std::vector<std::uint64_t>& keys);

namespace serial {
/// Determinant-one matrices that are their own canonical representative.
/// Throws TooLarge above kMaxBruteForceOrder.
std::uint64_t count_psl2(const Field& field);
/// pack(ogs_compose(form_at(i))) for every legal form.
std::vector<std::uint64_t> compose_all(const SeqTables& tables);
}  // namespace serial

namespace parallel {
std::uint64_t count_psl2(const Field& field);
std::vector<std::uint64_t> compose_all(const SeqTables& tables);
}  // namespace parallel

}  // namespace psl2ogs::enumeration
