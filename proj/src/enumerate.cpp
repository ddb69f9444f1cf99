#include "psl2ogs/enumerate.hpp"

#include <algorithm>
#include <string>

namespace psl2ogs::enumeration {

namespace {

void require_brute_force_size(const Field& field) {
  if (field.order() > kMaxBruteForceOrder)
    throw Error(ErrorCode::TooLarge, "brute-force enumeration needs q <= " +
                                         std::to_string(kMaxBruteForceOrder) + ", got " +
                                         std::to_string(field.order()));
}

// Field tables so the q^4 scan is lookups only.
struct Tables {
  std::uint32_t q;
  bool odd;
  std::vector<std::uint32_t> mul, sub, neg;

  explicit Tables(const Field& f) : q(f.order()), odd(!f.is_binary()), mul(q * q), sub(q * q), neg(q) {
    for (std::uint32_t u = 0; u < q; ++u) {
      neg[u] = f.neg(u);
      for (std::uint32_t v = 0; v < q; ++v) {
        mul[u * q + v] = f.mul(u, v);
        sub[u * q + v] = f.sub(u, v);
      }
    }
  }
};

// Counts self-canonical det-1 matrices with first row (a, b).
std::uint64_t count_row(const Tables& t, std::uint32_t a, std::uint32_t b) noexcept {
  const std::uint32_t q = t.q;
  // a and b cannot both vanish when det = 1
  const std::uint32_t lead = a != 0 ? a : b;
  if (t.odd && lead != 0 && t.neg[lead] < lead) return 0;
  std::uint64_t n = 0;
  for (std::uint32_t c = 0; c < q; ++c) {
    const std::uint32_t bc = t.mul[b * q + c];
    for (std::uint32_t d = 0; d < q; ++d)
      if (t.sub[t.mul[a * q + d] * q + bc] == 1) ++n;
  }
  return n;
}

// Literal products over all (x, y) for one (k, ell) prefix.
void compose_block(const SeqTables& tables, const std::vector<Element>& units, std::uint64_t block,
                   std::uint64_t* keys) {
  const Field& f = tables.field();
  const std::uint64_t per_block = std::uint64_t{f.order()} * units.size();
  const OgsForm first = form_at(tables, units, block * per_block);
  const ProjMatrix head = ogs_compose(tables, {first.k, first.ell, f.zero(), f.one()});
  for (std::uint32_t x = 0; x < f.order(); ++x) {
    const ProjMatrix hu = head * gen_u(f.element(x));
    for (std::size_t j = 0; j < units.size(); ++j) *keys++ = pack(hu * gen_h(units[j]));
  }
}

std::uint64_t block_count(const SeqTables& tables) { return tables.t() * (tables.has_b() ? 2 : 1); }

}  // namespace

std::vector<Element> canonical_units(const Field& field) {
  std::vector<Element> units;
  for (std::uint32_t code = 1; code < field.order(); ++code) {
    const Element y = field.element(code);
    if (canonical_sign(y) == y) units.push_back(y);
  }
  return units;
}

std::uint64_t legal_form_count(const SeqTables& tables) {
  const std::uint64_t q = tables.field().order();
  const std::uint64_t units = tables.has_b() ? (q - 1) / 2 : q - 1;
  return tables.t() * (tables.has_b() ? 2 : 1) * q * units;
}

OgsForm form_at(const SeqTables& tables, const std::vector<Element>& units, std::uint64_t index) {
  if (index >= legal_form_count(tables))
    throw Error(ErrorCode::IndexOutOfRange, "form index " + std::to_string(index));
  const Field& f = tables.field();
  const std::uint64_t n_y = units.size();
  const std::uint64_t n_x = f.order();
  const std::uint64_t n_ell = tables.has_b() ? 2 : 1;
  const Element& y = units[index % n_y];
  index /= n_y;
  const Element x = f.element(index % n_x);
  index /= n_x;
  const auto ell = static_cast<unsigned>(index % n_ell);
  return {index / n_ell, ell, x, y};
}

std::uint64_t pack(const ProjMatrix& m) noexcept {
  const std::uint64_t q = m.field().order();
  const auto& c = m.codes();
  return c[0] + q * (c[1] + q * (c[2] + q * c[3]));
}

Census census(std::vector<std::uint64_t>& keys) {
  const std::uint64_t forms = keys.size();
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return {forms, keys.size()};
}

namespace serial {

std::uint64_t count_psl2(const Field& field) {
  require_brute_force_size(field);
  const Tables t(field);
  std::uint64_t total = 0;
  for (std::uint32_t a = 0; a < t.q; ++a)
    for (std::uint32_t b = 0; b < t.q; ++b) total += count_row(t, a, b);
  return total;
}

std::vector<std::uint64_t> compose_all(const SeqTables& tables) {
  require_brute_force_size(tables.field());
  const auto units = canonical_units(tables.field());
  std::vector<std::uint64_t> keys(legal_form_count(tables));
  const std::uint64_t blocks = block_count(tables);
  const std::uint64_t per_block = keys.size() / blocks;
  for (std::uint64_t blk = 0; blk < blocks; ++blk) compose_block(tables, units, blk, keys.data() + blk * per_block);
  return keys;
}

}  // namespace serial

namespace parallel {

std::uint64_t count_psl2(const Field& field) {
  require_brute_force_size(field);
  const Tables t(field);
  const std::int64_t q = t.q;
  std::uint64_t total = 0;
#pragma omp parallel for collapse(2) reduction(+ : total) schedule(static)
  for (std::int64_t a = 0; a < q; ++a)
    for (std::int64_t b = 0; b < q; ++b)
      total += count_row(t, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
  return total;
}

std::vector<std::uint64_t> compose_all(const SeqTables& tables) {
  require_brute_force_size(tables.field());
  const auto units = canonical_units(tables.field());
  std::vector<std::uint64_t> keys(legal_form_count(tables));
  const auto blocks = static_cast<std::int64_t>(block_count(tables));
  const std::uint64_t per_block = keys.size() / static_cast<std::uint64_t>(blocks);
  // blocks write disjoint ranges; the tables are only read
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t blk = 0; blk < blocks; ++blk)
    compose_block(tables, units, static_cast<std::uint64_t>(blk),
                  keys.data() + static_cast<std::uint64_t>(blk) * per_block);
  return keys;
}

}  // namespace parallel

}  // namespace psl2ogs::enumeration
