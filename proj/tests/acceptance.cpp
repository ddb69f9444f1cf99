// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "psl2ogs/enumerate.hpp"
#include "psl2ogs/verify.hpp"

using namespace psl2ogs;

namespace {

// Runtime ceilings in seconds.
constexpr double kTablesBudget = 1.0;
constexpr double kConversionBudget = 1.0;
constexpr double kBijectionBudget = 30.0;
constexpr double kIdentityBudget = 60.0;

const std::vector<std::uint64_t> kTestedQ{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32};

struct Verdict {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void report(int id, const std::string& title, double budget, const std::function<Verdict()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget > 0 && secs >= budget) v.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(budget) + " s");
  if (!v.ok) ++failures;
  std::printf("%s %d %s (%.3f s)%s%s\n", v.ok ? "PASS" : "FAIL", id, title.c_str(), secs, v.ok ? "" : ": ",
              v.detail.c_str());
}

std::string capture(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed: " + cmd);
  std::string out;
  std::array<char, 4096> buf;
  while (const std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  if (pclose(pipe) != 0) throw std::runtime_error("non-zero exit: " + cmd);
  return out;
}

// Column values of the rows whose cell is non-empty, in row order.
std::vector<std::vector<std::string>> tsv_columns(const std::string& text) {
  std::vector<std::vector<std::string>> cols(6);
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string cell;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (!std::getline(row, cell, '\t')) cell.clear();
      if (!cell.empty()) cols[c].push_back(cell);
    }
  }
  return cols;
}

std::vector<std::string> words(std::initializer_list<int> xs) {
  std::vector<std::string> out;
  for (int x : xs) out.push_back(std::to_string(x));
  return out;
}

Verdict tables_q29() {
  Verdict v;
  const auto cols = tsv_columns(capture(std::string(PSL2OGS_CLI) + " tables --q 29"));
  if (cols[1] != words({4, 11, 25, 26, 14, 6, 28, 5, 27, 19, 7, 8, 22, 0})) v.fail("a_k differs");
  if (cols[2] != words({1, 3, 23, 9, 20, 17, 21, 15, 2, 18, 12, 16, 13, 24, 10})) v.fail("b_k differs");
  if (cols[3] != words({0, 1, 4, 15, 27, 6, 26, 11, 18, 3, 23, 2, 14, 25, 28, 0})) v.fail("alpha differs");
  if (cols[4] != words({1, 1, 3, 11, 12, 8, 20, 14, 7, 14, 20, 8, 12, 11, 3, 1})) v.fail("beta differs");
  return v;
}

Verdict conversions_q29() {
  Verdict v;
  const auto f = Field::of_order(29);
  const SeqTables tables = SeqTables::build(f);
  auto e = [&](std::uint64_t c) { return f->element(c); };
  struct Row {
    OgsForm ogs;
    OutsideBorel bn;
  };
  const Row rows[] = {
      {{5, 0, e(7), e(9)}, {e(14), e(3), e(4)}},
      {{6, 0, e(27), e(3)}, {e(6), e(0), e(9)}},
      {{7, 1, e(10), e(3)}, {e(15), e(15), e(13)}},
      {{7, 1, e(8), e(5)}, {e(15), e(0), e(12)}},
  };
  for (const Row& r : rows) {
    const std::string at = "(k=" + std::to_string(r.ogs.k) + ", ell=" + std::to_string(r.ogs.ell) + ")";
    if (ogs_to_bn(tables, r.ogs) != BnForm(r.bn)) v.fail("ogs_to_bn " + at);
    if (bn_to_ogs(tables, r.bn) != r.ogs) v.fail("bn_to_ogs " + at);
    if (bn_decompose(ogs_compose(tables, r.ogs)) != BnForm(r.bn)) v.fail("matrix product " + at);
  }
  return v;
}

Verdict bijection() {
  Verdict v;
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
    const SeqTables tables = SeqTables::build(Field::of_order(q));
    const std::uint64_t expected = enumeration::parallel::count_psl2(tables.field());
    auto keys = enumeration::parallel::compose_all(tables);
    const enumeration::Census c = enumeration::census(keys);
    if (c.distinct != expected || c.forms != c.distinct)
      v.fail("q=" + std::to_string(q) + ": " + std::to_string(c.forms) + " forms, " + std::to_string(c.distinct) +
             " distinct, brute force " + std::to_string(expected));
  }
  return v;
}

Verdict identities() {
  Verdict v;
  for (std::uint64_t q : kTestedQ)
    for (Suite s : {Suite::Sequences, Suite::Identities, Suite::Conversion})
      for (const CheckResult& c : run_suite(q, s).checks) {
        if (c.passed()) continue;
        std::string why = "q=" + std::to_string(q) + " " + c.name;
        if (c.counterexample) {
          for (const auto& [name, value] : c.counterexample->inputs) why += " " + name + "=" + std::to_string(value);
          why += ": expected " + c.counterexample->expected + ", got " + c.counterexample->actual;
        }
        if (v.ok) v.detail = why;
        else v.detail += "; " + why;
        v.ok = false;
      }
  return v;
}

Verdict order_law() {
  Verdict v;
  for (std::uint64_t q : kTestedQ) {
    const auto f = Field::of_order(q);
    const OgsParams p = make_params(f);
    const std::uint64_t t = (q + 1) / (q % 2 == 1 ? 2 : 1);
    if (element_order(gen_u(p.a) * gen_s(*f)) != t) v.fail("PSL2 order, q=" + std::to_string(q));
    if (sl2_order_of_us(*f, p.a) != q + 1) v.fail("SL2 order, q=" + std::to_string(q));
  }
  return v;
}

// a_tilde of every coset representative, read off the literal matrix
// products, must hit each field element exactly once.
Verdict covering() {
  Verdict v;
  for (std::uint64_t q : kTestedQ) {
    const auto f = Field::of_order(q);
    const SeqTables tables = SeqTables::build(f);
    std::vector<int> hits(q, 0);
    const unsigned ells = tables.has_b() ? 2 : 1;
    for (unsigned ell = 0; ell < ells; ++ell)
      for (std::uint64_t k = 0; k < tables.t(); ++k) {
        const BnForm bn = bn_decompose(ogs_compose(tables, {k, ell, f->zero(), f->one()}));
        if (const auto* out = std::get_if<OutsideBorel>(&bn)) ++hits[out->a_tilde.encode()];
      }
    for (std::uint64_t x = 0; x < q; ++x)
      if (hits[x] != 1)
        v.fail("q=" + std::to_string(q) + ": a_tilde=" + std::to_string(x) + " hit " + std::to_string(hits[x]) +
               " times");
  }
  return v;
}

}  // namespace

int main() {
  report(1, "sequence tables for q=29", kTablesBudget, tables_q29);
  report(2, "q=29 conversion examples in both directions", kConversionBudget, conversions_q29);
  report(3, "unique presentation against brute-force count", kBijectionBudget, bijection);
  report(4, "identity suites over all tested q", kIdentityBudget, identities);
  report(5, "order of u(a)s", 0, order_law);
  report(6, "coset representatives cover the field", 0, covering);
  return failures;
}
