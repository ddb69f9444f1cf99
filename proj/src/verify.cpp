#include "psl2ogs/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <random>
#include <variant>

#include "psl2ogs/enumerate.hpp"

namespace psl2ogs {

namespace {

using Rng = std::mt19937_64;
using Inputs = std::vector<std::pair<std::string, std::int64_t>>;

struct Pass {};
struct Skip {
  std::string reason;
};
using Outcome = std::variant<Pass, Counterexample, Skip>;

constexpr std::uint32_t kExhaustiveMatrixOrder = 13;
constexpr std::uint32_t kExhaustiveCosetOrder = 7;
constexpr int kSamples = 512;

std::string str(const Element& e) { return std::to_string(e.encode()); }

std::string str(const ProjMatrix& m) {
  const auto& c = m.codes();
  return "[" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) +
         "," + std::to_string(c[3]) + "]";
}

std::string str(const BnForm& form) {
  if (const auto* in = std::get_if<InBorel>(&form))
    return "u(" + str(in->x) + ") h(" + str(in->y) + ")";
  const auto& out = std::get<OutsideBorel>(form);
  return "u(" + str(out.a_tilde) + ") s u(" + str(out.x) + ") h(" + str(out.y) + ")";
}

std::string str(const OgsForm& form) {
  return "(k=" + std::to_string(form.k) + ", ell=" + std::to_string(form.ell) +
         ", x=" + str(form.x) + ", y=" + str(form.y) + ")";
}

std::string str(bool b) { return b ? "true" : "false"; }
std::string str(std::uint64_t n) { return std::to_string(n); }

Inputs inputs_of(const OgsForm& form) {
  return {{"k", static_cast<std::int64_t>(form.k)},
          {"ell", form.ell},
          {"x", form.x.encode()},
          {"y", form.y.encode()}};
}

Inputs inputs_of(const ProjMatrix& m) {
  const auto& c = m.codes();
  return {{"m11", c[0]}, {"m12", c[1]}, {"m21", c[2]}, {"m22", c[3]}};
}

template <class T>
std::optional<Counterexample> mismatch(Inputs inputs, const T& expected, const T& actual) {
  if (expected == actual) return std::nullopt;
  return Counterexample{std::move(inputs), str(expected), str(actual)};
}

std::optional<Counterexample> violated(bool ok, Inputs inputs, std::string expected,
                                       std::string actual) {
  if (ok) return std::nullopt;
  return Counterexample{std::move(inputs), std::move(expected), std::move(actual)};
}

std::uint64_t fnv1a(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

class Context {
 public:
  explicit Context(std::uint64_t q) : field_(Field::of_order(q)) {}

  const Field& field() const noexcept { return *field_; }
  std::uint64_t q() const noexcept { return field_->order(); }
  bool odd() const noexcept { return !field_->is_binary(); }
  Element el(std::uint64_t code) const { return field_->element(code); }

  const SeqTables& tables() {
    if (!tables_) tables_.emplace(SeqTables::build(field_));
    return *tables_;
  }

  Rng rng_for(std::string_view name) const { return Rng(fnv1a(name) ^ (q() * 0x9e3779b97f4a7c15ull)); }

  Element random(Rng& rng) const {
    return el(std::uniform_int_distribution<std::uint32_t>(0, field_->order() - 1)(rng));
  }
  Element random_unit(Rng& rng) const {
    return el(std::uniform_int_distribution<std::uint32_t>(1, field_->order() - 1)(rng));
  }
  ProjMatrix random_matrix(Rng& rng) const {
    const ProjMatrix tail = gen_u(random(rng)) * gen_h(random_unit(rng));
    if (rng() % 4 == 0) return tail;
    return gen_u(random(rng)) * gen_s(*field_) * tail;
  }

  /// Every element for small q, a fixed-seed sample otherwise.
  std::vector<ProjMatrix> matrices(Rng& rng) {
    if (q() <= kExhaustiveMatrixOrder) return all_elements();
    std::vector<ProjMatrix> out;
    for (int i = 0; i < kSamples; ++i) out.push_back(random_matrix(rng));
    return out;
  }

  const std::vector<ProjMatrix>& all_elements() {
    if (!elements_) {
      const Field& f = *field_;
      const std::uint32_t n = f.order();
      std::vector<ProjMatrix> out;
      for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
          for (std::uint32_t c = 0; c < n; ++c)
            for (std::uint32_t d = 0; d < n; ++d) {
              if (f.sub(f.mul(a, d), f.mul(b, c)) != 1) continue;
              ProjMatrix m = ProjMatrix::from_codes(f, {a, b, c, d});
              if (m.codes() == std::array<std::uint32_t, 4>{a, b, c, d}) out.push_back(m);
            }
      elements_ = std::move(out);
    }
    return *elements_;
  }

  /// Every legal OGS form when there are few enough, a sample otherwise.
  std::vector<OgsForm> forms(Rng& rng) {
    const SeqTables& t = tables();
    const auto units = enumeration::canonical_units(field());
    const std::uint64_t n = enumeration::legal_form_count(t);
    std::vector<OgsForm> out;
    if (n <= kExhaustiveFormLimit) {
      for (std::uint64_t i = 0; i < n; ++i) out.push_back(enumeration::form_at(t, units, i));
    } else {
      std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
      for (int i = 0; i < 8 * kSamples; ++i) out.push_back(enumeration::form_at(t, units, pick(rng)));
    }
    return out;
  }

 private:
  std::shared_ptr<const Field> field_;
  std::optional<SeqTables> tables_;
  std::optional<std::vector<ProjMatrix>> elements_;
};

Outcome char2_skip() { return Skip{"char 2"}; }

Outcome from(std::optional<Counterexample> cx) {
  if (cx) return *cx;
  return Pass{};
}

ProjMatrix us_of(const SeqTables& t) { return gen_u(t.a()) * gen_s(t.field()); }

// [u(a)s]^k [u(b) s u(-b)] by matrices only.
ProjMatrix b_power(const SeqTables& t, std::uint64_t k) {
  const ProjMatrix s = gen_s(t.field());
  return ppow(us_of(t), k) * gen_u(t.b()) * s * gen_u(-t.b());
}

// ---------------------------------------------------------------- field

Outcome field_axioms(Context& c, Rng& rng) {
  const Field& f = c.field();
  for (int i = 0; i < kSamples; ++i) {
    const Element u = c.random(rng), v = c.random(rng), w = c.random(rng);
    const Inputs in{{"u", u.encode()}, {"v", v.encode()}, {"w", w.encode()}};
    if (auto cx = mismatch(in, u + (v + w), (u + v) + w)) return *cx;
    if (auto cx = mismatch(in, u * (v * w), (u * v) * w)) return *cx;
    if (auto cx = mismatch(in, v + u, u + v)) return *cx;
    if (auto cx = mismatch(in, v * u, u * v)) return *cx;
    if (auto cx = mismatch(in, u * v + u * w, u * (v + w))) return *cx;
    if (auto cx = mismatch(in, f.zero(), u + (-u))) return *cx;
    if (auto cx = mismatch(in, u + (-v), u - v)) return *cx;
    if (auto cx = mismatch(in, u, u + f.zero())) return *cx;
    if (auto cx = mismatch(in, u, u * f.one())) return *cx;
    if (!u.is_zero())
      if (auto cx = mismatch(in, f.one(), u * u.inverse())) return *cx;
  }
  return Pass{};
}

Outcome field_inverse_methods_agree(Context& c, Rng&) {
  for (std::uint32_t code = 1; code < c.q(); ++code) {
    const Element u = c.el(code);
    if (auto cx = mismatch({{"u", code}}, u.inverse_by_power(), u.inverse())) return *cx;
    if (auto cx = mismatch({{"u", code}}, c.field().one(), u * u.inverse())) return *cx;
  }
  return Pass{};
}

Outcome field_encode_decode_roundtrip(Context& c, Rng&) {
  const Field& f = c.field();
  for (std::uint32_t n = 0; n < c.q(); ++n) {
    const Element e = c.el(n);
    const auto coeffs = e.coeffs();
    std::uint64_t value = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) value = value * f.characteristic() + coeffs[i];
    if (auto cx = violated(coeffs.size() == f.degree() && value == n, {{"n", n}}, str(std::uint64_t{n}),
                           str(value)))
      return *cx;
    if (auto cx = mismatch({{"n", n}}, std::uint64_t{n}, std::uint64_t{f.from_coeffs(coeffs).encode()}))
      return *cx;
  }
  return Pass{};
}

Outcome field_modulus_irreducible(Context& c, Rng&) {
  const Field& f = c.field();
  const std::uint32_t p = f.characteristic();
  const std::uint32_t kappa = f.degree();
  const auto modulus = f.modulus();
  if (kappa == 1)
    return from(violated(modulus.size() == 2 && modulus[0] == 0 && modulus[1] == 1, {},
                         "prime field placeholder [0,1]", "other"));
  if (modulus.size() != kappa + 1 || modulus[kappa] != 1)
    return Counterexample{{{"kappa", kappa}}, "monic of degree kappa", "malformed modulus"};
  if (!is_irreducible_over_prime_field(modulus, p))
    return Counterexample{{{"kappa", kappa}}, "irreducible modulus", "reducible"};
  for (std::uint32_t r = 0; r < p; ++r) {
    std::uint64_t value = 0;
    for (std::size_t i = modulus.size(); i-- > 0;) value = (value * r + modulus[i]) % p;
    if (value == 0) return Counterexample{{{"root", r}}, "no root in GF(p)", "root"};
  }
  // no monic irreducible with smaller lower coefficients
  std::uint64_t code = 0;
  for (std::size_t i = kappa; i-- > 0;) code = code * p + modulus[i];
  std::vector<std::uint32_t> candidate(kappa + 1);
  candidate[kappa] = 1;
  for (std::uint64_t smaller = 0; smaller < code; ++smaller) {
    std::uint64_t rest = smaller;
    for (std::uint32_t i = 0; i < kappa; ++i) {
      candidate[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (is_irreducible_over_prime_field(candidate, p))
      return Counterexample{{{"candidate", static_cast<std::int64_t>(smaller)}},
                            "reducible (modulus " + str(code) + " is smallest)", "irreducible"};
  }
  return Pass{};
}

Outcome field_quadratic_irreducibility_oracle(Context& c, Rng&) {
  // lambda^2 + a lambda + 1 = (lambda - r)(lambda - 1/r) iff a = -(r + 1/r)
  std::vector<bool> splits(c.q(), false);
  for (std::uint32_t code = 1; code < c.q(); ++code) {
    const Element r = c.el(code);
    splits[(-(r + r.inverse())).encode()] = true;
  }
  for (std::uint32_t code = 0; code < c.q(); ++code)
    if (auto cx = mismatch({{"a", code}}, !splits[code], quadratic_is_irreducible(c.field(), c.el(code))))
      return *cx;
  return Pass{};
}

// ---------------------------------------------------------------- matrix

Outcome matrix_determinant_one(Context& c, Rng& rng) {
  const Element one = c.field().one();
  for (const ProjMatrix& m : c.matrices(rng)) {
    const ProjMatrix n = c.random_matrix(rng);
    if (auto cx = mismatch(inputs_of(m), one, m.det())) return *cx;
    if (auto cx = mismatch(inputs_of(m), one, m.inverse().det())) return *cx;
    if (auto cx = mismatch(inputs_of(m), one, (m * n).det())) return *cx;
    if (auto cx = mismatch(inputs_of(m), one, ppow(m, 3).det())) return *cx;
  }
  return Pass{};
}

Outcome matrix_canonical_form(Context& c, Rng& rng) {
  for (const ProjMatrix& m : c.matrices(rng)) {
    const ProjMatrix negated = ProjMatrix::from_entries(-m.m11(), -m.m12(), -m.m21(), -m.m22());
    if (auto cx = mismatch(inputs_of(m), m, negated)) return *cx;
    const auto& codes = m.codes();
    const ProjMatrix again = ProjMatrix::from_codes(c.field(), {codes[0], codes[1], codes[2], codes[3]});
    if (auto cx = violated(again.codes() == codes, inputs_of(m), str(m), str(again))) return *cx;
    if (c.odd()) {
      const auto lead = *std::find_if(codes.begin(), codes.end(), [](auto v) { return v != 0; });
      if (auto cx = violated(lead < c.field().neg(lead), inputs_of(m), "first nonzero e < -e",
                             std::to_string(lead)))
        return *cx;
    }
  }
  return Pass{};
}

Outcome matrix_group_axioms(Context& c, Rng& rng) {
  const ProjMatrix id = ProjMatrix::identity(c.field());
  for (int i = 0; i < kSamples; ++i) {
    const ProjMatrix a = c.random_matrix(rng), b = c.random_matrix(rng), d = c.random_matrix(rng);
    const Inputs in = inputs_of(a);
    if (auto cx = mismatch(in, a * (b * d), (a * b) * d)) return *cx;
    if (auto cx = mismatch(in, a, a * id)) return *cx;
    if (auto cx = mismatch(in, a, id * a)) return *cx;
    if (auto cx = mismatch(in, id, a * a.inverse())) return *cx;
    const ProjMatrix formula = ProjMatrix::from_entries(a.m22(), -a.m12(), -a.m21(), a.m11());
    if (auto cx = mismatch(in, formula, a.inverse())) return *cx;
  }
  return Pass{};
}

Outcome matrix_generator_relations(Context& c, Rng& rng) {
  const Field& f = c.field();
  const ProjMatrix s = gen_s(f);
  if (auto cx = mismatch({}, ProjMatrix::identity(f), s * s)) return *cx;

  std::vector<std::pair<Element, Element>> pairs;
  if (c.q() <= kExhaustiveMatrixOrder) {
    for (std::uint32_t i = 0; i < c.q(); ++i)
      for (std::uint32_t j = 0; j < c.q(); ++j) pairs.emplace_back(c.el(i), c.el(j));
  } else {
    for (int i = 0; i < kSamples; ++i) pairs.emplace_back(c.random(rng), c.random(rng));
  }
  for (const auto& [v, w] : pairs) {
    const Inputs in{{"v", v.encode()}, {"w", w.encode()}};
    if (auto cx = mismatch(in, gen_u(v + w), gen_u(v) * gen_u(w))) return *cx;
    if (w.is_zero()) continue;
    // v plays x, w plays y
    if (auto cx = mismatch(in, gen_u(v * w * w) * gen_h(w), gen_h(w) * gen_u(v))) return *cx;
    if (auto cx = mismatch(in, gen_h(w.inverse()) * s, s * gen_h(w))) return *cx;
    if (!v.is_zero()) {
      if (auto cx = mismatch(in, gen_h(v * w), gen_h(v) * gen_h(w))) return *cx;
      if (auto cx = mismatch(in, gen_u(-v.inverse()) * s * gen_u(-v) * gen_h(v), s * gen_u(v) * s))
        return *cx;
    }
  }
  return Pass{};
}

Outcome matrix_coset_order(Context& c, Rng&) {
  const Field& f = c.field();
  const std::uint64_t q = c.q();
  const std::uint64_t t = (q + 1) / std::gcd<std::uint64_t>(2, q + 1);
  for (std::uint32_t code = 0; code < q; ++code) {
    const Element a = c.el(code);
    if (!a_is_valid(f, a)) continue;
    const ProjMatrix us = gen_u(a) * gen_s(f);
    if (auto cx = mismatch({{"a", code}}, t, element_order(us))) return *cx;
    if (auto cx = mismatch({{"a", code}}, q + 1, sl2_order_of_us(f, a))) return *cx;
  }
  const SeqTables& tables = c.tables();
  if (auto cx = mismatch({{"a", tables.a().encode()}}, t, tables.t())) return *cx;
  return Pass{};
}

Outcome matrix_valid_a_characterization(Context& c, Rng&) {
  const Field& f = c.field();
  std::optional<std::uint32_t> first;
  for (std::uint32_t code = 0; code < c.q(); ++code) {
    const Element a = c.el(code);
    const bool full_order = sl2_order_of_us(f, a) == c.q() + 1;
    // a root of order q + 1 cannot lie in GF(q)
    if (full_order)
      if (auto cx = violated(quadratic_is_irreducible(f, a), {{"a", code}}, "irreducible", "reducible"))
        return *cx;
    if (auto cx = mismatch({{"a", code}}, full_order, a_is_valid(f, a))) return *cx;
    if (full_order && !first) first = code;
  }
  if (!first) return Counterexample{{}, "some admissible a", "none"};
  return from(mismatch({}, std::uint64_t{*first}, std::uint64_t{select_a(f).encode()}));
}

// ---------------------------------------------------------------- sequences

Outcome sequences_a_recursion_vs_matrix(Context& c, Rng&) {
  const SeqTables& t = c.tables();
  const auto& a = t.a_seq();
  if (auto cx = mismatch({{"k", 1}}, t.a(), a[1])) return *cx;
  for (std::int64_t k = 1; k <= a.last(); ++k) {
    const BnForm oracle = oracle_bn_of_power(t.params(), static_cast<std::uint64_t>(k));
    const auto* out = std::get_if<OutsideBorel>(&oracle);
    if (!out) return Counterexample{{{"k", k}}, "outside B", str(oracle)};
    if (auto cx = mismatch({{"k", k}}, out->a_tilde, a[k])) return *cx;
  }
  return Pass{};
}

Outcome sequences_a_last_term_zero(Context& c, Rng&) {
  const SeqTables& t = c.tables();
  const auto& a = t.a_seq();
  const auto last = static_cast<std::int64_t>(t.t()) - 1;
  if (a.last() != last)
    return Counterexample{{}, "a_1..a_" + std::to_string(last), "a_1..a_" + std::to_string(a.last())};
  if (auto cx = mismatch({{"k", last}}, c.field().zero(), a[last])) return *cx;
  for (std::int64_t k = 1; k < last; ++k)
    if (auto cx = violated(!a[k].is_zero(), {{"k", k}}, "nonzero", "0")) return *cx;
  const ProjMatrix inverse = gen_s(c.field()) * gen_u(-t.a());
  return from(mismatch({{"k", last}}, inverse, ppow(us_of(t), t.t() - 1)));
}

Outcome sequences_b_recursion_vs_matrix(Context& c, Rng&) {
  if (!c.odd()) return char2_skip();
  const SeqTables& t = c.tables();
  const auto& b = t.b_seq();
  for (std::int64_t k = 0; k <= b.last(); ++k) {
    const BnForm oracle = bn_decompose(b_power(t, static_cast<std::uint64_t>(k)));
    const auto* out = std::get_if<OutsideBorel>(&oracle);
    if (!out) return Counterexample{{{"k", k}}, "outside B", str(oracle)};
    if (auto cx = mismatch({{"k", k}}, out->a_tilde, b[k])) return *cx;
  }
  return from(mismatch({{"l", b.last()}}, t.b(), t.a() - b[b.last()].inverse()));
}

Outcome sequences_b_choice(Context& c, Rng&) {
  if (!c.odd()) return char2_skip();
  const SeqTables& t = c.tables();
  const Element one = c.field().one();
  bool one_taken = false;
  for (const Element& ak : t.a_seq()) {
    if (auto cx = violated(!(ak == t.b()), {{"b", t.b().encode()}}, "b outside a_1..a_{t-1}", str(ak)))
      return *cx;
    one_taken = one_taken || ak == one;
  }
  if (auto cx = mismatch({}, one_taken ? -one : one, t.b())) return *cx;
  const ProjMatrix ubs = gen_u(t.b()) * gen_s(c.field());
  for (std::uint64_t k = 0; k < t.t(); ++k) {
    const ProjMatrix rel = ppow(us_of(t), k).inverse() * ubs;
    if (auto cx = violated(!in_borel(rel), {{"k", static_cast<std::int64_t>(k)}},
                           "u(b)s outside [u(a)s]^k B", str(rel)))
      return *cx;
  }
  return Pass{};
}

Outcome sequences_product_formulas(Context& c, Rng&) {
  for (CheckResult& r : product_formulas(c.tables())) {
    if (r.status != CheckStatus::Fail) continue;
    Counterexample cx = *r.counterexample;
    cx.expected = r.name + ": " + cx.expected;
    return cx;
  }
  return Pass{};
}

Outcome sequences_covering(Context& c, Rng&) {
  const SeqTables& t = c.tables();
  std::vector<int> hits(c.q(), 0);
  for (const Element& e : t.a_seq()) ++hits[e.encode()];
  if (t.has_b())
    for (const Element& e : t.b_seq()) ++hits[e.encode()];
  for (std::uint32_t code = 0; code < c.q(); ++code)
    if (auto cx = violated(hits[code] == 1, {{"element", code}}, "exactly once",
                           std::to_string(hits[code]) + " times"))
      return *cx;
  return Pass{};
}

Outcome sequences_reciprocal_pairs(Context& c, Rng&) {
  const SeqTables& t = c.tables();
  const auto& a = t.a_seq();
  const auto n = static_cast<std::int64_t>(t.t());
  for (std::int64_t k = 1; k <= n - 2; ++k)
    if (auto cx = mismatch({{"k", k}}, c.field().one(), a[k] * a[n - k - 1])) return *cx;
  return Pass{};
}

Outcome sequences_complement_sums(Context& c, Rng&) {
  const SeqTables& t = c.tables();
  const auto& a = t.a_seq();
  const auto n = static_cast<std::int64_t>(t.t());
  for (std::int64_t k = 1; k <= n - 1; ++k)
    if (auto cx = mismatch({{"k", k}}, t.a(), a[k] + a[n - k])) return *cx;
  return Pass{};
}

Outcome sequences_alpha_three_way(Context& c, Rng&) {
  const SeqTables& t = c.tables();
  const auto& alpha = t.alpha();
  for (std::int64_t k = -1; k <= alpha.last(); ++k) {
    if (auto cx = mismatch({{"k", k}}, alpha[k], alpha_closed_form(t.params(), k))) return *cx;
    if (c.odd())
      if (auto cx = mismatch({{"k", k}}, alpha[k], alpha_chebyshev(t.params(), k))) return *cx;
  }
  return Pass{};
}

Outcome sequences_beta_gamma_definitions(Context& c, Rng&) {
  if (!c.odd()) return char2_skip();
  const SeqTables& t = c.tables();
  const Element& b = t.b();
  const auto& beta = t.beta();
  const auto& gamma = t.gamma();
  if (auto cx = mismatch({{"r", -1}}, c.field().one(), beta[-1])) return *cx;
  if (auto cx = mismatch({{"r", 0}}, b, beta[0])) return *cx;
  if (auto cx = mismatch({{"r", -1}}, b, gamma[-1])) return *cx;
  for (std::int64_t k = 0; k <= beta.last(); ++k) {
    const Element expected =
        b * alpha_closed_form(t.params(), k) - alpha_closed_form(t.params(), k - 1);
    if (auto cx = mismatch({{"r", k}}, expected, beta[k])) return *cx;
  }
  for (std::int64_t r = -1; r <= gamma.last(); ++r)
    if (auto cx = mismatch({{"r", r}}, t.alpha()[r] + b * beta[r], gamma[r])) return *cx;
  return Pass{};
}

// ---------------------------------------------------------------- identities

Outcome identities_midpoint_value(Context& c, Rng&) {
  const SeqTables& t = c.tables();
  const auto& a = t.a_seq();
  const Field& f = c.field();
  const std::uint64_t q = c.q();
  if (!c.odd())
    return from(mismatch({{"k", static_cast<std::int64_t>(q / 2)}}, f.one(), a[q / 2]));
  if ((q - 1) % 4 == 0) {
    const auto k = static_cast<std::int64_t>((q - 1) / 4);
    const Element v = a[k];
    return from(violated(v.is_one() || (-v).is_one(), {{"k", k}}, "1 or -1", str(v)));
  }
  const auto k = static_cast<std::int64_t>((q + 1) / 4);
  return from(mismatch({{"k", k}}, t.a() / f.from_int(2), a[k]));
}

Outcome identities_shifted_recursion(Context& c, Rng&) {
  const SeqTables& t = c.tables();
  const auto& a = t.a_seq();
  const Element one = c.field().one();
  const auto n = static_cast<std::int64_t>(t.t());
  for (std::int64_t k = 2; k <= n - 1; ++k) {
    Element prefix = one;  // a_1 ... a_{l-1}
    Element window = one;  // a_{k-l} ... a_{k-2}
    for (std::int64_t l = 1; l < k; ++l) {
      if (l > 1) {
        prefix *= a[l - 1];
        window *= a[k - l];
      }
      const Element rhs = a[l] - (prefix * window * a[k - 1]).inverse();
      if (auto cx = mismatch({{"k", k}, {"l", l}}, a[k], rhs)) return *cx;
    }
  }
  return Pass{};
}

Outcome identities_shifted_recursion_adjacent(Context& c, Rng&) {
  const SeqTables& t = c.tables();
  const auto& a = t.a_seq();
  const auto n = static_cast<std::int64_t>(t.t());
  Element squares = c.field().one();  // a_1^2 ... a_{k-2}^2
  for (std::int64_t k = 2; k <= n - 1; ++k) {
    if (k > 2) squares *= a[k - 2] * a[k - 2];
    const Element rhs = a[k - 1] - (squares * a[k - 1]).inverse();
    if (auto cx = mismatch({{"k", k}}, a[k], rhs)) return *cx;
  }
  return Pass{};
}

Outcome identities_b_term_formulas(Context& c, Rng&) {
  if (!c.odd()) return char2_skip();
  const SeqTables& t = c.tables();
  const auto& a = t.a_seq();
  const auto& bs = t.b_seq();
  const Element& b = t.b();
  const Element one = c.field().one();
  const auto n = static_cast<std::int64_t>(t.t());
  if (auto cx = mismatch({{"l", 0}}, b, bs[0])) return *cx;
  for (std::int64_t l = 1; l <= n - 1; ++l) {
    // a_0 is undefined; 1/a_0 is read as 0, matching 1/a_{l-1} = a_{t-l} at l = 1
    const Element inv_prev = l == 1 ? c.field().zero() : a[l - 1].inverse();
    const Element first = (a[l] * b - one) / (b - inv_prev);
    const Element second = (a[l] * b - one) / (b - a[n - l]);
    const Element third = (one - a[l] * b) / (t.a() - b - a[l]);
    if (auto cx = mismatch({{"l", l}, {"form", 1}}, bs[l], first)) return *cx;
    if (auto cx = mismatch({{"l", l}, {"form", 2}}, bs[l], second)) return *cx;
    if (auto cx = mismatch({{"l", l}, {"form", 3}}, bs[l], third)) return *cx;
  }
  return Pass{};
}

Outcome identities_b_last_term(Context& c, Rng&) {
  if (!c.odd()) return char2_skip();
  const SeqTables& t = c.tables();
  const auto last = static_cast<std::int64_t>(t.t()) - 1;
  return from(mismatch({{"l", last}}, (t.a() - t.b()).inverse(), t.b_seq()[last]));
}

Outcome identities_b_pair_ratio(Context& c, Rng&) {
  if (!c.odd()) return char2_skip();
  const SeqTables& t = c.tables();
  const auto& a = t.a_seq();
  const auto& bs = t.b_seq();
  const Element& b = t.b();
  const Element one = c.field().one();
  const auto n = static_cast<std::int64_t>(t.t());
  for (std::int64_t l = 2; l <= n - 2; ++l) {
    const Element lhs = (bs[l] * bs[l + 1]) / (a[l] * a[l - 1]);
    const Element rhs = (a[l + 1] * b - one) / (a[l - 1] * b - one);
    if (auto cx = mismatch({{"l", l}}, rhs, lhs)) return *cx;
  }
  return Pass{};
}

bool b_is_unit_sign(const SeqTables& t) { return t.b().is_one() || (-t.b()).is_one(); }

Outcome identities_b_reflection_product(Context& c, Rng&) {
  if (!c.odd()) return char2_skip();
  const SeqTables& t = c.tables();
  if (!b_is_unit_sign(t)) return Skip{"b not in {1, -1}"};
  const auto& bs = t.b_seq();
  const auto n = static_cast<std::int64_t>(t.t());
  for (std::int64_t l = 0; l <= n - 1; ++l)
    if (auto cx = mismatch({{"l", l}}, c.field().one(), bs[l] * bs[(n - l) % n])) return *cx;
  return Pass{};
}

Outcome identities_b_reflection_sum(Context& c, Rng&) {
  if (!c.odd()) return char2_skip();
  const SeqTables& t = c.tables();
  if (!b_is_unit_sign(t)) return Skip{"b not in {1, -1}"};
  const auto& bs = t.b_seq();
  const auto n = static_cast<std::int64_t>(t.t());
  for (std::int64_t l = 0; l <= n - 1; ++l)
    if (auto cx = mismatch({{"l", l}}, t.a(), bs[l] + bs[(n - l + 1) % n])) return *cx;
  return Pass{};
}

Outcome identities_alpha_last_zero(Context& c, Rng&) {
  const auto& alpha = c.tables().alpha();
  if (auto cx = mismatch({{"r", -1}}, c.field().zero(), alpha[-1])) return *cx;
  if (auto cx = mismatch({{"r", 0}}, c.field().one(), alpha[0])) return *cx;
  return from(mismatch({{"r", alpha.last()}}, c.field().zero(), alpha[alpha.last()]));
}

Outcome identities_alpha_penultimate_unit(Context& c, Rng&) {
  const auto& alpha = c.tables().alpha();
  const Element v = alpha[alpha.last() - 1];
  return from(violated(v.is_one() || (-v).is_one(), {{"r", alpha.last() - 1}}, "1 or -1", str(v)));
}

Outcome identities_alpha_reflection(Context& c, Rng&) {
  const SeqTables& t = c.tables();
  const auto& alpha = t.alpha();
  const auto n = static_cast<std::int64_t>(t.t());
  for (std::int64_t k = -1; k <= n - 1; ++k) {
    const Element v = alpha[n - k - 2];
    if (auto cx = violated(v == alpha[k] || v == -alpha[k], {{"k", k}},
                           "+-" + str(alpha[k]), str(v)))
      return *cx;
  }
  return Pass{};
}

Outcome identities_beta_reflection(Context& c, Rng&) {
  if (!c.odd()) return char2_skip();
  const SeqTables& t = c.tables();
  if (!b_is_unit_sign(t)) return Skip{"b not in {1, -1}"};
  const auto& beta = t.beta();
  const auto n = static_cast<std::int64_t>(t.t());
  for (std::int64_t k = 0; k <= n - 1; ++k)
    if (auto cx = mismatch({{"k", k}}, t.b() * beta[k], beta[n - k - 1])) return *cx;
  return Pass{};
}

Outcome identities_beta_reflection_signed(Context& c, Rng&) {
  if (!c.odd()) return char2_skip();
  const SeqTables& t = c.tables();
  if (!b_is_unit_sign(t)) return Skip{"b not in {1, -1}"};
  const auto& beta = t.beta();
  const auto n = static_cast<std::int64_t>(t.t());
  const Element sign = -t.alpha()[n - 2];
  for (std::int64_t k = 0; k <= n - 1; ++k)
    if (auto cx = mismatch({{"k", k}}, sign * t.b() * beta[k], beta[n - k - 1])) return *cx;
  return Pass{};
}

Outcome identities_alpha_cassini(Context& c, Rng&) {
  const SeqTables& t = c.tables();
  const auto& alpha = t.alpha();
  const auto n = static_cast<std::int64_t>(t.t());
  for (std::int64_t k = 0; k <= n - 1; ++k)
    for (std::int64_t l = 0; l <= k; ++l) {
      const Element lhs = alpha[l] * alpha[k - 1] - alpha[l - 1] * alpha[k];
      if (auto cx = mismatch({{"k", k}, {"l", l}}, alpha[k - l - 1], lhs)) return *cx;
    }
  return Pass{};
}

Outcome identities_alpha_square_shift(Context& c, Rng&) {
  const SeqTables& t = c.tables();
  const auto& alpha = t.alpha();
  const Element one = c.field().one();
  const auto n = static_cast<std::int64_t>(t.t());
  for (std::int64_t k = 0; k <= n - 2; ++k)
    if (auto cx = mismatch({{"k", k}}, alpha[k + 1] * alpha[k - 1], (alpha[k] + one) * (alpha[k] - one)))
      return *cx;
  return Pass{};
}

Outcome identities_alpha_beta_shift(Context& c, Rng&) {
  if (!c.odd()) return char2_skip();
  const SeqTables& t = c.tables();
  const auto& alpha = t.alpha();
  const auto& beta = t.beta();
  const Element one = c.field().one();
  const auto n = static_cast<std::int64_t>(t.t());
  for (std::int64_t k = 0; k <= n - 1; ++k)
    if (auto cx = mismatch({{"k", k}}, alpha[k] * beta[k - 1], one + alpha[k - 1] * beta[k])) return *cx;
  return Pass{};
}

Outcome identities_gamma_beta_shift(Context& c, Rng&) {
  if (!c.odd()) return char2_skip();
  const SeqTables& t = c.tables();
  const auto& beta = t.beta();
  const auto& gamma = t.gamma();
  const Element one = c.field().one();
  const auto n = static_cast<std::int64_t>(t.t());
  for (std::int64_t k = 0; k <= n - 1; ++k)
    if (auto cx = mismatch({{"k", k}}, gamma[k] * beta[k - 1], one + gamma[k - 1] * beta[k])) return *cx;
  return Pass{};
}

// ---------------------------------------------------------------- conversion

Outcome conversion_power_bn_forms_vs_oracle(Context& c, Rng&) {
  const SeqTables& t = c.tables();
  const PowerBnTables forms = power_bn_forms(t);
  for (const PowerBn& e : forms.a_branch) {
    const BnForm expected = OutsideBorel{e.a_tilde, e.x, canonical_sign(e.y)};
    const Inputs in{{"k", static_cast<std::int64_t>(e.k)}, {"branch", 0}};
    if (auto cx = mismatch(in, oracle_bn_of_power(t.params(), e.k), expected)) return *cx;
  }
  for (const PowerBn& e : forms.b_branch) {
    const BnForm expected = OutsideBorel{e.a_tilde, e.x, canonical_sign(e.y)};
    const Inputs in{{"k", static_cast<std::int64_t>(e.k)}, {"branch", 1}};
    if (auto cx = mismatch(in, bn_decompose(b_power(t, e.k)), expected)) return *cx;
  }
  return Pass{};
}

Outcome conversion_ogs_to_bn_vs_matrix(Context& c, Rng& rng) {
  const SeqTables& t = c.tables();
  for (const OgsForm& form : c.forms(rng))
    if (auto cx = mismatch(inputs_of(form), bn_decompose(ogs_compose(t, form)), ogs_to_bn(t, form)))
      return *cx;
  return Pass{};
}

Outcome conversion_ogs_to_bn_equivalent_forms(Context& c, Rng&) {
  const SeqTables& t = c.tables();
  const auto& a = t.a_seq();
  const auto& alpha = t.alpha();
  const auto n = static_cast<std::int64_t>(t.t());
  for (std::int64_t k = 1; k <= n - 1; ++k)
    for (std::uint32_t code = 0; code < c.q(); ++code) {
      const Element x = c.el(code);
      const Element& al = alpha[k - 1];
      const Element first = al * (al * x - alpha[k - 2]);
      const Element second = al * al * (x - a[n - k]);
      const Element third = al * al * (x + a[k] - t.a());
      if (auto cx = mismatch({{"k", k}, {"x", code}}, first, second)) return *cx;
      if (auto cx = mismatch({{"k", k}, {"x", code}}, first, third)) return *cx;
    }
  return Pass{};
}

Outcome conversion_bn_to_ogs_inverts(Context& c, Rng& rng) {
  const SeqTables& t = c.tables();
  for (const OgsForm& form : c.forms(rng))
    if (auto cx = mismatch(inputs_of(form), form, bn_to_ogs(t, ogs_to_bn(t, form)))) return *cx;
  return Pass{};
}

Outcome conversion_matrix_round_trip(Context& c, Rng& rng) {
  const SeqTables& t = c.tables();
  for (const OgsForm& form : c.forms(rng))
    if (auto cx = mismatch(inputs_of(form), form, matrix_to_ogs(t, ogs_compose(t, form)))) return *cx;
  for (const ProjMatrix& m : c.matrices(rng))
    if (auto cx = mismatch(inputs_of(m), m, ogs_compose(t, matrix_to_ogs(t, m)))) return *cx;
  return Pass{};
}

Outcome conversion_bn_recompose(Context& c, Rng& rng) {
  for (const ProjMatrix& m : c.matrices(rng)) {
    const BnForm form = bn_decompose(m);
    if (auto cx = mismatch(inputs_of(m), m, bn_realize(form))) return *cx;
    if (auto cx = mismatch(inputs_of(m), in_borel(m), std::holds_alternative<InBorel>(form))) return *cx;
    const Element y = std::visit([](const auto& f) { return f.y; }, form);
    if (auto cx = mismatch(inputs_of(m), canonical_sign(y), y)) return *cx;
  }
  return Pass{};
}

Outcome conversion_y_sign_flip(Context& c, Rng& rng) {
  for (int i = 0; i < kSamples; ++i) {
    const Element at = c.random(rng), x = c.random(rng), y = c.random_unit(rng);
    const Inputs in{{"a_tilde", at.encode()}, {"x", x.encode()}, {"y", y.encode()}};
    if (auto cx = mismatch(in, gen_u(x) * gen_h(y), gen_u(x) * gen_h(-y))) return *cx;
    const BnForm plus = bn_decompose(bn_realize(OutsideBorel{at, x, y}));
    const BnForm minus = bn_decompose(bn_realize(OutsideBorel{at, x, -y}));
    if (auto cx = mismatch(in, plus, minus)) return *cx;
    if (auto cx = mismatch(in, x, std::get<OutsideBorel>(plus).x)) return *cx;
    const BnForm in_b = bn_decompose(gen_u(x) * gen_h(-y));
    if (auto cx = mismatch(in, x, std::get<InBorel>(in_b).x)) return *cx;
  }
  return Pass{};
}

Outcome conversion_coset_soundness(Context& c, Rng& rng) {
  auto check_pair = [](const ProjMatrix& g1, const ProjMatrix& g2) -> std::optional<Counterexample> {
    const Element a1 = std::get<OutsideBorel>(bn_decompose(g1)).a_tilde;
    const Element a2 = std::get<OutsideBorel>(bn_decompose(g2)).a_tilde;
    const bool same_coset = in_borel(g2.inverse() * g1);
    Inputs in = inputs_of(g1);
    for (auto& [name, v] : inputs_of(g2)) in.emplace_back(name + "'", v);
    return mismatch(std::move(in), same_coset, a1 == a2);
  };
  if (c.q() <= kExhaustiveCosetOrder) {
    std::vector<ProjMatrix> outside;
    for (const ProjMatrix& m : c.all_elements())
      if (!in_borel(m)) outside.push_back(m);
    for (const ProjMatrix& g1 : outside)
      for (const ProjMatrix& g2 : outside)
        if (auto cx = check_pair(g1, g2)) return *cx;
    return Pass{};
  }
  const Field& f = c.field();
  for (int i = 0; i < kSamples; ++i) {
    const ProjMatrix g1 = gen_u(c.random(rng)) * gen_s(f) * gen_u(c.random(rng)) * gen_h(c.random_unit(rng));
    const ProjMatrix g2 = gen_u(c.random(rng)) * gen_s(f) * gen_u(c.random(rng)) * gen_h(c.random_unit(rng));
    // same left coset by construction
    const ProjMatrix g3 = g1 * gen_u(c.random(rng)) * gen_h(c.random_unit(rng));
    if (auto cx = check_pair(g1, g2)) return *cx;
    if (auto cx = check_pair(g1, g3)) return *cx;
  }
  return Pass{};
}

Outcome conversion_x_zero_corollary(Context& c, Rng& rng) {
  const SeqTables& t = c.tables();
  std::vector<std::pair<Element, Element>> pairs;
  if (c.q() <= 64) {
    for (std::uint32_t i = 0; i < c.q(); ++i)
      for (std::uint32_t j = 1; j < c.q(); ++j) pairs.emplace_back(c.el(i), c.el(j));
  } else {
    for (int i = 0; i < kSamples; ++i) pairs.emplace_back(c.random(rng), c.random_unit(rng));
  }
  const auto n = static_cast<std::int64_t>(t.t());
  for (const auto& [r1, r2] : pairs) {
    const Inputs in{{"r1", r1.encode()}, {"r2", r2.encode()}};
    const ProjMatrix m = ProjMatrix::from_entries(r1, -r2.inverse(), r2, c.field().zero());
    const BnForm expected = OutsideBorel{r1 / r2, c.field().zero(), canonical_sign(r2)};
    if (auto cx = mismatch(in, expected, bn_decompose(m))) return *cx;
    const OgsForm ogs = matrix_to_ogs(t, m);
    const auto k = static_cast<std::int64_t>(ogs.k);
    if (ogs.ell == 0) {
      if (auto cx = mismatch(in, t.a() - t.a_seq()[k], ogs.x)) return *cx;
      if (auto cx = mismatch(in, t.a_seq()[n - k], ogs.x)) return *cx;
    } else {
      const Element& beta = t.beta()[k - 1];
      if (auto cx = mismatch(in, t.gamma()[k - 1] / beta, ogs.x)) return *cx;
      if (auto cx = mismatch(in, t.b() + t.alpha()[k - 1] / beta, ogs.x)) return *cx;
    }
  }
  return Pass{};
}

// ---------------------------------------------------------------- enumeration

Outcome enumeration_unique_presentation(Context& c, Rng&) {
  if (c.q() > enumeration::kMaxBruteForceOrder)
    return Skip{"q > " + std::to_string(enumeration::kMaxBruteForceOrder)};
  auto keys = enumeration::parallel::compose_all(c.tables());
  const enumeration::Census census = enumeration::census(keys);
  const std::uint64_t group = enumeration::parallel::count_psl2(c.field());
  if (auto cx = violated(census.distinct == census.forms, {{"forms", static_cast<std::int64_t>(census.forms)}},
                         "no collisions", str(census.forms - census.distinct) + " collisions"))
    return *cx;
  return from(mismatch({{"q", static_cast<std::int64_t>(c.q())}}, group, census.distinct));
}

Outcome enumeration_parallel_matches_serial(Context& c, Rng&) {
  if (c.q() > enumeration::kMaxBruteForceOrder)
    return Skip{"q > " + std::to_string(enumeration::kMaxBruteForceOrder)};
  const Inputs in{{"q", static_cast<std::int64_t>(c.q())}};
  if (auto cx = mismatch(in, enumeration::serial::count_psl2(c.field()),
                         enumeration::parallel::count_psl2(c.field())))
    return *cx;
  const auto serial = enumeration::serial::compose_all(c.tables());
  const auto parallel = enumeration::parallel::compose_all(c.tables());
  return from(violated(serial == parallel, in, "identical key vectors", "differ"));
}

// ---------------------------------------------------------------- registry

using CheckFn = Outcome (*)(Context&, Rng&);

struct Entry {
  const char* name;
  Suite suite;
  std::vector<Law> laws;
  CheckFn fn;
};

const std::vector<Entry>& entries() {
  using L = Law;
  using S = Suite;
  static const std::vector<Entry> table{
      {"field.axioms", S::Field, {}, field_axioms},
      {"field.inverse_methods_agree", S::Field, {}, field_inverse_methods_agree},
      {"field.encode_decode_roundtrip", S::Field, {}, field_encode_decode_roundtrip},
      {"field.modulus_irreducible", S::Field, {}, field_modulus_irreducible},
      {"field.quadratic_irreducibility_oracle", S::Field, {L::IrreducibleRoot},
       field_quadratic_irreducibility_oracle},

      {"matrix.determinant_one", S::Matrix, {}, matrix_determinant_one},
      {"matrix.canonical_form", S::Matrix, {}, matrix_canonical_form},
      {"matrix.group_axioms", S::Matrix, {}, matrix_group_axioms},
      {"matrix.generator_relations", S::Matrix, {L::GeneratorRelations}, matrix_generator_relations},
      {"matrix.coset_order", S::Matrix, {L::CosetOrder}, matrix_coset_order},
      {"matrix.valid_a_characterization", S::Matrix, {L::IrreducibleRoot, L::CosetOrder},
       matrix_valid_a_characterization},

      {"sequences.a_recursion_vs_matrix", S::Sequences, {L::ForwardRecursion, L::Covering},
       sequences_a_recursion_vs_matrix},
      {"sequences.a_last_term_zero", S::Sequences, {L::LastTermZero}, sequences_a_last_term_zero},
      {"sequences.b_recursion_vs_matrix", S::Sequences, {L::ForwardRecursion, L::Covering},
       sequences_b_recursion_vs_matrix},
      {"sequences.b_choice", S::Sequences, {L::SymmetricB}, sequences_b_choice},
      {"sequences.product_formulas", S::Sequences, {L::ProductFormulas}, sequences_product_formulas},
      {"sequences.covering", S::Sequences, {L::Covering}, sequences_covering},
      {"sequences.reciprocal_pairs", S::Sequences, {L::ReciprocalPairs}, sequences_reciprocal_pairs},
      {"sequences.complement_sums", S::Sequences, {L::ReciprocalPairs}, sequences_complement_sums},
      {"sequences.alpha_three_way", S::Sequences, {L::ChebyshevAgreement, L::AlphaIdentities},
       sequences_alpha_three_way},
      {"sequences.beta_gamma_definitions", S::Sequences, {}, sequences_beta_gamma_definitions},

      {"identities.midpoint_value", S::Identities, {L::MidpointValue}, identities_midpoint_value},
      {"identities.shifted_recursion", S::Identities, {L::ShiftedRecursion}, identities_shifted_recursion},
      {"identities.shifted_recursion_adjacent", S::Identities, {L::ShiftedRecursion},
       identities_shifted_recursion_adjacent},
      {"identities.b_term_formulas", S::Identities, {L::BTermFormulas}, identities_b_term_formulas},
      {"identities.b_last_term", S::Identities, {L::BTermFormulas}, identities_b_last_term},
      {"identities.b_pair_ratio", S::Identities, {L::BTermFormulas}, identities_b_pair_ratio},
      {"identities.b_reflection_product", S::Identities, {L::SymmetricB}, identities_b_reflection_product},
      {"identities.b_reflection_sum", S::Identities, {L::SymmetricB}, identities_b_reflection_sum},
      {"identities.alpha_last_zero", S::Identities, {L::AlphaIdentities, L::LastTermZero},
       identities_alpha_last_zero},
      {"identities.alpha_penultimate_unit", S::Identities, {L::AlphaIdentities},
       identities_alpha_penultimate_unit},
      {"identities.alpha_reflection", S::Identities, {L::AlphaIdentities}, identities_alpha_reflection},
      {"identities.beta_reflection", S::Identities, {L::AlphaIdentities}, identities_beta_reflection},
      {"identities.beta_reflection_signed", S::Identities, {L::AlphaIdentities},
       identities_beta_reflection_signed},
      {"identities.alpha_cassini", S::Identities, {L::AlphaIdentities}, identities_alpha_cassini},
      {"identities.alpha_square_shift", S::Identities, {L::AlphaIdentities}, identities_alpha_square_shift},
      {"identities.alpha_beta_shift", S::Identities, {L::AlphaIdentities}, identities_alpha_beta_shift},
      {"identities.gamma_beta_shift", S::Identities, {L::AlphaIdentities}, identities_gamma_beta_shift},

      {"conversion.power_bn_forms_vs_oracle", S::Conversion, {L::PowerBnForms},
       conversion_power_bn_forms_vs_oracle},
      {"conversion.ogs_to_bn_vs_matrix", S::Conversion, {L::OgsToBnFormulas}, conversion_ogs_to_bn_vs_matrix},
      {"conversion.ogs_to_bn_equivalent_forms", S::Conversion, {L::OgsToBnFormulas, L::ReciprocalPairs},
       conversion_ogs_to_bn_equivalent_forms},
      {"conversion.bn_to_ogs_inverts", S::Conversion, {L::OgsToBnFormulas}, conversion_bn_to_ogs_inverts},
      {"conversion.matrix_round_trip", S::Conversion, {L::UniquePresentation}, conversion_matrix_round_trip},
      {"conversion.bn_recompose", S::Conversion, {L::BnCanonicalForm}, conversion_bn_recompose},
      {"conversion.y_sign_flip", S::Conversion, {L::BnCanonicalForm}, conversion_y_sign_flip},
      {"conversion.coset_soundness", S::Conversion, {L::CosetSoundness}, conversion_coset_soundness},
      {"conversion.x_zero_corollary", S::Conversion, {L::BnCanonicalForm, L::OgsToBnFormulas},
       conversion_x_zero_corollary},

      {"enumeration.unique_presentation", S::Enumeration, {L::UniquePresentation},
       enumeration_unique_presentation},
      {"enumeration.parallel_matches_serial", S::Enumeration, {}, enumeration_parallel_matches_serial},
  };
  return table;
}

CheckResult run_one(const Entry& entry, Context& ctx) {
  CheckResult result;
  result.name = entry.name;
  const auto start = std::chrono::steady_clock::now();
  try {
    Rng rng = ctx.rng_for(entry.name);
    const Outcome outcome = entry.fn(ctx, rng);
    if (const auto* cx = std::get_if<Counterexample>(&outcome)) {
      result.status = CheckStatus::Fail;
      result.counterexample = *cx;
    } else if (const auto* skip = std::get_if<Skip>(&outcome)) {
      result.status = CheckStatus::Skip;
      result.skip_reason = skip->reason;
    }
  } catch (const std::exception& e) {
    result.status = CheckStatus::Fail;
    result.counterexample = Counterexample{{}, "no exception", e.what()};
  }
  result.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

Suite parse_suite(std::string_view name) {
  for (Suite s : {Suite::Field, Suite::Matrix, Suite::Sequences, Suite::Identities, Suite::Conversion,
                  Suite::Enumeration, Suite::All})
    if (to_string(s) == name) return s;
  throw Error(ErrorCode::ParseError, "unknown suite '" + std::string(name) + "'");
}

std::string_view to_string(Suite suite) noexcept {
  switch (suite) {
    case Suite::Field: return "field";
    case Suite::Matrix: return "matrix";
    case Suite::Sequences: return "sequences";
    case Suite::Identities: return "identities";
    case Suite::Conversion: return "conversion";
    case Suite::Enumeration: return "enumeration";
    case Suite::All: return "all";
  }
  return "?";
}

std::string_view to_string(Law law) noexcept {
  switch (law) {
    case Law::BnCanonicalForm: return "bn-canonical-form";
    case Law::GeneratorRelations: return "generator-relations";
    case Law::CosetSoundness: return "coset-soundness";
    case Law::IrreducibleRoot: return "irreducible-root";
    case Law::CosetOrder: return "coset-order";
    case Law::UniquePresentation: return "unique-presentation";
    case Law::Covering: return "covering";
    case Law::LastTermZero: return "last-term-zero";
    case Law::ForwardRecursion: return "forward-recursion";
    case Law::ProductFormulas: return "product-formulas";
    case Law::ReciprocalPairs: return "reciprocal-pairs";
    case Law::MidpointValue: return "midpoint-value";
    case Law::ShiftedRecursion: return "shifted-recursion";
    case Law::BTermFormulas: return "b-term-formulas";
    case Law::SymmetricB: return "symmetric-b";
    case Law::AlphaIdentities: return "alpha-identities";
    case Law::ChebyshevAgreement: return "chebyshev-agreement";
    case Law::PowerBnForms: return "power-bn-forms";
    case Law::OgsToBnFormulas: return "ogs-to-bn-formulas";
  }
  return "?";
}

const std::vector<Law>& required_laws() {
  static const std::vector<Law> laws{
      Law::BnCanonicalForm, Law::GeneratorRelations, Law::CosetSoundness, Law::IrreducibleRoot,
      Law::CosetOrder,      Law::UniquePresentation, Law::Covering,       Law::LastTermZero,
      Law::ForwardRecursion, Law::ProductFormulas,   Law::ReciprocalPairs, Law::MidpointValue,
      Law::ShiftedRecursion, Law::BTermFormulas,     Law::SymmetricB,     Law::AlphaIdentities,
      Law::ChebyshevAgreement, Law::PowerBnForms,    Law::OgsToBnFormulas,
  };
  return laws;
}

std::vector<CheckInfo> registry() {
  std::vector<CheckInfo> out;
  for (const Entry& e : entries()) out.push_back({e.name, e.suite, e.laws});
  return out;
}

bool CheckReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& r) { return r.passed(); });
}

CheckReport run_suite(std::uint64_t q, Suite suite) {
  if (q < 2 || q > kMaxVerifyOrder)
    throw Error(ErrorCode::UnsupportedQ,
                "verification supports 2 <= q <= " + std::to_string(kMaxVerifyOrder) + ", got " +
                    std::to_string(q));
  Context ctx(q);
  CheckReport report{suite, q, {}};
  for (const Entry& e : entries())
    if (suite == Suite::All || e.suite == suite) report.checks.push_back(run_one(e, ctx));
  return report;
}

BnForm oracle_bn_of_power(const OgsParams& params, std::uint64_t k) {
  if (k < 1 || k > params.t - 1)
    throw Error(ErrorCode::IndexOutOfRange,
                "k = " + std::to_string(k) + " outside 1.." + std::to_string(params.t - 1));
  const Field& f = *params.field;
  return bn_decompose(ppow(gen_u(params.a) * gen_s(f), k));
}

}  // namespace psl2ogs
