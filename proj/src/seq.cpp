#include "psl2ogs/seq.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "psl2ogs/psl2.hpp"

namespace psl2ogs {

namespace {

std::string str(const Element& e) { return std::to_string(e.encode()); }

void check_index(const OgsParams& params, std::int64_t k) {
  if (k < -1 || k > static_cast<std::int64_t>(params.t) - 1)
    throw Error(ErrorCode::IndexOutOfRange,
                "index " + std::to_string(k) + " outside -1.." + std::to_string(params.t - 1));
}

}  // namespace

const Element& OffsetSeq::operator[](std::int64_t index) const {
  if (!contains(index))
    throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(index) + " outside " +
                                                std::to_string(first_) + ".." +
                                                std::to_string(last()));
  return values_[static_cast<std::size_t>(index - first_)];
}

std::uint64_t coset_period(const Field& field) noexcept {
  const std::uint64_t q = field.order();
  return field.is_binary() ? q + 1 : (q + 1) / 2;
}

bool a_is_valid(const Field& field, const Element& a) {
  return quadratic_is_irreducible(field, a) &&
         sl2_order_of_us(field, a) == std::uint64_t{field.order()} + 1;
}

Element select_a(const Field& field) {
  for (std::uint32_t code = 0; code < field.order(); ++code) {
    const Element a = field.element(code);
    if (a_is_valid(field, a)) return a;
  }
  throw Error(ErrorCode::NoValidA, "no admissible a in GF(" + std::to_string(field.order()) + ")");
}

OffsetSeq a_sequence(const Element& a, std::uint64_t t) {
  std::vector<Element> terms{a};
  terms.reserve(t - 1);
  while (terms.size() < t - 1) {
    if (terms.back().is_zero())
      throw Error(ErrorCode::InternalInvariantViolation,
                  "a_" + std::to_string(terms.size()) + " vanished before a_{t-1}");
    terms.push_back(a - terms.back().inverse());
  }
  if (!terms.back().is_zero())
    throw Error(ErrorCode::InternalInvariantViolation, "a_{t-1} = " + str(terms.back()) + ", not 0");
  return OffsetSeq(1, std::move(terms));
}

Element select_b(const Field& field, const OffsetSeq& a_seq, const std::optional<Element>& override_b) {
  if (field.is_binary())
    throw Error(ErrorCode::NotOddCharacteristic, "b is undefined in characteristic 2");
  auto collides = [&](const Element& candidate) {
    for (const Element& term : a_seq)
      if (term == candidate) return true;
    return false;
  };
  if (override_b) {
    require_same_field(field, override_b->field());
    if (collides(*override_b))
      throw Error(ErrorCode::InvalidB, "b = " + str(*override_b) + " equals some a_k");
    return *override_b;
  }
  if (!collides(field.one())) return field.one();
  if (!collides(-field.one())) return -field.one();
  throw Error(ErrorCode::InternalInvariantViolation, "both 1 and -1 occur among a_k");
}

OffsetSeq b_sequence(const Element& a, const Element& b, std::uint64_t t) {
  std::vector<Element> terms{b};
  terms.reserve(t);
  while (terms.size() < t) {
    if (terms.back().is_zero())
      throw Error(ErrorCode::InternalInvariantViolation,
                  "b_" + std::to_string(terms.size() - 1) + " is zero");
    terms.push_back(a - terms.back().inverse());
  }
  if (terms.back().is_zero() || !(a - terms.back().inverse() == b))
    throw Error(ErrorCode::InternalInvariantViolation, "b sequence does not wrap back to b");
  return OffsetSeq(0, std::move(terms));
}

OffsetSeq alpha_recursive(const Element& a, std::uint64_t t) {
  const Field& f = a.field();
  std::vector<Element> terms{f.zero(), f.one()};
  terms.reserve(t + 1);
  // alpha_{-1} .. alpha_{t-1} is t + 1 terms
  while (terms.size() < t + 1) {
    const std::size_t n = terms.size();
    terms.push_back(a * terms[n - 1] - terms[n - 2]);
  }
  if (!terms.back().is_zero())
    throw Error(ErrorCode::InternalInvariantViolation,
                "alpha_{t-1} = " + str(terms.back()) + ", not 0");
  return OffsetSeq(-1, std::move(terms));
}

OgsParams make_params(std::shared_ptr<const Field> field, const std::optional<Element>& override_a,
                      const std::optional<Element>& override_b) {
  if (!field) throw Error(ErrorCode::UnsupportedQ, "null field");
  const std::uint64_t t = coset_period(*field);
  Element a = field->zero();
  if (override_a) {
    require_same_field(*field, override_a->field());
    if (!a_is_valid(*field, *override_a))
      throw Error(ErrorCode::InvalidA, "a = " + str(*override_a) +
                                           " does not give an irreducible lambda^2 + a lambda + 1 "
                                           "with a root of order q + 1");
    a = field->element(override_a->encode());
  } else {
    a = select_a(*field);
  }

  std::optional<Element> b;
  if (field->is_binary()) {
    if (override_b)
      throw Error(ErrorCode::NotOddCharacteristic, "b is undefined in characteristic 2");
  } else {
    std::optional<Element> rebound;
    if (override_b) {
      require_same_field(*field, override_b->field());
      rebound = field->element(override_b->encode());
    }
    b = select_b(*field, a_sequence(a, t), rebound);
  }
  return OgsParams{std::move(field), a, b, t};
}

Element alpha_closed_form(const OgsParams& params, std::int64_t k) {
  using boost::multiprecision::cpp_int;
  check_index(params, k);
  const Field& f = *params.field;
  if (k == -1) return f.zero();

  // E_k(a, 1) = sum_{i <= k/2} (-1)^i C(k - i, i) a^{k - 2i}
  Element total = f.zero();
  const cpp_int p = f.characteristic();
  cpp_int binom = 1;  // C(k, 0)
  for (std::int64_t i = 0; 2 * i <= k; ++i) {
    const auto residue = static_cast<std::int64_t>(cpp_int(binom % p));
    Element term = f.from_int(residue) * params.a.pow(static_cast<std::uint64_t>(k - 2 * i));
    total = (i % 2 == 0) ? total + term : total - term;
    // C(k-i-1, i+1) = C(k-i, i) (k-2i)(k-2i-1) / ((i+1)(k-i))
    if (2 * (i + 1) <= k) {
      binom *= cpp_int(k - 2 * i) * cpp_int(k - 2 * i - 1);
      binom /= cpp_int(i + 1) * cpp_int(k - i);
    }
  }
  return total;
}

Element alpha_chebyshev(const OgsParams& params, std::int64_t k) {
  const Field& f = *params.field;
  if (f.is_binary())
    throw Error(ErrorCode::EvenCharacteristic, "2 is not invertible in characteristic 2");
  check_index(params, k);
  const Element z = params.a / f.from_int(2);
  const Element two_z = f.from_int(2) * z;
  Element prev = f.zero();  // U_{-1}
  Element cur = f.one();    // U_0
  if (k == -1) return prev;
  for (std::int64_t n = 0; n < k; ++n) {
    Element next = two_z * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

BetaGamma beta_gamma(const OgsParams& params, const OffsetSeq& alpha) {
  if (!params.b) throw Error(ErrorCode::NotOddCharacteristic, "beta needs b");
  const Element& b = *params.b;
  const Field& f = *params.field;
  std::vector<Element> beta{f.one()};
  std::vector<Element> gamma{alpha[-1] + b * f.one()};
  for (std::int64_t k = 0; k <= static_cast<std::int64_t>(params.t) - 1; ++k) {
    beta.push_back(b * alpha[k] - alpha[k - 1]);
    gamma.push_back(alpha[k] + b * beta.back());
  }
  return {OffsetSeq(-1, std::move(beta)), OffsetSeq(-1, std::move(gamma))};
}

SeqTables::SeqTables(OgsParams params)
    : params_(std::move(params)),
      a_seq_(a_sequence(params_.a, params_.t)),
      alpha_(alpha_recursive(params_.a, params_.t)),
      coset_index_(params_.field->order()) {
  for (std::int64_t k = a_seq_.first(); k <= a_seq_.last(); ++k) {
    auto& slot = coset_index_[a_seq_[k].encode()];
    if (!slot) slot = CosetSlot{CosetBranch::APower, static_cast<std::uint64_t>(k)};
  }
  if (params_.b) {
    b_seq_ = b_sequence(params_.a, *params_.b, params_.t);
    beta_gamma_ = beta_gamma(params_, alpha_);
    for (std::int64_t k = b_seq_->first(); k <= b_seq_->last(); ++k) {
      auto& slot = coset_index_[(*b_seq_)[k].encode()];
      if (!slot) slot = CosetSlot{CosetBranch::BPower, static_cast<std::uint64_t>(k)};
    }
  }
}

const Element& SeqTables::b() const {
  if (!params_.b) throw Error(ErrorCode::NotOddCharacteristic, "no b in characteristic 2");
  return *params_.b;
}

const OffsetSeq& SeqTables::b_seq() const {
  if (!b_seq_) throw Error(ErrorCode::NotOddCharacteristic, "no b sequence in characteristic 2");
  return *b_seq_;
}

const OffsetSeq& SeqTables::beta() const {
  if (!beta_gamma_) throw Error(ErrorCode::NotOddCharacteristic, "no beta in characteristic 2");
  return beta_gamma_->beta;
}

const OffsetSeq& SeqTables::gamma() const {
  if (!beta_gamma_) throw Error(ErrorCode::NotOddCharacteristic, "no gamma in characteristic 2");
  return beta_gamma_->gamma;
}

CosetSlot SeqTables::coset_of(const Element& a_tilde) const {
  require_same_field(field(), a_tilde.field());
  const auto& slot = coset_index_[a_tilde.encode()];
  if (!slot)
    throw Error(ErrorCode::InternalInvariantViolation,
                "coset coordinate " + str(a_tilde) + " matches no a_k or b_l");
  return *slot;
}

std::vector<CheckResult> product_formulas(const SeqTables& tables) {
  const auto t = static_cast<std::int64_t>(tables.t());
  const auto& a = tables.a_seq();
  const auto& alpha = tables.alpha();
  const Field& f = tables.field();

  auto run = [](std::string name, auto&& body) {
    CheckResult result;
    result.name = std::move(name);
    if (auto cx = body()) {
      result.status = CheckStatus::Fail;
      result.counterexample = std::move(cx);
    }
    return result;
  };
  auto mismatch = [](const char* index, std::int64_t k, const Element& expected,
                     const Element& actual) {
    return Counterexample{{{index, k}}, str(expected), str(actual)};
  };

  std::vector<CheckResult> out;
  out.push_back(run("a_k = alpha_k / alpha_{k-1}", [&]() -> std::optional<Counterexample> {
    for (std::int64_t k = 1; k <= t - 1; ++k) {
      const Element quotient = alpha[k] / alpha[k - 1];
      if (!(a[k] == quotient)) return mismatch("k", k, a[k], quotient);
    }
    return std::nullopt;
  }));
  out.push_back(run("alpha_k = a_1 ... a_k", [&]() -> std::optional<Counterexample> {
    Element product = f.one();
    for (std::int64_t k = 1; k <= t - 1; ++k) {
      product *= a[k];
      if (!(alpha[k] == product)) return mismatch("k", k, alpha[k], product);
    }
    return std::nullopt;
  }));
  if (!tables.has_b()) {
    for (const char* name : {"b_l = beta_l / beta_{l-1}", "beta_l = b_0 ... b_l"}) {
      CheckResult skipped;
      skipped.name = name;
      skipped.status = CheckStatus::Skip;
      skipped.skip_reason = "char 2";
      out.push_back(std::move(skipped));
    }
    return out;
  }
  const auto& b = tables.b_seq();
  const auto& beta = tables.beta();
  out.push_back(run("b_l = beta_l / beta_{l-1}", [&]() -> std::optional<Counterexample> {
    for (std::int64_t l = 0; l <= t - 1; ++l) {
      const Element quotient = beta[l] / beta[l - 1];
      if (!(b[l] == quotient)) return mismatch("l", l, b[l], quotient);
    }
    return std::nullopt;
  }));
  out.push_back(run("beta_l = b_0 ... b_l", [&]() -> std::optional<Counterexample> {
    Element product = f.one();
    for (std::int64_t l = 0; l <= t - 1; ++l) {
      product *= b[l];
      if (!(beta[l] == product)) return mismatch("l", l, beta[l], product);
    }
    return std::nullopt;
  }));
  return out;
}

}  // namespace psl2ogs
