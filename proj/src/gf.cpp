#include "psl2ogs/gf.hpp"

#include <array>
#include <string>

namespace psl2ogs {

namespace {

constexpr std::uint32_t kMaxDegree = 20;

using Poly = std::vector<std::uint64_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t inverse_mod_prime(std::uint64_t u, std::uint64_t p) {
  std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(u % p);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t quot = r0 / r1;
    std::int64_t r2 = r0 - quot * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t s2 = s0 - quot * s1;
    s0 = s1;
    s1 = s2;
  }
  // r0 == 1 since p is prime and u != 0
  std::int64_t m = static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(((s0 % m) + m) % m);
}

// Remainder of f modulo a nonzero g over GF(p); quotient returned via out-param.
Poly poly_divmod(Poly f, const Poly& g, std::uint64_t p, Poly* quotient) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint64_t lead_inv = inverse_mod_prime(g.back(), p);
  if (quotient) quotient->assign(f.size() >= g.size() ? f.size() - dg : 1, 0);
  while (f.size() >= g.size()) {
    const std::size_t shift = f.size() - g.size();
    const std::uint64_t c = f.back() * lead_inv % p;
    if (quotient) (*quotient)[shift] = c;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + (p - c) * g[i]) % p;
    }
    trim(f);
  }
  if (quotient) trim(*quotient);
  return f;
}

Poly poly_mul(const Poly& f, const Poly& g, std::uint64_t p) {
  if (f.empty() || g.empty()) return {};
  Poly out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = (out[i + j] + f[i] * g[j]) % p;
  trim(out);
  return out;
}

Poly poly_sub(Poly f, const Poly& g, std::uint64_t p) {
  if (f.size() < g.size()) f.resize(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) f[i] = (f[i] + p - g[i]) % p;
  trim(f);
  return f;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint64_t q) {
  if (q < 2) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::uint64_t rest = q;
  std::uint32_t kappa = 0;
  while (rest % p == 0) {
    rest /= p;
    ++kappa;
  }
  if (rest != 1) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  return {static_cast<std::uint32_t>(p), kappa};
}

bool is_irreducible_over_prime_field(std::span<const std::uint32_t> poly, std::uint32_t p) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t candidates = 1;
    for (std::size_t i = 0; i < d; ++i) candidates *= p;
    for (std::uint64_t n = 0; n < candidates; ++n) {
      Poly g(d + 1, 0);
      std::uint64_t rest = n;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = rest % p;
        rest /= p;
      }
      g[d] = 1;
      if (poly_divmod(f, g, p, nullptr).empty()) return false;
    }
  }
  return true;
}

Field::Field(std::uint32_t p, std::uint32_t kappa, std::vector<std::uint32_t> modulus)
    : p_(p), kappa_(kappa), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < kappa; ++i) q_ *= p;
}

std::shared_ptr<const Field> Field::create(std::uint32_t p, std::uint32_t kappa) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (kappa == 0) throw Error(ErrorCode::TooLarge, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < kappa; ++i) {
    q *= p;
    if (q > kMaxFieldOrder)
      throw Error(ErrorCode::TooLarge, "field order exceeds " + std::to_string(kMaxFieldOrder));
  }
  if (kappa == 1) return std::shared_ptr<const Field>(new Field(p, 1, {0, 1}));

  std::vector<std::uint32_t> modulus(kappa + 1, 0);
  modulus[kappa] = 1;
  for (std::uint64_t n = 0; n < q; ++n) {
    std::uint64_t rest = n;
    for (std::uint32_t i = 0; i < kappa; ++i) {
      modulus[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (modulus[0] != 0 && is_irreducible_over_prime_field(modulus, p))
      return std::shared_ptr<const Field>(new Field(p, kappa, modulus));
  }
  throw Error(ErrorCode::InternalInvariantViolation, "no irreducible modulus found");
}

std::shared_ptr<const Field> Field::of_order(std::uint64_t q) {
  if (q > kMaxFieldOrder)
    throw Error(ErrorCode::TooLarge, "field order exceeds " + std::to_string(kMaxFieldOrder));
  auto [p, kappa] = split_prime_power(q);
  return create(p, kappa);
}

Element Field::zero() const { return {*this, 0}; }
Element Field::one() const { return {*this, 1}; }

Element Field::element(std::uint64_t code) const {
  if (code >= q_)
    throw Error(ErrorCode::OutOfRange,
                std::to_string(code) + " is not an element encoding of GF(" + std::to_string(q_) + ")");
  return {*this, static_cast<std::uint32_t>(code)};
}

Element Field::from_int(std::int64_t value) const {
  const std::int64_t p = p_;
  return {*this, static_cast<std::uint32_t>(((value % p) + p) % p)};
}

Element Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > kappa_) throw Error(ErrorCode::OutOfRange, "too many coefficients");
  std::uint64_t code = 0, scale = 1;
  for (std::uint32_t c : coeffs) {
    if (c >= p_) throw Error(ErrorCode::OutOfRange, "coefficient not reduced mod p");
    code += c * scale;
    scale *= p_;
  }
  return {*this, static_cast<std::uint32_t>(code)};
}

std::vector<std::uint32_t> Field::coeffs(std::uint32_t code) const {
  std::vector<std::uint32_t> out(kappa_);
  for (auto& c : out) {
    c = code % p_;
    code /= p_;
  }
  return out;
}

std::uint32_t Field::add(std::uint32_t u, std::uint32_t v) const noexcept {
  if (kappa_ == 1) return static_cast<std::uint32_t>((std::uint64_t{u} + v) % p_);
  if (p_ == 2) return u ^ v;
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < kappa_; ++i) {
    out += ((u % p_ + v % p_) % p_) * scale;
    u /= p_;
    v /= p_;
    scale *= p_;
  }
  return out;
}

std::uint32_t Field::neg(std::uint32_t u) const noexcept {
  if (kappa_ == 1) return u == 0 ? 0 : p_ - u;
  if (p_ == 2) return u;
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < kappa_; ++i) {
    out += ((p_ - u % p_) % p_) * scale;
    u /= p_;
    scale *= p_;
  }
  return out;
}

std::uint32_t Field::sub(std::uint32_t u, std::uint32_t v) const noexcept { return add(u, neg(v)); }

std::uint32_t Field::mul(std::uint32_t u, std::uint32_t v) const noexcept {
  if (kappa_ == 1) return static_cast<std::uint32_t>(std::uint64_t{u} * v % p_);
  std::array<std::uint64_t, kMaxDegree> a{}, b{};
  std::array<std::uint64_t, 2 * kMaxDegree> prod{};
  for (std::uint32_t i = 0; i < kappa_; ++i) {
    a[i] = u % p_;
    b[i] = v % p_;
    u /= p_;
    v /= p_;
  }
  for (std::uint32_t i = 0; i < kappa_; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < kappa_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
  }
  // lambda^kappa = -(c_0 + ... + c_{kappa-1} lambda^{kappa-1})
  for (std::uint32_t d = 2 * kappa_ - 2; d >= kappa_; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (std::uint32_t i = 0; i < kappa_; ++i)
      prod[d - kappa_ + i] = (prod[d - kappa_ + i] + (p_ - c) * modulus_[i]) % p_;
  }
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < kappa_; ++i) {
    out += static_cast<std::uint32_t>(prod[i]) * scale;
    scale *= p_;
  }
  return out;
}

std::uint32_t Field::pow(std::uint32_t u, std::uint64_t e) const noexcept {
  std::uint32_t result = 1;
  while (e) {
    if (e & 1) result = mul(result, u);
    u = mul(u, u);
    e >>= 1;
  }
  return result;
}

std::uint32_t Field::inv(std::uint32_t u) const {
  if (u == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (kappa_ == 1) return static_cast<std::uint32_t>(inverse_mod_prime(u, p_));

  const std::uint64_t p = p_;
  Poly r0(modulus_.begin(), modulus_.end());
  Poly r1;
  for (std::uint32_t c : coeffs(u)) r1.push_back(c);
  trim(r1);
  Poly s0, s1{1};
  while (!r1.empty()) {
    Poly quot;
    Poly rem = poly_divmod(r0, r1, p, &quot);
    r0 = std::move(r1);
    r1 = std::move(rem);
    Poly s2 = poly_sub(s0, poly_mul(quot, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1)
    throw Error(ErrorCode::InternalInvariantViolation, "modulus is not irreducible");
  const std::uint64_t scale = inverse_mod_prime(r0[0], p);
  std::uint32_t out = 0, place = 1;
  for (std::size_t i = 0; i < kappa_; ++i) {
    const std::uint64_t c = i < s0.size() ? s0[i] * scale % p : 0;
    out += static_cast<std::uint32_t>(c) * place;
    place *= p_;
  }
  return out;
}

std::uint32_t Field::inv_by_power(std::uint32_t u) const {
  if (u == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return pow(u, q_ - 2);
}

void require_same_field(const Field& lhs, const Field& rhs) {
  if (&lhs != &rhs && !(lhs == rhs))
    throw Error(ErrorCode::FieldMismatch, "GF(" + std::to_string(lhs.order()) + ") vs GF(" +
                                              std::to_string(rhs.order()) + ")");
}

Element operator+(const Element& u, const Element& v) {
  require_same_field(*u.field_, *v.field_);
  return {*u.field_, u.field_->add(u.code_, v.code_)};
}

Element operator-(const Element& u, const Element& v) {
  require_same_field(*u.field_, *v.field_);
  return {*u.field_, u.field_->sub(u.code_, v.code_)};
}

Element operator*(const Element& u, const Element& v) {
  require_same_field(*u.field_, *v.field_);
  return {*u.field_, u.field_->mul(u.code_, v.code_)};
}

Element operator/(const Element& u, const Element& v) {
  require_same_field(*u.field_, *v.field_);
  return {*u.field_, u.field_->mul(u.code_, u.field_->inv(v.code_))};
}

bool operator==(const Element& u, const Element& v) {
  require_same_field(*u.field_, *v.field_);
  return u.code_ == v.code_;
}

bool quadratic_is_irreducible(const Field& field, const Element& a) {
  require_same_field(field, a.field());
  const std::uint32_t ac = a.encode();
  for (std::uint32_t z = 0; z < field.order(); ++z) {
    const std::uint32_t value = field.add(field.add(field.mul(z, z), field.mul(ac, z)), 1);
    if (value == 0) return false;
  }
  return true;
}

}  // namespace psl2ogs
