#include "psl2ogs/decomp.hpp"

#include <string>

namespace psl2ogs {

Element canonical_sign(const Element& y) {
  const Element neg = -y;
  return neg.encode() < y.encode() ? neg : y;
}

ProjMatrix bn_realize(const BnForm& form) {
  if (const auto* in = std::get_if<InBorel>(&form)) return gen_u(in->x) * gen_h(in->y);
  const auto& out = std::get<OutsideBorel>(form);
  return gen_u(out.a_tilde) * gen_s(out.x.field()) * gen_u(out.x) * gen_h(out.y);
}

BnForm bn_decompose(const ProjMatrix& m) {
  const Element c = m.m21();
  if (c.is_zero()) {
    const Element a = m.m11();
    return InBorel{m.m12() * a, canonical_sign(a)};
  }
  return OutsideBorel{m.m11() / c, m.m22() * c, canonical_sign(-c)};
}

void validate(const SeqTables& tables, const OgsForm& form) {
  require_same_field(tables.field(), form.x.field());
  require_same_field(tables.field(), form.y.field());
  if (form.k >= tables.t())
    throw Error(ErrorCode::IndexOutOfRange,
                "k = " + std::to_string(form.k) + " outside 0.." + std::to_string(tables.t() - 1));
  if (form.ell > 1)
    throw Error(ErrorCode::IndexOutOfRange, "ell = " + std::to_string(form.ell) + " is not 0 or 1");
  if (form.ell == 1 && !tables.has_b())
    throw Error(ErrorCode::IndexOutOfRange, "ell = 1 is not available in characteristic 2");
  if (form.y.is_zero()) throw Error(ErrorCode::DivisionByZero, "y = 0");
}

BnForm ogs_to_bn(const SeqTables& tables, const OgsForm& form) {
  validate(tables, form);
  const auto k = static_cast<std::int64_t>(form.k);
  if (form.ell == 0) {
    if (k == 0) return InBorel{form.x, form.y};
    const Element& ak = tables.a_seq()[k];
    const Element& alpha = tables.alpha()[k - 1];
    return OutsideBorel{ak, alpha * alpha * (form.x + ak - tables.a()),
                        canonical_sign(alpha * form.y)};
  }
  const Element& beta = tables.beta()[k - 1];
  const Element& gamma = tables.gamma()[k - 1];
  return OutsideBorel{tables.b_seq()[k], beta * (beta * form.x - gamma),
                      canonical_sign(beta * form.y)};
}

OgsForm bn_to_ogs(const SeqTables& tables, const BnForm& form) {
  if (const auto* in = std::get_if<InBorel>(&form))
    return {0, 0, in->x, canonical_sign(in->y)};
  const auto& out = std::get<OutsideBorel>(form);
  const CosetSlot slot = tables.coset_of(out.a_tilde);
  const auto k = static_cast<std::int64_t>(slot.k);
  if (slot.branch == CosetBranch::APower) {
    const Element inv = tables.alpha()[k - 1].inverse();
    return {slot.k, 0, out.x * inv * inv + tables.a() - out.a_tilde, canonical_sign(out.y * inv)};
  }
  const Element inv = tables.beta()[k - 1].inverse();
  return {slot.k, 1, (out.x * inv + tables.gamma()[k - 1]) * inv, canonical_sign(out.y * inv)};
}

ProjMatrix ogs_compose(const SeqTables& tables, const OgsForm& form) {
  validate(tables, form);
  const Field& f = tables.field();
  const ProjMatrix s = gen_s(f);
  ProjMatrix g = ppow(gen_u(tables.a()) * s, form.k);
  if (form.ell == 1) g = g * gen_u(tables.b()) * s * gen_u(-tables.b());
  return g * gen_u(form.x) * gen_h(form.y);
}

OgsForm matrix_to_ogs(const SeqTables& tables, const ProjMatrix& m) {
  require_same_field(tables.field(), m.field());
  return bn_to_ogs(tables, bn_decompose(m));
}

PowerBnTables power_bn_forms(const SeqTables& tables) {
  PowerBnTables out;
  const auto t = static_cast<std::int64_t>(tables.t());
  const auto& alpha = tables.alpha();
  for (std::int64_t k = 1; k <= t - 1; ++k)
    out.a_branch.push_back({static_cast<std::uint64_t>(k), tables.a_seq()[k],
                            -alpha[k - 2] * alpha[k - 1],
                            alpha[k - 1]});
  if (!tables.has_b()) return out;
  const auto& beta = tables.beta();
  const auto& gamma = tables.gamma();
  for (std::int64_t k = 0; k <= t - 1; ++k)
    out.b_branch.push_back({static_cast<std::uint64_t>(k), tables.b_seq()[k],
                            -beta[k - 1] * gamma[k - 1], beta[k - 1]});
  return out;
}

}  // namespace psl2ogs
