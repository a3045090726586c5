#include "loopbv/bv_model.hpp"

#include <bit>

#include "loopbv/errors.hpp"
#include "loopbv/hopf.hpp"

namespace loopbv {

namespace {
inline int pow_sign(long long k) { return (k & 1LL) ? -1 : 1; }
}

void LieGroupData::validate() const {
  if (free_rank < 0) throw SchemaError("free_rank must be non-negative");
  for (int t : torsion)
    if (t < 2) throw SchemaError("torsion invariant factor " + std::to_string(t) + " is not >= 2");
  for (int d : odd_degrees) {
    if (d % 2 == 0) throw SchemaError("even entry " + std::to_string(d) + " in odd_degrees");
    if (d < 3) throw SchemaError("odd_degrees entries must be >= 3");
  }
}

const ActionTable::Entry& ActionTable::require(const std::string& name) const {
  auto it = classes.find(name);
  if (it == classes.end())
    throw ModelIncompleteError("action table has no entry for class '" + name + "'");
  return it->second;
}

Element ActionTable::apply(const std::string& name, const SigPtr& sig,
                           const Monomial& manifold_mono) const {
  const Entry& entry = require(name);
  auto it = entry.map.find(manifold_mono);
  return it == entry.map.end() ? Element::zero(sig) : it->second;
}

const SigmaTable::Combo& SigmaTable::require(const Signature& sig, const Monomial& loop_mono) const {
  auto it = values.find(loop_mono);
  if (it == values.end())
    throw ModelIncompleteError("sigma table has no value for '" + sig.to_string(loop_mono) + "'");
  return it->second;
}

Element BLoopTable::apply(const SigPtr& sig, const Monomial& loop_mono) const {
  auto it = values.find(loop_mono);
  return it == values.end() ? Element::zero(sig) : it->second;
}

std::pair<Monomial, Monomial> split_loop_manifold(const Signature& sig, const Monomial& m) {
  Monomial loop = m, mani = sig.unit_monomial();
  loop.ext = m.ext & sig.loop_ext_mask();
  loop.cls = 0;
  mani.ext = m.ext & sig.manifold_ext_mask();
  mani.cls = m.cls;
  return {std::move(loop), std::move(mani)};
}

namespace {

/// loop_mono * manifold_element, with an extra scalar. The loop monomial's
/// factors all precede the manifold factors in canonical order, so this is a
/// plain concatenation under mono_mul_into.
void emit_product(Element& out, const Signature& sig, const Monomial& loop_mono,
                  const Element& manifold, const Rational& coeff) {
  for (const auto& [mm, mc] : manifold.terms()) mono_mul_into(out, sig, loop_mono, mm, coeff * mc);
}

void apply_lie(const BVModel& model, const LieGroupRule& rule, const Monomial& m,
               const Rational& coeff, Element& out) {
  const Signature& sig = *model.sig;
  const int l = rule.data.free_rank;
  const int poly_off = sig.free_count() + sig.torsion_count();
  int pos = 0;
  for (uint32_t bits = m.ext; bits; bits &= bits - 1) {
    ++pos;
    const int slot = std::countr_zero(bits);  // generator index slot+1
    int sign = pow_sign(pos - 1);
    if (rule.flipped_position == pos) sign = -sign;
    Monomial term = m;
    term.ext &= ~(1u << slot);
    int32_t n;
    if (slot < l) {
      n = m.e[slot];
    } else {
      n = m.e[poly_off + (slot - l)];
      if (n == 0) continue;
      term.e[poly_off + (slot - l)] = n - 1;
    }
    out.add_term(term, coeff * n * sign);
  }
}

void apply_sphere(const BVModel& model, const SphereActionRule& rule, const Monomial& m,
                  const Rational& coeff, Element& out) {
  const Signature& sig = *model.sig;
  auto [loop, mani] = split_loop_manifold(sig, m);
  int32_t i;
  Monomial new_loop = loop;
  if (rule.sphere_dim == 1) {
    i = loop.e[0];  // exponent of the degree-0 circle generator
  } else {
    i = loop.e[sig.free_count() + sig.torsion_count()];  // exponent of u
    if (i == 0) return;
    new_loop.e[sig.free_count() + sig.torsion_count()] = i - 1;
  }
  if (i == 0) return;
  Element acted = rule.action.apply(rule.action_class, model.sig, mani);
  emit_product(out, sig, new_loop, acted, coeff * i);
}

void apply_rational(const BVModel& model, const RationalActionRule& rule, const Monomial& m,
                    const Rational& coeff, Element& out) {
  const Signature& sig = *model.sig;
  auto [loop, mani] = split_loop_manifold(sig, m);

  // B_{Omega G} block
  Element bl = rule.b_loop.apply(model.sig, loop);
  for (const auto& [bm, bc] : bl.terms()) mono_mul_into(out, sig, bm, mani, coeff * bc);

  const int global = pow_sign(sig.degree(loop));
  // hur f . x, f the group-ring part
  for (int s = 0; s < sig.free_count(); ++s) {
    const int32_t n = loop.e[s];
    if (n == 0) continue;
    Element acted = rule.action.apply(rule.hur_free[s], model.sig, mani);
    emit_product(out, sig, loop, acted, coeff * global * n);
  }
  // one term per s^{-1} factor of the word; even factors carry no sign,
  // an odd factor picks up (-1)^{(#odd factors after it)+1}
  const int poly_off = sig.free_count() + sig.torsion_count();
  for (int s = 0; s < sig.poly_count(); ++s) {
    const int32_t n = loop.e[poly_off + s];
    if (n == 0) continue;
    Monomial rest = loop;
    rest.e[poly_off + s] = n - 1;
    Element acted = rule.action.apply(rule.hur_poly[s], model.sig, mani);
    emit_product(out, sig, rest, acted, coeff * global * n);
  }
  const int ext_total = std::popcount(loop.ext);
  int rank = 0;
  for (uint32_t bits = loop.ext; bits; bits &= bits - 1) {
    ++rank;
    const int slot = std::countr_zero(bits);
    const int sign = pow_sign((ext_total - rank) + 1);
    Monomial rest = loop;
    rest.ext &= ~(1u << slot);
    Element acted = rule.action.apply(rule.hur_loop_ext[slot], model.sig, mani);
    emit_product(out, sig, rest, acted, coeff * global * sign);
  }
}

void apply_coproduct_rule(const BVModel& model, const CoproductRule& rule, const Monomial& m,
                    const Rational& coeff, Element& out) {
  const Signature& sig = *model.sig;
  auto [loop, mani] = split_loop_manifold(sig, m);

  Element bl = rule.b_loop.apply(model.sig, loop);
  for (const auto& [bm, bc] : bl.terms()) mono_mul_into(out, sig, bm, mani, coeff * bc);

  TensorSquareElement diag = coproduct(Element::monomial(model.sig, loop));
  for (const auto& [pair, q] : diag.terms) {
    const auto& [a1, a2] = pair;
    const int sign = pow_sign(sig.degree(a1));
    for (const auto& [cls_name, w] : rule.sigma.require(sig, a2)) {
      Element acted = rule.action.apply(cls_name, model.sig, mani);
      emit_product(out, sig, a1, acted, coeff * q * w * sign);
    }
  }
}

struct TensorSplit {
  Monomial left, right;
};

TensorSplit tensor_split(const Signature& sig, const Signature& ls, const Signature& rs,
                         bool table_on_left, const Monomial& m) {
  TensorSplit s{ls.unit_monomial(), rs.unit_monomial()};
  const int lf = ls.free_count(), lt = ls.torsion_count(), lp = ls.poly_count();
  const int F = sig.free_count(), T = sig.torsion_count();
  for (int i = 0; i < lf; ++i) s.left.e[i] = m.e[i];
  for (int i = 0; i < rs.free_count(); ++i) s.right.e[i] = m.e[lf + i];
  for (int i = 0; i < lt; ++i) s.left.e[lf + i] = m.e[F + i];
  for (int i = 0; i < rs.torsion_count(); ++i) s.right.e[rs.free_count() + i] = m.e[F + lt + i];
  for (int i = 0; i < lp; ++i) s.left.e[lf + lt + i] = m.e[F + T + i];
  for (int i = 0; i < rs.poly_count(); ++i)
    s.right.e[rs.free_count() + rs.torsion_count() + i] = m.e[F + T + lp + i];
  const int le = ls.ext_count();
  const uint32_t lmask = (le >= 32) ? ~0u : ((1u << le) - 1);
  s.left.ext = m.ext & lmask;
  s.right.ext = (le >= 32) ? 0 : (m.ext >> le);
  (table_on_left ? s.left.cls : s.right.cls) = m.cls;
  return s;
}

Monomial tensor_splice(const Signature& sig, const Signature& ls, const Signature& rs,
                       bool table_on_left, const Monomial& left, const Monomial& right) {
  Monomial m = sig.unit_monomial();
  const int lf = ls.free_count(), lt = ls.torsion_count(), lp = ls.poly_count();
  const int F = sig.free_count(), T = sig.torsion_count();
  for (int i = 0; i < lf; ++i) m.e[i] = left.e[i];
  for (int i = 0; i < rs.free_count(); ++i) m.e[lf + i] = right.e[i];
  for (int i = 0; i < lt; ++i) m.e[F + i] = left.e[lf + i];
  for (int i = 0; i < rs.torsion_count(); ++i) m.e[F + lt + i] = right.e[rs.free_count() + i];
  for (int i = 0; i < lp; ++i) m.e[F + T + i] = left.e[lf + lt + i];
  for (int i = 0; i < rs.poly_count(); ++i)
    m.e[F + T + lp + i] = right.e[rs.free_count() + rs.torsion_count() + i];
  m.ext = left.ext | (ls.ext_count() >= 32 ? 0 : right.ext << ls.ext_count());
  m.cls = table_on_left ? left.cls : right.cls;
  return m;
}

void apply_monomial(const BVModel& model, const Monomial& m, const Rational& coeff, Element& out);

void apply_tensor(const BVModel& model, const TensorRule& rule, const Monomial& m,
                  const Rational& coeff, Element& out) {
  const Signature& ls = *rule.left->sig;
  const Signature& rs = *rule.right->sig;
  TensorSplit s = tensor_split(*model.sig, ls, rs, rule.table_on_left, m);

  Element bleft(rule.left->sig);
  apply_monomial(*rule.left, s.left, 1, bleft);
  for (const auto& [bm, bc] : bleft.terms())
    out.add_term(tensor_splice(*model.sig, ls, rs, rule.table_on_left, bm, s.right), coeff * bc);

  const int sign = pow_sign(ls.degree(s.left));
  Element bright(rule.right->sig);
  apply_monomial(*rule.right, s.right, 1, bright);
  for (const auto& [bm, bc] : bright.terms())
    out.add_term(tensor_splice(*model.sig, ls, rs, rule.table_on_left, s.left, bm),
                 coeff * bc * sign);
}

void apply_monomial(const BVModel& model, const Monomial& m, const Rational& coeff, Element& out) {
  std::visit(
      [&](const auto& rule) {
        using R = std::decay_t<decltype(rule)>;
        if constexpr (std::is_same_v<R, LieGroupRule>)
          apply_lie(model, rule, m, coeff, out);
        else if constexpr (std::is_same_v<R, RationalActionRule>)
          apply_rational(model, rule, m, coeff, out);
        else if constexpr (std::is_same_v<R, SphereActionRule>)
          apply_sphere(model, rule, m, coeff, out);
        else if constexpr (std::is_same_v<R, CoproductRule>)
          apply_coproduct_rule(model, rule, m, coeff, out);
        else
          apply_tensor(model, rule, m, coeff, out);
      },
      model.rule);
}

}  // namespace

Element loop_factor_B(const BVModel& model, const Monomial& loop_mono) {
  return std::visit(
      [&](const auto& rule) -> Element {
        using R = std::decay_t<decltype(rule)>;
        if constexpr (std::is_same_v<R, RationalActionRule> || std::is_same_v<R, CoproductRule>) {
          return rule.b_loop.apply(model.sig, loop_mono);
        } else if constexpr (std::is_same_v<R, TensorRule>) {
          const Signature& ls = *rule.left->sig;
          const Signature& rs = *rule.right->sig;
          TensorSplit s = tensor_split(*model.sig, ls, rs, rule.table_on_left, loop_mono);
          Element out(model.sig);
          for (const auto& [bm, bc] : loop_factor_B(*rule.left, s.left).terms())
            out.add_term(tensor_splice(*model.sig, ls, rs, rule.table_on_left, bm, s.right), bc);
          const Rational sign(pow_sign(ls.degree(s.left)));
          for (const auto& [bm, bc] : loop_factor_B(*rule.right, s.right).terms())
            out.add_term(tensor_splice(*model.sig, ls, rs, rule.table_on_left, s.left, bm),
                         sign * bc);
          return out;
        } else {
          return Element::zero(model.sig);
        }
      },
      model.rule);
}

Element apply_B(const BVModel& model, const Element& a) {
  if (a.signature().get() != model.sig.get())
    throw SignatureError("element does not belong to the model's algebra");
  Element out(model.sig);
  for (const auto& [m, c] : a.terms()) apply_monomial(model, m, c, out);
  return out;
}

void apply_B_into(const BVModel& model, const Element& a, Element& out) {
  if (a.signature().get() != model.sig.get() || out.signature().get() != model.sig.get())
    throw SignatureError("element does not belong to the model's algebra");
  out.clear();
  for (const auto& [m, c] : a.terms()) apply_monomial(model, m, c, out);
}

namespace {

Element bracket_homogeneous(const BVModel& model, int da, const Element& a, const Element& b) {
  Element out = apply_B(model, a * b);
  out -= apply_B(model, a) * b;
  const int sa = pow_sign(da);
  Element last = a * apply_B(model, b);
  if (sa < 0)
    out += last;
  else
    out -= last;
  if (sa < 0) out *= Rational(-1);
  return out;
}

int required_degree(const Element& a, const char* who) {
  if (a.is_zero()) return 0;
  auto d = a.homogeneous_degree();
  if (!d) throw DomainError(std::string(who) + " must be homogeneous");
  return *d;
}

}  // namespace

Element bracket(const BVModel& model, const Element& a, const Element& b) {
  Element out(model.sig);
  for (const auto& [da, ea] : a.homogeneous_components())
    for (const auto& [db, eb] : b.homogeneous_components())
      out += bracket_homogeneous(model, da, ea, eb);
  return out;
}

IdentitySides bv7_sides(const BVModel& m, const Element& a, const Element& b, const Element& c) {
  const int da = required_degree(a, "a"), db = required_degree(b, "b");
  required_degree(c, "c");
  Element ab = a * b, bc = b * c, ac = a * c;
  Element lhs = apply_B(m, ab * c);
  Element rhs = apply_B(m, ab) * c;
  rhs += Rational(pow_sign(da)) * (a * apply_B(m, bc));
  rhs += Rational(pow_sign((da - 1) * db)) * (b * apply_B(m, ac));
  rhs -= apply_B(m, a) * bc;
  rhs -= Rational(pow_sign(da)) * (a * (apply_B(m, b) * c));
  rhs -= Rational(pow_sign(da + db)) * (ab * apply_B(m, c));
  return {std::move(lhs), std::move(rhs)};
}

IdentitySides poisson_sides(const BVModel& m, const Element& a, const Element& b, const Element& c) {
  const int da = required_degree(a, "a"), db = required_degree(b, "b");
  required_degree(c, "c");
  Element lhs = bracket(m, a, b * c);
  Element rhs = bracket(m, a, b) * c;
  rhs += Rational(pow_sign((da - 1) * db)) * (b * bracket(m, a, c));
  return {std::move(lhs), std::move(rhs)};
}

IdentitySides poisson_rewritten_sides(const BVModel& m, const Element& a, const Element& b,
                                      const Element& c) {
  const int db = required_degree(b, "b"), dc = required_degree(c, "c");
  required_degree(a, "a");
  Element lhs = bracket(m, b * c, a);
  Element rhs = b * bracket(m, c, a);
  rhs += Rational(pow_sign(db * dc)) * (c * bracket(m, b, a));
  return {std::move(lhs), std::move(rhs)};
}

IdentitySides antisym_sides(const BVModel& m, const Element& a, const Element& b) {
  const int da = required_degree(a, "a"), db = required_degree(b, "b");
  Element lhs = bracket(m, a, b);
  Element rhs = Rational(-pow_sign((da + 1) * (db + 1))) * bracket(m, b, a);
  return {std::move(lhs), std::move(rhs)};
}

IdentitySides jacobi_sides(const BVModel& m, const Element& a, const Element& b, const Element& c) {
  const int da = required_degree(a, "a"), db = required_degree(b, "b");
  required_degree(c, "c");
  Element lhs = bracket(m, a, bracket(m, b, c));
  Element rhs = bracket(m, bracket(m, a, b), c);
  rhs += Rational(pow_sign((da + 1) * (db + 1))) * bracket(m, b, bracket(m, a, c));
  return {std::move(lhs), std::move(rhs)};
}

bool check_bv7(const BVModel& m, const Element& a, const Element& b, const Element& c) {
  return bv7_sides(m, a, b, c).ok();
}
bool check_poisson(const BVModel& m, const Element& a, const Element& b, const Element& c) {
  return poisson_sides(m, a, b, c).ok();
}
bool check_jacobi_antisym(const BVModel& m, const Element& a, const Element& b, const Element& c) {
  return antisym_sides(m, a, b).ok() && jacobi_sides(m, a, b, c).ok();
}

}  // namespace loopbv
