#include "loopbv/models.hpp"

#include <algorithm>
#include <bit>

#include "loopbv/errors.hpp"
#include "loopbv/expr.hpp"

namespace loopbv {

namespace {
inline int pow_sign(long long k) { return (k & 1LL) ? -1 : 1; }
}

SigPtr make_lie_signature(const LieGroupData& data, const LieNaming& naming) {
  data.validate();
  const int l = data.free_rank;
  const int r = data.rank();
  const int s_base = naming.s_base > 0 ? naming.s_base : l + 1;
  std::vector<GeneratorSpec> gens;
  for (int i = 0; i < l; ++i)
    gens.push_back({"x" + std::to_string(naming.x_base + i), GenKind::GroupFree, 0, 0});
  for (size_t t = 0; t < data.torsion.size(); ++t)
    gens.push_back({"y" + std::to_string(naming.y_base + static_cast<int>(t)),
                    GenKind::GroupTorsion, 0, data.torsion[t]});
  for (size_t k = 0; k < data.odd_degrees.size(); ++k)
    gens.push_back({"sx" + std::to_string(s_base + static_cast<int>(k)), GenKind::PolyEven,
                    data.odd_degrees[k] - 1, 0});
  for (int i = 0; i < r; ++i) {
    const int deg = i < l ? -1 : -data.odd_degrees[i - l];
    gens.push_back({"d" + std::to_string(naming.d_base + i), GenKind::ExtOdd, deg, 0});
  }
  return std::make_shared<Signature>(std::move(gens));
}

BVModel build_lie_group_model(const LieGroupData& data, int flipped_position,
                              const LieNaming& naming) {
  BVModel m;
  m.sig = make_lie_signature(data, naming);
  m.name = "lie_group(l=" + std::to_string(data.free_rank) + ",tor=" +
           std::to_string(data.torsion.size()) + ",higher=" +
           std::to_string(data.odd_degrees.size()) + ")";
  m.rule = LieGroupRule{data, flipped_position};
  return m;
}

ActionTable lie_action_table(const SigPtr& sig, const LieGroupData& data) {
  const int l = data.free_rank;
  const int r = data.rank();
  if (sig->ext_count() != r) throw SchemaError("signature does not match the Lie presentation");
  ActionTable table;
  for (int i = 1; i <= r; ++i) {
    ActionTable::Entry entry;
    entry.degree = i <= l ? 1 : data.odd_degrees[i - 1 - l];
    for (uint32_t mask = 0; mask < (1u << r); ++mask) {
      if (!(mask & (1u << (i - 1)))) continue;
      Monomial key = sig->unit_monomial();
      key.ext = mask;
      Monomial out = key;
      out.ext = mask & ~(1u << (i - 1));
      const int rank = std::popcount(mask & ((1u << (i - 1)) - 1)) + 1;
      entry.map.emplace(key,
                        Element::monomial(sig, out, Rational(pow_sign(rank - 1))));
    }
    table.classes.emplace("hur_x" + std::to_string(i), std::move(entry));
  }
  return table;
}

SigmaTable lie_sigma_table(const SigPtr& sig, const LieGroupData& data, int max_loop_degree,
                           int free_exp_cap) {
  SigmaTable table;
  const int l = data.free_rank;
  const int poly_off = sig->free_count() + sig->torsion_count();
  for (const Monomial& m : enumerate_loop_window(*sig, max_loop_degree, free_exp_cap)) {
    int poly_total = 0;
    int poly_slot = -1;
    for (int s = 0; s < sig->poly_count(); ++s) {
      poly_total += m.e[poly_off + s];
      if (m.e[poly_off + s] > 0) poly_slot = s;
    }
    SigmaTable::Combo combo;
    if (poly_total == 0) {
      for (int i = 0; i < l; ++i)
        if (m.e[i] != 0) combo.emplace_back("hur_x" + std::to_string(i + 1), Rational(m.e[i]));
    } else if (poly_total == 1) {
      combo.emplace_back("hur_x" + std::to_string(l + poly_slot + 1), Rational(1));
    }
    table.values.emplace(m, std::move(combo));  // explicit zeros stay in the table
  }
  return table;
}

BVModel build_coproduct_model_for_lie(const BVModel& lie_model, const WindowSpec& window) {
  const auto* rule = std::get_if<LieGroupRule>(&lie_model.rule);
  if (!rule) throw SchemaError("coproduct-formula model needs a lie_group model");
  const Signature& sig = *lie_model.sig;
  int ext_drop = 0;
  for (int s = 0; s < sig.ext_count(); ++s)
    if (sig.ext_degree(s) < 0) ext_drop -= sig.ext_degree(s);
  CoproductRule h;
  h.sigma = lie_sigma_table(lie_model.sig, rule->data, window.degree_bound + ext_drop,
                            window.free_exp_cap);
  h.action = lie_action_table(lie_model.sig, rule->data);
  BVModel m;
  m.sig = lie_model.sig;
  m.name = lie_model.name + " via coproduct formula";
  m.rule = std::move(h);
  return m;
}

std::shared_ptr<const TableFactor> ManifoldAlgebra::to_table() const {
  auto table = std::make_shared<TableFactor>();
  table->names = names;
  table->degrees = degrees;
  table->dimension = dimension;
  for (const auto& [a, b, combo] : products) {
    const int i = table->find(a), j = table->find(b);
    if (i < 0 || j < 0)
      throw SchemaError("product entry names unknown manifold class '" + (i < 0 ? a : b) + "'");
    std::vector<std::pair<uint16_t, Rational>> out;
    for (const auto& [c, q] : combo) {
      const int k = table->find(c);
      if (k < 0) throw SchemaError("product value names unknown manifold class '" + c + "'");
      if (q != 0) out.emplace_back(static_cast<uint16_t>(k), q);
    }
    if (!out.empty())
      table->products[{static_cast<uint16_t>(i), static_cast<uint16_t>(j)}] = std::move(out);
  }
  table->validate();
  return table;
}

ActionTable bind_action(const SigPtr& sig, const RawAction& raw) {
  const TableFactor* table = sig->table();
  ActionTable out;
  for (const auto& [name, spec] : raw.classes) {
    const auto& [degree, rules] = spec;
    if (degree <= 0) throw SchemaError("acting class '" + name + "' must raise degree");
    ActionTable::Entry entry;
    entry.degree = degree;
    for (const auto& rule : rules) {
      if (!table) throw SchemaError("action rule on '" + rule.on + "' needs a manifold table");
      const int on = table->find(rule.on);
      if (on < 0) throw SchemaError("action rule on unknown manifold class '" + rule.on + "'");
      Monomial key = sig->unit_monomial();
      key.cls = static_cast<uint16_t>(on);
      Element value(sig);
      for (const auto& [cls, q] : rule.value) {
        const int k = table->find(cls);
        if (k < 0) throw SchemaError("action value names unknown manifold class '" + cls + "'");
        Monomial vm = sig->unit_monomial();
        vm.cls = static_cast<uint16_t>(k);
        value.add_term(vm, q);
      }
      if (!value.is_zero()) {
        auto vdeg = value.homogeneous_degree();
        if (!vdeg || *vdeg != table->degrees[on] + degree)
          throw SchemaError("action of '" + name + "' on '" + rule.on + "' does not raise degree by " +
                            std::to_string(degree));
        entry.map.emplace(std::move(key), std::move(value));
      }
    }
    out.classes.emplace(name, std::move(entry));
  }
  return out;
}

BVModel build_sphere_model(SphereKind kind, const ManifoldAlgebra& manifold,
                           const RawAction& action) {
  std::vector<GeneratorSpec> gens;
  if (kind == SphereKind::S1)
    gens.push_back({"x", GenKind::GroupFree, 0, 0});
  else
    gens.push_back({"u", GenKind::PolyEven, 2, 0});
  auto sig = std::make_shared<Signature>(std::move(gens), manifold.to_table());
  const std::string cls = kind == SphereKind::S1 ? "[S1]" : "[S3]";
  SphereActionRule rule;
  rule.sphere_dim = kind == SphereKind::S1 ? 1 : 3;
  rule.action_class = cls;
  rule.action = bind_action(sig, action);
  const auto& entry = rule.action.require(cls);
  if (entry.degree != rule.sphere_dim)
    throw SchemaError("acting class " + cls + " must have degree " +
                      std::to_string(rule.sphere_dim));
  BVModel m;
  m.sig = sig;
  m.name = kind == SphereKind::S1 ? "sphere_action(S1)" : "sphere_action(S3)";
  m.rule = std::move(rule);
  return m;
}

void MonoidPresentation::validate() const {
  if (free_rank < 0) throw SchemaError("free_rank must be non-negative");
  for (int t : torsion)
    if (t < 2) throw SchemaError("torsion invariant factor " + std::to_string(t) + " is not >= 2");
  for (const auto& [name, deg] : higher) {
    if (deg < 2) throw SchemaError("higher generator '" + name + "' must have degree >= 2");
    if (name.empty()) throw SchemaError("higher generator without a name");
  }
}

BVModel build_rational_action_model(const MonoidPresentation& monoid,
                                    const ManifoldAlgebra& manifold, const RawAction& action,
                                    const std::map<std::string, std::string>& hur,
                                    const RawBLoop& b_loop) {
  monoid.validate();
  std::vector<GeneratorSpec> gens;
  for (int i = 0; i < monoid.free_rank; ++i)
    gens.push_back({"x" + std::to_string(i + 1), GenKind::GroupFree, 0, 0});
  for (size_t t = 0; t < monoid.torsion.size(); ++t)
    gens.push_back({"y" + std::to_string(t + 1), GenKind::GroupTorsion, 0, monoid.torsion[t]});
  for (const auto& [name, deg] : monoid.higher) {
    const GenKind kind = (deg - 1) % 2 == 0 ? GenKind::PolyEven : GenKind::ExtOdd;
    gens.push_back({"s" + name, kind, deg - 1, 0});
  }
  auto sig = std::make_shared<Signature>(std::move(gens), manifold.to_table());

  RationalActionRule rule;
  rule.action = bind_action(sig, action);
  auto hur_class = [&](const std::string& gen_name) {
    auto it = hur.find(gen_name);
    if (it == hur.end())
      throw ModelIncompleteError("missing hur entry for generator '" + gen_name + "'");
    rule.action.require(it->second);  // the acting class itself must exist
    return it->second;
  };
  rule.hur_free.resize(monoid.free_rank);
  for (int i = 0; i < monoid.free_rank; ++i)
    rule.hur_free[i] = hur_class("x" + std::to_string(i + 1));
  rule.hur_poly.resize(sig->poly_count());
  rule.hur_loop_ext.resize(sig->ext_count());
  for (const auto& [name, deg] : monoid.higher) {
    const int id = sig->find("s" + name);
    if ((deg - 1) % 2 == 0)
      rule.hur_poly[sig->slot_of(id)] = hur_class(name);
    else
      rule.hur_loop_ext[sig->slot_of(id)] = hur_class(name);
  }
  for (const auto& [key_expr, terms] : b_loop.entries) {
    Element key = parse_monomial_expression(sig, key_expr);
    if (key.term_count() != 1 || !(key.terms().begin()->second == 1))
      throw SchemaError("b_loop key '" + key_expr + "' must be a plain basis monomial");
    const Monomial km = key.terms().begin()->first;
    if (!sig->is_loop_monomial(km))
      throw SchemaError("b_loop key '" + key_expr + "' is not a loop monomial");
    Element value(sig);
    for (const auto& [coeff, mexpr] : terms) {
      Element t = parse_monomial_expression(sig, mexpr);
      value += coeff * t;
    }
    if (!value.is_zero()) {
      auto vdeg = value.homogeneous_degree();
      if (!vdeg || *vdeg != sig->degree(km) + 1)
        throw SchemaError("b_loop value for '" + key_expr + "' must raise degree by 1");
      if (sig->degree(km) == 0)
        throw SchemaError("b_loop must vanish on group monomials such as '" + key_expr + "'");
      rule.b_loop.values.emplace(km, std::move(value));
    }
  }
  BVModel m;
  m.sig = sig;
  m.name = "rational_action";
  m.rule = std::move(rule);
  return m;
}

BVModel tensor_model(const BVModel& a, const BVModel& b) {
  const Signature& as = *a.sig;
  const Signature& bs = *b.sig;
  if (as.table() && bs.table())
    throw SchemaError("tensor of two table-bearing models is not supported");
  std::vector<GeneratorSpec> gens;
  for (int id = 0; id < as.generator_count(); ++id) gens.push_back(as.gen(id));
  for (int id = 0; id < bs.generator_count(); ++id) gens.push_back(bs.gen(id));
  std::shared_ptr<const TableFactor> table = as.table() ? as.table_ptr() : bs.table_ptr();
  TensorRule rule;
  rule.left = std::make_shared<BVModel>(a);
  rule.right = std::make_shared<BVModel>(b);
  rule.table_on_left = as.table() != nullptr;
  BVModel m;
  m.sig = std::make_shared<Signature>(std::move(gens), std::move(table));
  m.name = a.name + " (x) " + b.name;
  m.rule = std::move(rule);
  return m;
}

namespace {

void require_layout_match(const Signature& a, const Signature& b) {
  bool ok = a.generator_count() == b.generator_count() && a.free_count() == b.free_count() &&
            a.torsion_count() == b.torsion_count() && a.poly_count() == b.poly_count() &&
            a.ext_count() == b.ext_count();
  auto same_gen = [](const GeneratorSpec& x, const GeneratorSpec& y) {
    return x.name == y.name && x.kind == y.kind && x.degree == y.degree &&
           x.torsion_order == y.torsion_order;
  };
  if (ok) {
    for (int s = 0; s < a.free_count() && ok; ++s)
      ok = same_gen(a.gen(a.free_gen(s)), b.gen(b.free_gen(s)));
    for (int s = 0; s < a.torsion_count() && ok; ++s)
      ok = same_gen(a.gen(a.torsion_gen(s)), b.gen(b.torsion_gen(s)));
    for (int s = 0; s < a.poly_count() && ok; ++s)
      ok = same_gen(a.gen(a.poly_gen(s)), b.gen(b.poly_gen(s)));
    for (int s = 0; s < a.ext_count() && ok; ++s)
      ok = same_gen(a.gen(a.ext_gen(s)), b.gen(b.ext_gen(s)));
  }
  if (!ok) throw SchemaError("signatures do not share a slot layout");
}

}  // namespace

DecompositionReport decomposition_check(const LieGroupData& data, const WindowSpec& window) {
  data.validate();
  const BVModel flat = build_lie_group_model(data);
  const int l = data.free_rank;

  std::vector<BVModel> factors;
  for (int i = 0; i < l; ++i) {
    LieNaming naming;
    naming.x_base = i + 1;
    naming.d_base = i + 1;
    factors.push_back(build_lie_group_model(LieGroupData{1, {}, {}}, 0, naming));
  }
  if (!data.torsion.empty())
    factors.push_back(build_lie_group_model(LieGroupData{0, data.torsion, {}}, 0, {}));
  for (size_t k = 0; k < data.odd_degrees.size(); ++k) {
    LieNaming naming;
    naming.s_base = l + 1 + static_cast<int>(k);
    naming.d_base = l + 1 + static_cast<int>(k);
    factors.push_back(
        build_lie_group_model(LieGroupData{0, {}, {data.odd_degrees[k]}}, 0, naming));
  }

  BVModel lhs = factors.empty() ? build_lie_group_model(LieGroupData{0, {}, {}})
                                : factors.front();
  for (size_t i = 1; i < factors.size(); ++i) lhs = tensor_model(lhs, factors[i]);
  require_layout_match(*flat.sig, *lhs.sig);

  DecompositionReport rep;
  rep.model_name = flat.name;
  const std::vector<Monomial> W = enumerate_window(*flat.sig, window);
  for (const Monomial& w : W) {
    // Theta is the identity on slot data: group, polynomial and dual slots
    // appear in the same order on both sides, and every generator crossed
    // while flattening the tensor word has even degree.
    Element bt = apply_B(lhs, Element::monomial(lhs.sig, w));
    Element expect(flat.sig);
    for (const auto& [m, c] : bt.terms()) expect.add_term(m, c);
    Element direct = apply_B(flat, Element::monomial(flat.sig, w));
    ++rep.checked;
    if (!(direct == expect)) {
      if (rep.mismatched == 0) {
        rep.first_input = flat.sig->to_string(w);
        rep.first_lhs = expect.str();
        rep.first_rhs = direct.str();
      }
      ++rep.mismatched;
    }
  }
  return rep;
}

int cap_product_sign(std::span<const int> subset) {
  long long s = 0;
  for (int j : subset) s += j - 1;
  return pow_sign(s);
}

CheckReport run_cap_sign_checks(const BVModel& lie_model) {
  const auto* rule = std::get_if<LieGroupRule>(&lie_model.rule);
  if (!rule) throw SchemaError("cap-sign checks need a lie_group model");
  const int r = rule->data.rank();
  const ActionTable act = lie_action_table(lie_model.sig, rule->data);
  const Signature& sig = *lie_model.sig;

  CheckReport rep;
  rep.title = "cap product sign law: " + lie_model.name;
  long long checked = 0, failed = 0;
  for (uint32_t mask = 0; mask < (1u << r); ++mask) {
    std::vector<int> subset;
    for (int j = 1; j <= r; ++j)
      if (mask & (1u << (j - 1))) subset.push_back(j);
    // cap the full dual word by the subset, innermost factor first
    Monomial full = sig.unit_monomial();
    full.ext = r >= 32 ? ~0u : (1u << r) - 1;
    Element acc = Element::monomial(lie_model.sig, full);
    for (auto it = subset.rbegin(); it != subset.rend(); ++it) {
      Element next(lie_model.sig);
      for (const auto& [m, c] : acc.terms())
        next += c * act.apply("hur_x" + std::to_string(*it), lie_model.sig, m);
      acc = std::move(next);
    }
    Monomial complement = sig.unit_monomial();
    complement.ext = full.ext & ~mask;
    Element expected =
        Element::monomial(lie_model.sig, complement, Rational(cap_product_sign(subset)));
    ++checked;
    if (!(acc == expected)) {
      ++failed;
      if (rep.examples.empty()) {
        std::string in = "subset {";
        for (size_t i = 0; i < subset.size(); ++i)
          in += (i ? "," : "") + std::to_string(subset[i]);
        in += "}";
        rep.examples.push_back({"cap_sign", {in}, acc.str(), expected.str()});
      }
    }
  }
  rep.set("cap_sign", checked, failed);
  return rep;
}

CheckReport run_formula_agreement(const BVModel& lie_model, const SweepOptions& opts) {
  const BVModel cf = build_coproduct_model_for_lie(lie_model, opts.window);
  CheckReport rep;
  rep.title = "coproduct formula vs direct rule: " + lie_model.name;
  long long checked = 0, failed = 0;
  for (const Monomial& w : enumerate_window(*lie_model.sig, opts.window)) {
    Element e = Element::monomial(lie_model.sig, w);
    Element via_coproduct = apply_B(cf, e);
    Element direct = apply_B(lie_model, e);
    ++checked;
    if (!(via_coproduct == direct)) {
      ++failed;
      if (rep.examples.empty())
        rep.examples.push_back({"formula_agreement",
                                {lie_model.sig->to_string(w)},
                                via_coproduct.str(),
                                direct.str()});
    }
  }
  rep.set("formula_agreement", checked, failed);
  return rep;
}

}  // namespace loopbv
