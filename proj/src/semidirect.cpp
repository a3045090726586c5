#include "loopbv/semidirect.hpp"

#include "loopbv/errors.hpp"
#include "loopbv/models.hpp"

namespace loopbv {

namespace {

inline int pow_sign(long long k) { return (k & 1LL) ? -1 : 1; }

const LieGroupData& lie_data(const BVModel& model) {
  const auto* rule = std::get_if<LieGroupRule>(&model.rule);
  if (!rule) throw SchemaError("semidirect checks need a lie_group model");
  return rule->data;
}

// unsuspended degree |x_j| of the 1-based higher generator index j
int higher_degree(const LieGroupData& data, int j) {
  if (j <= data.free_rank || j > data.rank())
    throw SchemaError("generator index " + std::to_string(j) + " is not a higher generator");
  return data.odd_degrees[j - data.free_rank - 1];
}

std::map<int, Rational> samelson_combo(const SamelsonTable& table, const LieGroupData& data,
                                       int j, int k) {
  if (auto it = table.entries.find({j, k}); it != table.entries.end()) return it->second;
  if (auto it = table.entries.find({k, j}); it != table.entries.end()) {
    // {f,g} = -(-1)^{|f||g|} {g,f}
    const int sign = -pow_sign(static_cast<long long>(higher_degree(data, j)) *
                               higher_degree(data, k));
    std::map<int, Rational> out = it->second;
    for (auto& [idx, c] : out) c *= sign;
    return out;
  }
  if (!table.zero_default)
    throw ModelIncompleteError("missing samelson entry {" + std::to_string(j) + "," +
                               std::to_string(k) + "}");
  return {};
}

Monomial higher_monomial(const Signature& sig, const LieGroupData& data, int j) {
  Monomial m = sig.unit_monomial();
  m.e[sig.free_count() + sig.torsion_count() + (j - data.free_rank - 1)] = 1;
  return m;
}

void add_lie(std::map<int, Rational>& lie, int j, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = lie.try_emplace(j, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) lie.erase(it);
  }
}

}  // namespace

SemidirectElement semidirect_bracket(const BVModel& lie_model, const SamelsonTable& samelson,
                                     const ActionTable& act, const SemidirectElement& a,
                                     const SemidirectElement& b) {
  const LieGroupData& data = lie_data(lie_model);
  const Signature& sig = *lie_model.sig;
  SemidirectElement out;
  out.module = Element::zero(lie_model.sig);

  for (const auto& [j, ca] : a.lie)
    for (const auto& [k, cb] : b.lie)
      for (const auto& [idx, c] : samelson_combo(samelson, data, j, k))
        add_lie(out.lie, idx, ca * cb * c);

  // {s^{-1}f, x} = (-1)^{|f|-1} (hur f).x
  for (const auto& [j, ca] : a.lie) {
    const int sign = pow_sign(higher_degree(data, j) - 1);
    for (const auto& [m, c] : b.module.terms())
      out.module += (ca * c * sign) * act.apply("hur_x" + std::to_string(j), lie_model.sig, m);
  }
  // {x, s^{-1}f} = (-1)^{|x||f|} (hur f).x, by graded antisymmetry
  for (const auto& [k, cb] : b.lie) {
    const int fdeg = higher_degree(data, k);
    for (const auto& [m, c] : a.module.terms()) {
      const int sign = pow_sign(static_cast<long long>(sig.degree(m)) * fdeg);
      out.module += (cb * c * sign) * act.apply("hur_x" + std::to_string(k), lie_model.sig, m);
    }
  }
  return out;
}

namespace {

struct BasisItem {
  // either a higher generator (j > 0) or a manifold monomial
  int j = 0;
  Monomial mono;
  int degree = 0;
};

std::vector<BasisItem> semidirect_basis(const BVModel& model, const SweepOptions& opts) {
  const LieGroupData& data = lie_data(model);
  const Signature& sig = *model.sig;
  std::vector<BasisItem> out;
  for (int j = data.free_rank + 1; j <= data.rank(); ++j)
    out.push_back({j, Monomial{}, higher_degree(data, j) - 1});
  for (const Monomial& m : enumerate_window(sig, opts.window)) {
    auto [loop, mani] = split_loop_manifold(sig, m);
    if (loop == sig.unit_monomial()) out.push_back({0, m, sig.degree(m)});
  }
  return out;
}

SemidirectElement as_semidirect(const BVModel& model, const BasisItem& item) {
  SemidirectElement e;
  e.module = Element::zero(model.sig);
  if (item.j > 0)
    e.lie[item.j] = 1;
  else
    e.module.add_term(item.mono, 1);
  return e;
}

Element embed(const BVModel& model, const LieGroupData& data, const SemidirectElement& e) {
  Element out = e.module;
  for (const auto& [j, c] : e.lie)
    out.add_term(higher_monomial(*model.sig, data, j), c);
  return out;
}

bool semidirect_equal(const SemidirectElement& a, const SemidirectElement& b) {
  return a.lie == b.lie && a.module == b.module;
}

SemidirectElement scale(SemidirectElement e, const Rational& c) {
  for (auto& [j, v] : e.lie) v *= c;
  e.module *= c;
  if (c == 0) e.lie.clear();
  return e;
}

SemidirectElement add(SemidirectElement a, const SemidirectElement& b) {
  for (const auto& [j, c] : b.lie) add_lie(a.lie, j, c);
  a.module += b.module;
  return a;
}

}  // namespace

CheckReport check_morphism_into_model(const BVModel& lie_model, const SamelsonTable& samelson,
                                      const SweepOptions& opts) {
  const LieGroupData& data = lie_data(lie_model);
  const ActionTable act = lie_action_table(lie_model.sig, data);
  const auto basis = semidirect_basis(lie_model, opts);

  CheckReport rep;
  rep.title = "semidirect morphism: " + lie_model.name;
  auto& c = rep.counter("bracket_preserved");
  auto describe = [&](const BasisItem& it) {
    return it.j > 0 ? "s^-1 x" + std::to_string(it.j) : lie_model.sig->to_string(it.mono);
  };
  for (const auto& u : basis)
    for (const auto& v : basis) {
      SemidirectElement sd =
          semidirect_bracket(lie_model, samelson, act, as_semidirect(lie_model, u),
                             as_semidirect(lie_model, v));
      Element expected = embed(lie_model, data, sd);
      Element got = bracket(lie_model, embed(lie_model, data, as_semidirect(lie_model, u)),
                            embed(lie_model, data, as_semidirect(lie_model, v)));
      ++c.checked;
      if (!(expected == got)) {
        ++c.failed;
        if (rep.examples.empty())
          rep.examples.push_back(
              {"bracket_preserved", {describe(u), describe(v)}, expected.str(), got.str()});
      }
    }
  return rep;
}

CheckReport check_semidirect_axioms(const BVModel& lie_model, const SamelsonTable& samelson,
                                    const SweepOptions& opts) {
  const LieGroupData& data = lie_data(lie_model);
  const ActionTable act = lie_action_table(lie_model.sig, data);
  const auto basis = semidirect_basis(lie_model, opts);
  auto br = [&](const SemidirectElement& x, const SemidirectElement& y) {
    return semidirect_bracket(lie_model, samelson, act, x, y);
  };

  CheckReport rep;
  rep.title = "semidirect bracket axioms: " + lie_model.name;
  rep.set("antisymmetry", 0, 0);
  rep.set("jacobi", 0, 0);
  auto& ca = rep.counter("antisymmetry");
  auto& cj = rep.counter("jacobi");
  auto describe = [&](const BasisItem& it) {
    return it.j > 0 ? "s^-1 x" + std::to_string(it.j) : lie_model.sig->to_string(it.mono);
  };
  for (const auto& u : basis)
    for (const auto& v : basis) {
      SemidirectElement lhs = br(as_semidirect(lie_model, u), as_semidirect(lie_model, v));
      SemidirectElement rhs = scale(br(as_semidirect(lie_model, v), as_semidirect(lie_model, u)),
                                    Rational(-pow_sign((u.degree + 1LL) * (v.degree + 1))));
      ++ca.checked;
      if (!semidirect_equal(lhs, rhs)) {
        ++ca.failed;
        if (rep.examples.empty())
          rep.examples.push_back({"antisymmetry",
                                  {describe(u), describe(v)},
                                  embed(lie_model, data, lhs).str(),
                                  embed(lie_model, data, rhs).str()});
      }
    }
  for (const auto& u : basis)
    for (const auto& v : basis)
      for (const auto& w : basis) {
        auto a = as_semidirect(lie_model, u), b = as_semidirect(lie_model, v),
             cc = as_semidirect(lie_model, w);
        SemidirectElement lhs = br(a, br(b, cc));
        SemidirectElement rhs =
            add(br(br(a, b), cc),
                scale(br(b, br(a, cc)), Rational(pow_sign((u.degree + 1LL) * (v.degree + 1)))));
        ++cj.checked;
        if (!semidirect_equal(lhs, rhs)) {
          ++cj.failed;
          if (rep.examples.empty())
            rep.examples.push_back({"jacobi",
                                    {describe(u), describe(v), describe(w)},
                                    embed(lie_model, data, lhs).str(),
                                    embed(lie_model, data, rhs).str()});
        }
      }
  return rep;
}

CheckReport check_pi1_grouplike_identity(const BVModel& lie_model, const SweepOptions& opts) {
  const LieGroupData& data = lie_data(lie_model);
  const Signature& sig = *lie_model.sig;
  const ActionTable act = lie_action_table(lie_model.sig, data);

  CheckReport rep;
  rep.title = "pi1 group-like bracket: " + lie_model.name;
  auto& c = rep.counter("grouplike_identity");

  std::vector<Monomial> manifolds;
  for (const Monomial& m : enumerate_window(sig, opts.window)) {
    auto [loop, mani] = split_loop_manifold(sig, m);
    if (loop == sig.unit_monomial()) manifolds.push_back(m);
  }
  std::vector<std::pair<std::string, Monomial>> pi1_gens;
  for (int s = 0; s < sig.free_count(); ++s) {
    Monomial f = sig.unit_monomial();
    f.e[s] = 1;
    pi1_gens.emplace_back("hur_x" + std::to_string(s + 1), f);
  }
  for (int s = 0; s < sig.torsion_count(); ++s) {
    Monomial f = sig.unit_monomial();
    f.e[sig.free_count() + s] = 1;
    pi1_gens.emplace_back("", f);  // torsion: hur f = 0
  }

  for (const auto& [cls, f] : pi1_gens)
    for (const Monomial& x : manifolds) {
      Element got = bracket(lie_model, Element::monomial(lie_model.sig, f),
                            Element::monomial(lie_model.sig, x));
      Element expected(lie_model.sig);
      if (!cls.empty()) {
        Element acted = act.apply(cls, lie_model.sig, x);
        for (const auto& [am, ac] : acted.terms()) mono_mul_into(expected, sig, f, am, ac);
      }
      ++c.checked;
      if (!(got == expected)) {
        ++c.failed;
        if (rep.examples.empty())
          rep.examples.push_back({"grouplike_identity",
                                  {sig.to_string(f), sig.to_string(x)},
                                  got.str(),
                                  expected.str()});
      }
    }
  return rep;
}

}  // namespace loopbv
