#include "loopbv/sweep.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <tuple>

#include "loopbv/errors.hpp"
#include "loopbv/hopf.hpp"

namespace loopbv {

namespace {

inline int pow_sign(long long k) { return (k & 1LL) ? -1 : 1; }

// One code path per phase, two drivers. The serial driver is the reference
// the parallel kernel is tested against.
template <class Fn>
void for_range_serial(long long n, Fn&& fn) {
  for (long long i = 0; i < n; ++i) fn(i);
}

template <class Fn>
void for_range(bool parallel, long long n, Fn&& fn) {
#ifdef LOOPBV_HAVE_OPENMP
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 256)
    for (long long i = 0; i < n; ++i) fn(i);
    return;
  }
#else
  (void)parallel;
#endif
  for_range_serial(n, fn);
}

void enum_rec(const Signature& sig, const WindowSpec& w, int slot, int poly_budget, Monomial& m,
              std::vector<Monomial>& out) {
  const int nf = sig.free_count(), nt = sig.torsion_count(), np = sig.poly_count();
  if (slot < nf) {
    for (int v = -w.free_exp_cap; v <= w.free_exp_cap; ++v) {
      m.e[slot] = v;
      enum_rec(sig, w, slot + 1, poly_budget, m, out);
    }
    m.e[slot] = 0;
    return;
  }
  if (slot < nf + nt) {
    for (int v = 0; v < sig.torsion_order(slot - nf); ++v) {
      m.e[slot] = v;
      enum_rec(sig, w, slot + 1, poly_budget, m, out);
    }
    m.e[slot] = 0;
    return;
  }
  if (slot < nf + nt + np) {
    const int d = sig.poly_degree(slot - nf - nt);
    for (int v = 0; v * d <= poly_budget; ++v) {
      m.e[slot] = v;
      enum_rec(sig, w, slot + 1, poly_budget - v * d, m, out);
    }
    m.e[slot] = 0;
    return;
  }
  const uint32_t masks = sig.ext_count() >= 32 ? 0 : (1u << sig.ext_count());
  const int classes = sig.table() ? sig.table()->class_count() : 1;
  for (uint32_t ext = 0; ext < (masks == 0 ? 1u : masks); ++ext) {
    m.ext = ext;
    for (int cls = 0; cls < classes; ++cls) {
      m.cls = static_cast<uint16_t>(cls);
      const int deg = sig.degree(m);
      if (deg <= w.degree_bound && deg >= -w.degree_bound) out.push_back(m);
    }
  }
  m.ext = 0;
  m.cls = 0;
}

}  // namespace

std::vector<Monomial> enumerate_window(const Signature& sig, const WindowSpec& w) {
  if (w.degree_bound < 1) throw SchemaError("degree window must be >= 1");
  if (w.free_exp_cap < 0) throw SchemaError("free exponent cap must be >= 0");
  int ext_drop = 0;
  for (int s = 0; s < sig.ext_count(); ++s)
    if (sig.ext_degree(s) < 0) ext_drop -= sig.ext_degree(s);
  int cls_drop = 0;
  if (sig.table())
    for (int k = 0; k < sig.table()->class_count(); ++k)
      cls_drop = std::max(cls_drop, -sig.table()->degrees[k]);
  std::vector<Monomial> out;
  Monomial m = sig.unit_monomial();
  enum_rec(sig, w, 0, w.degree_bound + ext_drop + cls_drop, m, out);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    const int da = sig.degree(a), db = sig.degree(b);
    if (da != db) return da < db;
    return a < b;
  });
  return out;
}

std::vector<Monomial> enumerate_loop_window(const Signature& sig, int max_degree,
                                            int free_exp_cap) {
  WindowSpec w{max_degree, free_exp_cap};
  std::vector<Monomial> all = enumerate_window(sig, w);
  std::vector<Monomial> out;
  for (const Monomial& m : all)
    if (sig.is_loop_monomial(m) && sig.degree(m) >= 0) out.push_back(m);
  return out;
}

namespace {

struct FirstFailure {
  long long index = -1;
  void offer(long long i) {
    if (index < 0 || i < index) index = i;
  }
};

std::vector<std::pair<int, int>> filtered_pairs(const std::vector<int>& deg, int bound) {
  std::vector<std::pair<int, int>> out;
  const int n = static_cast<int>(deg.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int d = deg[i] + deg[j];
      if (d <= bound && d >= -bound) out.emplace_back(i, j);
    }
  return out;
}

std::vector<std::tuple<int, int, int>> filtered_triples(const std::vector<int>& deg, int bound) {
  std::vector<std::tuple<int, int, int>> out;
  const int n = static_cast<int>(deg.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const int d = deg[i] + deg[j] + deg[k];
        if (d <= bound && d >= -bound) out.emplace_back(i, j, k);
      }
  return out;
}

}  // namespace

CheckReport run_axiom_sweep(const BVModel& model, const SweepOptions& opts) {
  const Signature& sig = *model.sig;
  CheckReport rep;
  rep.title = "axiom sweep: " + model.name + " (window " +
              std::to_string(opts.window.degree_bound) + ", exponent cap " +
              std::to_string(opts.window.free_exp_cap) + ")";

  const std::vector<Monomial> W = enumerate_window(sig, opts.window);
  const long long N = static_cast<long long>(W.size());
  std::vector<int> deg(N);
  for (long long i = 0; i < N; ++i) deg[i] = sig.degree(W[i]);

  // B(1) = 0
  {
    Element b1 = apply_B(model, Element::unit(model.sig));
    rep.set("unit_killed", 1, b1.is_zero() ? 0 : 1);
    if (!b1.is_zero()) rep.examples.push_back({"unit_killed", {"1"}, b1.str(), "0"});
  }

  std::vector<Element> E(N), BM(N);
  for (long long i = 0; i < N; ++i) E[i] = Element::monomial(model.sig, W[i]);
  for_range(opts.parallel, N, [&](long long i) { BM[i] = apply_B(model, E[i]); });

  // phase 1: degree +1 and B^2 = 0 on basis monomials
  std::vector<uint8_t> mono_flags(N, 0);
  for_range(opts.parallel, N, [&](long long i) {
    uint8_t f = 0;
    if (!BM[i].is_zero()) {
      auto d = BM[i].homogeneous_degree();
      if (!d || *d != deg[i] + 1) f |= 1;
    }
    if (!apply_B(model, BM[i]).is_zero()) f |= 2;
    mono_flags[i] = f;
  });

  // pair precomputation
  auto at = [N](long long i, long long j) { return static_cast<size_t>(i * N + j); };
  std::vector<Element> P(N * N), BP(N * N), ABM(N * N), BR(N * N), BBR(N * N);
  for_range(opts.parallel, N * N, [&](long long t) {
    const long long i = t / N, j = t % N;
    P[t] = E[i] * E[j];
    BP[t] = apply_B(model, P[t]);
    ABM[t] = E[i] * BM[j];
    const int sa = pow_sign(deg[i]);
    Element br = BP[t] - BM[i] * E[j];
    if (sa < 0)
      br += ABM[t];
    else
      br -= ABM[t];
    if (sa < 0) br *= Rational(-1);
    BR[t] = std::move(br);
    BBR[t] = apply_B(model, BR[t]);
  });

  const auto pairs = filtered_pairs(deg, opts.window.degree_bound);
  std::vector<uint8_t> pair_flags(pairs.size(), 0);
  for_range(opts.parallel, static_cast<long long>(pairs.size()), [&](long long t) {
    const auto [i, j] = pairs[t];
    Element rhs = Rational(-pow_sign((deg[i] + 1) * (deg[j] + 1))) * BR[at(j, i)];
    pair_flags[t] = (BR[at(i, j)] == rhs) ? 0 : 1;
  });

  const auto triples = filtered_triples(deg, opts.window.degree_bound);
  std::vector<uint8_t> triple_flags(triples.size(), 0);
  // Per-thread scratch keeps the steady state free of heap traffic.
  struct TripleScratch {
    Element abc, B_abc, Ba_bc, a_Bbc, side, tmp, tmp2, lhs;
    const Signature* bound = nullptr;
    void bind(const SigPtr& sig) {
      if (bound == sig.get()) return;
      bound = sig.get();
      for (Element* e : {&abc, &B_abc, &Ba_bc, &a_Bbc, &side, &tmp, &tmp2, &lhs}) e->reset(sig);
    }
  };
  for_range(opts.parallel, static_cast<long long>(triples.size()), [&](long long t) {
    thread_local TripleScratch s;
    s.bind(model.sig);
    const auto [i, j, k] = triples[t];
    const int da = deg[i], db = deg[j];
    const Element& a = E[i];
    const Element& b = E[j];
    const Element& c = E[k];
    const Rational one(1), minus(-1);
    uint8_t f = 0;

    s.abc.clear();
    multiply_add(s.abc, P[at(i, j)], c, one);
    apply_B_into(model, s.abc, s.B_abc);
    s.Ba_bc.clear();
    multiply_add(s.Ba_bc, BM[i], P[at(j, k)], one);
    s.a_Bbc.clear();
    multiply_add(s.a_Bbc, a, BP[at(j, k)], one);

    // seven-term relation
    {
      Element& rhs = s.side;
      rhs.clear();
      multiply_add(rhs, BP[at(i, j)], c, one);
      rhs.add_scaled(s.a_Bbc, Rational(pow_sign(da)));
      multiply_add(rhs, b, BP[at(i, k)], Rational(pow_sign((da - 1) * db)));
      rhs.add_scaled(s.Ba_bc, minus);
      multiply_add(rhs, ABM[at(i, j)], c, Rational(-pow_sign(da)));
      multiply_add(rhs, P[at(i, j)], BM[k], Rational(-pow_sign(da + db)));
      if (!(s.B_abc == rhs)) f |= 1;
    }
    // Poisson relation; {a,bc} reuses the pieces above
    {
      const int sa = pow_sign(da);
      Element& lhs = s.lhs;
      lhs.clear();
      lhs.add_scaled(s.B_abc, Rational(sa));
      lhs.add_scaled(s.Ba_bc, Rational(-sa));
      lhs.add_scaled(s.a_Bbc, minus);
      Element& rhs = s.side;
      rhs.clear();
      multiply_add(rhs, BR[at(i, j)], c, one);
      multiply_add(rhs, b, BR[at(i, k)], Rational(pow_sign((da - 1) * db)));
      if (!(lhs == rhs)) f |= 2;
    }
    // shifted Jacobi, brackets derived from B throughout:
    // {x,y} = s_x ( B(xy) - (Bx)y - s_x x(By) ) with B(y) precomputed
    {
      auto bracket_into = [&](Element& out, int dx, const Element& ex, const Element& bmx,
                              const Element& y, const Element& by) {
        const int sx = pow_sign(dx);
        s.tmp.clear();
        multiply_add(s.tmp, ex, y, one);
        apply_B_into(model, s.tmp, s.tmp2);
        out.add_scaled(s.tmp2, Rational(sx));
        multiply_add(out, bmx, y, Rational(-sx));
        multiply_add(out, ex, by, minus);
      };
      Element& lhs = s.lhs;
      lhs.clear();
      bracket_into(lhs, da, a, BM[i], BR[at(j, k)], BBR[at(j, k)]);
      Element& rhs = s.side;
      rhs.clear();
      bracket_into(rhs, da + db + 1, BR[at(i, j)], BBR[at(i, j)], c, BM[k]);
      const int outer = pow_sign((da + 1) * (db + 1));
      // {b,{a,c}} scaled by the interchange sign, accumulated directly
      {
        const int sx = pow_sign(db);
        s.tmp.clear();
        multiply_add(s.tmp, b, BR[at(i, k)], one);
        apply_B_into(model, s.tmp, s.tmp2);
        rhs.add_scaled(s.tmp2, Rational(outer * sx));
        multiply_add(rhs, BM[j], BR[at(i, k)], Rational(-outer * sx));
        multiply_add(rhs, b, BBR[at(i, k)], Rational(-outer));
      }
      if (!(lhs == rhs)) f |= 4;
    }
    triple_flags[t] = f;
  });

  // deterministic accumulation and counterexample reconstruction
  {
    long long fail_deg = 0, fail_sq = 0;
    FirstFailure fdeg, fsq;
    for (long long i = 0; i < N; ++i) {
      if (mono_flags[i] & 1) ++fail_deg, fdeg.offer(i);
      if (mono_flags[i] & 2) ++fail_sq, fsq.offer(i);
    }
    rep.set("b_degree_plus_one", N, fail_deg);
    rep.set("b_squared", N, fail_sq);
    if (fdeg.index >= 0)
      rep.examples.push_back({"b_degree_plus_one",
                              {sig.to_string(W[fdeg.index])},
                              BM[fdeg.index].str(),
                              "homogeneous of degree " + std::to_string(deg[fdeg.index] + 1)});
    if (fsq.index >= 0)
      rep.examples.push_back({"b_squared",
                              {sig.to_string(W[fsq.index])},
                              apply_B(model, BM[fsq.index]).str(),
                              "0"});
  }
  {
    long long fail = 0;
    FirstFailure ff;
    for (size_t t = 0; t < pairs.size(); ++t)
      if (pair_flags[t]) ++fail, ff.offer(static_cast<long long>(t));
    rep.set("antisymmetry", static_cast<long long>(pairs.size()), fail);
    if (ff.index >= 0) {
      const auto [i, j] = pairs[ff.index];
      rep.examples.push_back(
          {"antisymmetry",
           {sig.to_string(W[i]), sig.to_string(W[j])},
           BR[at(i, j)].str(),
           (Rational(-pow_sign((deg[i] + 1) * (deg[j] + 1))) * BR[at(j, i)]).str()});
    }
  }
  {
    long long fail7 = 0, failp = 0, failj = 0;
    FirstFailure f7, fp, fj;
    for (size_t t = 0; t < triples.size(); ++t) {
      if (triple_flags[t] & 1) ++fail7, f7.offer(static_cast<long long>(t));
      if (triple_flags[t] & 2) ++failp, fp.offer(static_cast<long long>(t));
      if (triple_flags[t] & 4) ++failj, fj.offer(static_cast<long long>(t));
    }
    const long long nt = static_cast<long long>(triples.size());
    rep.set("seven_term", nt, fail7);
    rep.set("poisson", nt, failp);
    rep.set("jacobi", nt, failj);
    auto reconstruct = [&](const char* id, long long t, auto&& sides) {
      const auto [i, j, k] = triples[t];
      IdentitySides s = sides(E[i], E[j], E[k]);
      rep.examples.push_back(
          {id, {sig.to_string(W[i]), sig.to_string(W[j]), sig.to_string(W[k])}, s.lhs.str(),
           s.rhs.str()});
    };
    if (f7.index >= 0)
      reconstruct("seven_term", f7.index,
                  [&](const Element& a, const Element& b, const Element& c) {
                    return bv7_sides(model, a, b, c);
                  });
    if (fp.index >= 0)
      reconstruct("poisson", fp.index, [&](const Element& a, const Element& b, const Element& c) {
        return poisson_sides(model, a, b, c);
      });
    if (fj.index >= 0)
      reconstruct("jacobi", fj.index, [&](const Element& a, const Element& b, const Element& c) {
        return jacobi_sides(model, a, b, c);
      });
  }
  return rep;
}

CheckReport run_subalgebra_checks(const BVModel& model, const SweepOptions& opts) {
  const Signature& sig = *model.sig;
  CheckReport rep;
  rep.title = "sub-BV embeddings: " + model.name;
  const std::vector<Monomial> W = enumerate_window(sig, opts.window);

  std::vector<Monomial> loops, manifolds;
  for (const Monomial& m : W) {
    if (sig.is_loop_monomial(m)) loops.push_back(m);
    auto [lp, mp] = split_loop_manifold(sig, m);
    if (lp == sig.unit_monomial() && !(mp == sig.unit_monomial())) manifolds.push_back(m);
  }

  std::vector<uint8_t> lflags(loops.size(), 0), mflags(manifolds.size(), 0);
  for_range(opts.parallel, static_cast<long long>(loops.size()), [&](long long i) {
    Element lhs = apply_B(model, Element::monomial(model.sig, loops[i]));
    Element rhs = loop_factor_B(model, loops[i]);
    lflags[i] = (lhs == rhs) ? 0 : 1;
  });
  for_range(opts.parallel, static_cast<long long>(manifolds.size()), [&](long long i) {
    mflags[i] = apply_B(model, Element::monomial(model.sig, manifolds[i])).is_zero() ? 0 : 1;
  });

  long long lfail = 0;
  FirstFailure fl;
  for (size_t i = 0; i < loops.size(); ++i)
    if (lflags[i]) ++lfail, fl.offer(static_cast<long long>(i));
  rep.set("loop_embedding", static_cast<long long>(loops.size()), lfail);
  if (fl.index >= 0)
    rep.examples.push_back({"loop_embedding",
                            {sig.to_string(loops[fl.index])},
                            apply_B(model, Element::monomial(model.sig, loops[fl.index])).str(),
                            loop_factor_B(model, loops[fl.index]).str()});

  long long mfail = 0;
  FirstFailure fm;
  for (size_t i = 0; i < manifolds.size(); ++i)
    if (mflags[i]) ++mfail, fm.offer(static_cast<long long>(i));
  rep.set("manifold_annihilated", static_cast<long long>(manifolds.size()), mfail);
  if (fm.index >= 0)
    rep.examples.push_back(
        {"manifold_annihilated",
         {sig.to_string(manifolds[fm.index])},
         apply_B(model, Element::monomial(model.sig, manifolds[fm.index])).str(), "0"});
  return rep;
}

CheckReport run_hopf_checks(const SigPtr& sig, const SweepOptions& opts, unsigned long seed,
                            int sample_pairs) {
  CheckReport rep;
  rep.title = "hopf diagonal";
  const std::vector<Monomial> L =
      enumerate_loop_window(*sig, opts.window.degree_bound, opts.window.free_exp_cap);
  const long long N = static_cast<long long>(L.size());

  using Key3 = std::tuple<Monomial, Monomial, Monomial>;
  std::vector<uint8_t> flags(N, 0);
  for_range(opts.parallel, N, [&](long long i) {
    Element a = Element::monomial(sig, L[i]);
    TensorSquareElement d = coproduct(a);
    uint8_t f = 0;
    // coassociativity
    std::map<Key3, Rational> left, right;
    for (const auto& [key, c] : d.terms) {
      for (const auto& [k2, c2] : coproduct(Element::monomial(sig, key.first)).terms) {
        auto& v = left[{k2.first, k2.second, key.second}];
        v += c * c2;
        if (v == 0) left.erase({k2.first, k2.second, key.second});
      }
      for (const auto& [k2, c2] : coproduct(Element::monomial(sig, key.second)).terms) {
        auto& v = right[{key.first, k2.first, k2.second}];
        v += c * c2;
        if (v == 0) right.erase({key.first, k2.first, k2.second});
      }
    }
    if (!(left == right)) f |= 1;
    // counit laws
    Element l(sig), r(sig);
    for (const auto& [key, c] : d.terms) {
      l.add_term(key.first, c * counit(Element::monomial(sig, key.second)));
      r.add_term(key.second, c * counit(Element::monomial(sig, key.first)));
    }
    if (!(l == a) || !(r == a)) f |= 2;
    flags[i] = f;
  });

  long long cfail = 0, ufail = 0;
  FirstFailure fc, fu;
  for (long long i = 0; i < N; ++i) {
    if (flags[i] & 1) ++cfail, fc.offer(i);
    if (flags[i] & 2) ++ufail, fu.offer(i);
  }
  rep.set("coassociativity", N, cfail);
  rep.set("counit_identity", N, ufail);
  if (fc.index >= 0)
    rep.examples.push_back({"coassociativity", {sig->to_string(L[fc.index])}, "(see monomial)",
                            "(Delta x id)Delta != (id x Delta)Delta"});
  if (fu.index >= 0)
    rep.examples.push_back(
        {"counit_identity", {sig->to_string(L[fu.index])}, "(id x eps)Delta != id", ""});

  // Delta is an algebra morphism, on seeded sample pairs
  if (N > 0) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> pick(0, N - 1);
    std::vector<std::pair<long long, long long>> samples;
    for (int s = 0; s < sample_pairs; ++s) samples.emplace_back(pick(rng), pick(rng));
    std::vector<uint8_t> aflags(samples.size(), 0);
    for_range(opts.parallel, static_cast<long long>(samples.size()), [&](long long t) {
      Element a = Element::monomial(sig, L[samples[t].first]);
      Element b = Element::monomial(sig, L[samples[t].second]);
      TensorSquareElement lhs = coproduct(a * b);
      TensorSquareElement rhs = tsq_multiply(coproduct(a), coproduct(b));
      aflags[t] = (lhs == rhs) ? 0 : 1;
    });
    long long afail = 0;
    FirstFailure fa;
    for (size_t t = 0; t < samples.size(); ++t)
      if (aflags[t]) ++afail, fa.offer(static_cast<long long>(t));
    rep.set("algebra_morphism", static_cast<long long>(samples.size()), afail);
    if (fa.index >= 0)
      rep.examples.push_back({"algebra_morphism",
                              {sig->to_string(L[samples[fa.index].first]),
                               sig->to_string(L[samples[fa.index].second])},
                              "Delta(ab)", "Delta(a)Delta(b)"});
  }
  return rep;
}

CheckReport run_algebra_checks(const SigPtr& sig, const SweepOptions& opts) {
  const Signature& s = *sig;
  CheckReport rep;
  rep.title = "graded algebra laws";
  const std::vector<Monomial> W = enumerate_window(s, opts.window);
  const long long N = static_cast<long long>(W.size());
  std::vector<int> deg(N);
  std::vector<Element> E(N);
  for (long long i = 0; i < N; ++i) {
    deg[i] = s.degree(W[i]);
    E[i] = Element::monomial(sig, W[i]);
  }

  const auto pairs = filtered_pairs(deg, opts.window.degree_bound);
  std::vector<uint8_t> pflags(pairs.size(), 0);
  for_range(opts.parallel, static_cast<long long>(pairs.size()), [&](long long t) {
    const auto [i, j] = pairs[t];
    Element ab = E[i] * E[j];
    Element ba = Rational(pow_sign(deg[i] * deg[j])) * (E[j] * E[i]);
    uint8_t f = (ab == ba) ? 0 : 1;
    if (!ab.is_zero()) {
      auto d = ab.homogeneous_degree();
      if (!d || *d != deg[i] + deg[j]) f |= 2;
    }
    pflags[t] = f;
  });

  const auto triples = filtered_triples(deg, opts.window.degree_bound);
  std::vector<uint8_t> tflags(triples.size(), 0);
  for_range(opts.parallel, static_cast<long long>(triples.size()), [&](long long t) {
    const auto [i, j, k] = triples[t];
    tflags[t] = ((E[i] * E[j]) * E[k] == E[i] * (E[j] * E[k])) ? 0 : 1;
  });

  long long cfail = 0, dfail = 0;
  FirstFailure fc, fd;
  for (size_t t = 0; t < pairs.size(); ++t) {
    if (pflags[t] & 1) ++cfail, fc.offer(static_cast<long long>(t));
    if (pflags[t] & 2) ++dfail, fd.offer(static_cast<long long>(t));
  }
  rep.set("graded_commutativity", static_cast<long long>(pairs.size()), cfail);
  rep.set("degree_additivity", static_cast<long long>(pairs.size()), dfail);
  if (fc.index >= 0) {
    const auto [i, j] = pairs[fc.index];
    rep.examples.push_back({"graded_commutativity",
                            {s.to_string(W[i]), s.to_string(W[j])},
                            (E[i] * E[j]).str(),
                            (Rational(pow_sign(deg[i] * deg[j])) * (E[j] * E[i])).str()});
  }
  if (fd.index >= 0) {
    const auto [i, j] = pairs[fd.index];
    rep.examples.push_back({"degree_additivity",
                            {s.to_string(W[i]), s.to_string(W[j])},
                            (E[i] * E[j]).str(),
                            "degree " + std::to_string(deg[i] + deg[j])});
  }
  long long afail = 0;
  FirstFailure fa;
  for (size_t t = 0; t < triples.size(); ++t)
    if (tflags[t]) ++afail, fa.offer(static_cast<long long>(t));
  rep.set("associativity", static_cast<long long>(triples.size()), afail);
  if (fa.index >= 0) {
    const auto [i, j, k] = triples[fa.index];
    rep.examples.push_back({"associativity",
                            {s.to_string(W[i]), s.to_string(W[j]), s.to_string(W[k])},
                            ((E[i] * E[j]) * E[k]).str(),
                            (E[i] * (E[j] * E[k])).str()});
  }
  return rep;
}

}  // namespace loopbv
