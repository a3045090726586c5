#pragma once
#include "loopbv/bv_model.hpp"
#include "loopbv/report.hpp"
#include "loopbv/sweep.hpp"

namespace loopbv {

/// Samelson brackets {x_j, x_k} of the higher generators, as combinations of
/// higher generators, indexed by 1-based generator index. The default is the
/// identically zero table (the rationally abelian Lie catalog); an explicit
/// table with zero_default = false treats missing pairs as an error.
struct SamelsonTable {
  bool zero_default = true;
  std::map<std::pair<int, int>, std::map<int, Rational>> entries;
};

/// Element of the degree +1 Lie algebra s^{-1}pi_{>=2}(G) (+) H(M):
/// coordinates on the s^{-1}x_j basis plus a manifold-only element of the
/// model's signature.
struct SemidirectElement {
  std::map<int, Rational> lie;
  Element module;
};

/// {s^{-1}f, s^{-1}g} = s^{-1}{f,g}; {x,y} = 0;
/// {s^{-1}f, x} = (-1)^{|f|-1} (hur f).x, bilinear.
SemidirectElement semidirect_bracket(const BVModel& lie_model, const SamelsonTable& samelson,
                                     const ActionTable& act, const SemidirectElement& a,
                                     const SemidirectElement& b);

/// (s^{-1}f, x) -> s^{-1}f (x) [M] + 1 (x) x preserves brackets between the
/// semidirect bracket and the model's derived bracket, exhaustively over the
/// higher generators and the window's manifold monomials.
CheckReport check_morphism_into_model(const BVModel& lie_model, const SamelsonTable& samelson,
                                      const SweepOptions& opts);

/// Graded antisymmetry and shifted Jacobi for the semidirect bracket itself,
/// over all basis triples drawn from the generators and window monomials.
CheckReport check_semidirect_axioms(const BVModel& lie_model, const SamelsonTable& samelson,
                                    const SweepOptions& opts);

/// The pi1 side, stated separately from the morphism: {f (x) [M], 1 (x) x} =
/// f (x) (hur f . x) for every generator f of pi1 (torsion acts by zero).
CheckReport check_pi1_grouplike_identity(const BVModel& lie_model, const SweepOptions& opts);

}  // namespace loopbv
