#pragma once
#include <vector>

#include "loopbv/bv_model.hpp"
#include "loopbv/report.hpp"

namespace loopbv {

/// Finite basis window. Group-ring directions sit in degree 0, so the degree
/// bound alone never cuts them off; the window additionally caps every free
/// pi1 exponent. Torsion residues and exterior subsets are enumerated in
/// full, polynomial exponents are bounded by the degree budget.
struct WindowSpec {
  int degree_bound = 10;
  int free_exp_cap = 2;
};

/// All basis monomials with |degree| <= degree_bound, sorted by (degree,
/// monomial order). Deterministic.
std::vector<Monomial> enumerate_window(const Signature& sig, const WindowSpec& w);

/// Loop-factor basis monomials with 0 <= degree <= max_degree (no manifold
/// duals, no table classes).
std::vector<Monomial> enumerate_loop_window(const Signature& sig, int max_degree, int free_exp_cap);

struct SweepOptions {
  WindowSpec window;
  bool parallel = true;  // OpenMP kernels when compiled in; serial otherwise
};

/// B(1)=0 and, over the window, B homogeneous of degree +1 and B^2 = 0 on
/// monomials; graded antisymmetry on pairs; the 7-term relation, the Poisson
/// relation and the shifted Jacobi identity on triples. Pairs and triples
/// are kept when the total degree of their product stays inside the window.
CheckReport run_axiom_sweep(const BVModel& model, const SweepOptions& opts);

/// Sub-BV embeddings: B(a (x) [M]) = B_loop(a) (x) [M] on loop monomials and
/// B(1 (x) x) = 0 on manifold monomials.
CheckReport run_subalgebra_checks(const BVModel& model, const SweepOptions& opts);

/// Coassociativity and counit laws on the loop window, plus the algebra-map
/// law Delta(ab) = Delta(a)Delta(b) on seeded sample pairs.
CheckReport run_hopf_checks(const SigPtr& sig, const SweepOptions& opts, unsigned long seed,
                            int sample_pairs = 64);

/// Product axioms of the ambient algebra itself: graded commutativity,
/// associativity, degree additivity on window tuples; normalize idempotence.
CheckReport run_algebra_checks(const SigPtr& sig, const SweepOptions& opts);

}  // namespace loopbv
