#pragma once
#include <span>
#include <tuple>

#include "loopbv/bv_model.hpp"
#include "loopbv/sweep.hpp"

namespace loopbv {

/// Generator naming offsets. Tensor factors use these so their generators
/// line up, name for name, with the flat Lie-group model they decompose.
struct LieNaming {
  int x_base = 1;   // free generators x1, x2, ...
  int y_base = 1;   // torsion generators y1, y2, ...
  int s_base = 0;   // s^{-1} generators sx{s_base}...; 0 = free_rank + 1
  int d_base = 1;   // duals d{d_base}...
};

SigPtr make_lie_signature(const LieGroupData& data, const LieNaming& naming = {});

/// The rational model of H_*(LG): Q[pi1] (x) Lambda(sx_j) (x) Lambda(d_i)
/// with B given by the closed two-sum formula (signs (-1)^{i-1}, exponent
/// decrement on the polynomial side). `flipped_position` negates the sign of
/// one exterior position and exists for the mutation-sensitivity tests.
BVModel build_lie_group_model(const LieGroupData& data, int flipped_position = 0,
                              const LieNaming& naming = {});

/// Action of the spherical classes hur x_i on the dual exterior basis:
/// x_{j_i} . d_{j_1}..d_{j_p} = (-1)^{i-1} d_{j_1}..^d_{j_i}..d_{j_p}, zero
/// when the index is absent.
ActionTable lie_action_table(const SigPtr& sig, const LieGroupData& data);

/// Homology-suspension table for the Lie catalog: group monomials map to
/// their Hurewicz image, a group translate of one s^{-1}x_j maps to hur x_j,
/// everything with two or more positive factors maps to zero. Entries cover
/// every loop monomial with degree <= max_loop_degree (explicit zeros
/// included; the coproduct rule never extrapolates).
SigmaTable lie_sigma_table(const SigPtr& sig, const LieGroupData& data, int max_loop_degree,
                           int free_exp_cap);

/// Same algebra as `lie`, with B evaluated through the coproduct formula
/// B(a (x) x) = B_loop(a) (x) x + sum (-1)^{|a(1)|} a(1) (x) sigma(a(2)).x
/// instead of the closed two-sum rule. Shares the Lie model's signature so
/// outputs are directly comparable.
BVModel build_coproduct_model_for_lie(const BVModel& lie_model, const WindowSpec& window);

/// Manifold homology presentation as ingested from model files: basis
/// classes with non-positive degrees, the unit first, sparse products.
struct ManifoldAlgebra {
  std::vector<std::string> names;
  std::vector<int> degrees;
  int dimension = 0;
  std::vector<std::tuple<std::string, std::string, std::vector<std::pair<std::string, Rational>>>>
      products;

  std::shared_ptr<const TableFactor> to_table() const;
};

/// Action data before it is bound to a signature: per acting class, its
/// degree and the images of the manifold basis classes it does not kill.
struct RawAction {
  struct Rule {
    std::string on;
    std::vector<std::pair<std::string, Rational>> value;
  };
  std::map<std::string, std::pair<int, std::vector<Rule>>> classes;
};

ActionTable bind_action(const SigPtr& sig, const RawAction& raw);

enum class SphereKind { S1, S3 };

/// H_*(Omega S^1) (x) H(M) = k[x] (x) H(M) with B(x^i (x) m) = i x^i (x) [S1].m,
/// or H_*(Omega S^3) (x) H(M) = k[u] (x) H(M) with B(u^i (x) m) = i u^{i-1} (x) [S3].m.
BVModel build_sphere_model(SphereKind kind, const ManifoldAlgebra& manifold, const RawAction& action);

struct MonoidPresentation {
  int free_rank = 0;
  std::vector<int> torsion;
  std::vector<std::pair<std::string, int>> higher;  // (name, degree >= 2, any parity)
  void validate() const;
};

struct RawBLoop {
  // monomial expression -> element terms (coefficient, monomial expression)
  std::vector<std::pair<std::string, std::vector<std::pair<Rational, std::string>>>> entries;
};

/// The general rational model: B(f s1..sr (x) x) = B_loop(..) (x) x plus the
/// sign-graded Hurewicz correction terms, exactly as the closed formula
/// prints them. `hur` names the acting class of each pi1/higher generator.
BVModel build_rational_action_model(const MonoidPresentation& monoid,
                                    const ManifoldAlgebra& manifold, const RawAction& action,
                                    const std::map<std::string, std::string>& hur,
                                    const RawBLoop& b_loop);

/// Tensor product of models: B(x (x) y) = Bx (x) y + (-1)^{|x|} x (x) By on
/// the concatenated signature. Generator names must not collide and at most
/// one side may carry a table factor.
BVModel tensor_model(const BVModel& a, const BVModel& b);

struct DecompositionReport {
  std::string model_name;
  long long checked = 0;
  long long mismatched = 0;
  std::string first_input, first_lhs, first_rhs;
  bool ok() const { return mismatched == 0; }
};

/// Builds the sphere-factor tensor decomposition of the Lie model (one
/// H(LS^1) per free pi1 generator, the torsion group ring, one H(LS^{2k+1})
/// per higher generator), transports its B through the monomial bijection
/// and compares with the direct Lie rule on every window monomial.
DecompositionReport decomposition_check(const LieGroupData& data, const WindowSpec& window);

/// Closed-form cap product sign: d_{j_1}..d_{j_p} cap [G] = sign * (product
/// of the complementary x_i). Subset indices are 1-based and ascending.
int cap_product_sign(std::span<const int> subset);

/// Iterated action-table route against the closed-form sign, over every
/// subset of {1..r}: applying hur x_{j_p}, .., hur x_{j_1} to the full dual
/// word must land on the complementary dual word with sign (-1)^{sum(j_k-1)}.
CheckReport run_cap_sign_checks(const BVModel& lie_model);

/// The coproduct formula with the shipped sigma tables equals the direct
/// Lie rule on every window monomial.
CheckReport run_formula_agreement(const BVModel& lie_model, const SweepOptions& opts);

}  // namespace loopbv
