#pragma once
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "loopbv/element.hpp"

namespace loopbv {

/// Rational homotopy presentation of a path-connected compact Lie group:
/// rank of the free part of pi1, invariant factors of its torsion, and the
/// degrees of a basis of pi_{>=3} (x) Q (all odd, >= 3).
struct LieGroupData {
  int free_rank = 0;
  std::vector<int> torsion;
  std::vector<int> odd_degrees;

  int rank() const { return free_rank + static_cast<int>(odd_degrees.size()); }
  void validate() const;
};

/// Degree-raising linear maps on the manifold factor, one per acting
/// homology class. A missing class is a model error; a missing basis
/// monomial inside a class's map means the class acts by zero there.
struct ActionTable {
  struct Entry {
    int degree = 0;
    std::map<Monomial, Element> map;
  };
  std::map<std::string, Entry> classes;

  const Entry& require(const std::string& name) const;
  Element apply(const std::string& name, const SigPtr& sig, const Monomial& manifold_mono) const;
};

/// Homology-suspension values on loop-factor basis monomials, as finite
/// combinations of acting classes. Lookups outside the table are an error:
/// sigma_* is table data and is never extrapolated.
struct SigmaTable {
  using Combo = std::vector<std::pair<std::string, Rational>>;
  std::map<Monomial, Combo> values;

  const Combo& require(const Signature& sig, const Monomial& loop_mono) const;
};

/// B on the loop factor itself. Defaults to zero everywhere (the Lie case,
/// where H_*(Omega G) is concentrated in even degree).
struct BLoopTable {
  std::map<Monomial, Element> values;
  Element apply(const SigPtr& sig, const Monomial& loop_mono) const;
};

struct LieGroupRule {
  LieGroupData data;
  // 1-based exterior position whose term sign is negated; 0 = faithful rule.
  // Exists only so the tests can prove the axiom sweeps notice a wrong sign.
  int flipped_position = 0;
};

struct RationalActionRule {
  std::vector<std::string> hur_free;      // acting class per free pi1 generator
  std::vector<std::string> hur_poly;      // per even s^{-1} generator (poly slot order)
  std::vector<std::string> hur_loop_ext;  // per odd s^{-1} generator (ext slot order)
  ActionTable action;
  BLoopTable b_loop;
};

struct SphereActionRule {
  int sphere_dim = 1;  // 1 or 3
  std::string action_class;
  ActionTable action;
};

struct CoproductRule {
  SigmaTable sigma;
  ActionTable action;
  BLoopTable b_loop;
};

struct BVModel;

struct TensorRule {
  std::shared_ptr<const BVModel> left;
  std::shared_ptr<const BVModel> right;
  bool table_on_left = false;  // side owning the table factor, if any
};

using BRule =
    std::variant<LieGroupRule, RationalActionRule, SphereActionRule, CoproductRule, TensorRule>;

/// A graded algebra plus one of the closed-form B rules. B is the primitive
/// datum; the Gerstenhaber bracket is always derived from it.
struct BVModel {
  std::string name;
  SigPtr sig;
  BRule rule;
};

/// Applies the model's B term-by-term; linear, raises degree by one, kills 1.
Element apply_B(const BVModel& model, const Element& a);

/// Same, writing into a reusable destination (cleared first).
void apply_B_into(const BVModel& model, const Element& a, Element& out);

/// {a,b} = (-1)^{|a|} ( B(ab) - (Ba)b - (-1)^{|a|} a(Bb) ), extended
/// bilinearly over homogeneous components.
Element bracket(const BVModel& model, const Element& a, const Element& b);

struct IdentitySides {
  Element lhs, rhs;
  bool ok() const { return lhs == rhs; }
};

// Homogeneous inputs; mixed elements are rejected with DomainError.
IdentitySides bv7_sides(const BVModel& m, const Element& a, const Element& b, const Element& c);
IdentitySides poisson_sides(const BVModel& m, const Element& a, const Element& b, const Element& c);
IdentitySides poisson_rewritten_sides(const BVModel& m, const Element& a, const Element& b,
                                      const Element& c);
IdentitySides antisym_sides(const BVModel& m, const Element& a, const Element& b);
IdentitySides jacobi_sides(const BVModel& m, const Element& a, const Element& b, const Element& c);

bool check_bv7(const BVModel& m, const Element& a, const Element& b, const Element& c);
bool check_poisson(const BVModel& m, const Element& a, const Element& b, const Element& c);
bool check_jacobi_antisym(const BVModel& m, const Element& a, const Element& b, const Element& c);

/// Loop/manifold split of a monomial of a model signature (loop generators
/// always occupy the lower ext slots, so the split is sign-free).
std::pair<Monomial, Monomial> split_loop_manifold(const Signature& sig, const Monomial& m);

/// The model's B restricted to the loop factor (the B_{Omega G} datum): zero
/// for the Lie and sphere rules, the supplied table otherwise, combined
/// factor-wise for tensor models.
Element loop_factor_B(const BVModel& model, const Monomial& loop_mono);

}  // namespace loopbv
