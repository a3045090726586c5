#pragma once
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "loopbv/monomial.hpp"
#include "loopbv/rational.hpp"

namespace loopbv {

enum class GenKind { GroupFree, GroupTorsion, PolyEven, ExtOdd };

struct GeneratorSpec {
  std::string name;
  GenKind kind = GenKind::GroupFree;
  int degree = 0;        // 0 for group kinds, positive even for poly, odd for ext
  int torsion_order = 0; // >= 2, torsion kind only
};

/// Finite graded-commutative algebra given by an explicit basis and
/// multiplication table. Hosts manifold homologies ingested from model files
/// that are not free on generators. Class 0 is the unit (the fundamental
/// class in the shifted grading), all degrees are <= 0.
struct TableFactor {
  std::vector<std::string> names;
  std::vector<int> degrees;
  // product of classes i,j >= 1; a missing key means the product is zero
  std::map<std::pair<uint16_t, uint16_t>, std::vector<std::pair<uint16_t, Rational>>> products;
  int dimension = 0;  // manifold dimension, informational

  int class_count() const { return static_cast<int>(names.size()); }
  int find(std::string_view name) const;
  const std::vector<std::pair<uint16_t, Rational>>& product(uint16_t i, uint16_t j) const;

  /// Grading, unit row, graded commutativity and associativity. Throws
  /// SchemaError with the offending classes named.
  void validate() const;
};

/// The generator list of one algebra Q[pi1] (x) Lambda_poly (x) Lambda_ext,
/// optionally extended by a table factor. Generator ids are indices into the
/// declaration list; each kind gets its own slot section in Monomial.
class Signature {
 public:
  explicit Signature(std::vector<GeneratorSpec> gens,
                     std::shared_ptr<const TableFactor> table = nullptr);

  int generator_count() const { return static_cast<int>(gens_.size()); }
  const GeneratorSpec& gen(int id) const;
  int find(std::string_view name) const;  // -1 if absent

  int free_count() const { return static_cast<int>(free_gens_.size()); }
  int torsion_count() const { return static_cast<int>(torsion_gens_.size()); }
  int poly_count() const { return static_cast<int>(poly_gens_.size()); }
  int ext_count() const { return static_cast<int>(ext_gens_.size()); }
  int scalar_slot_count() const { return free_count() + torsion_count() + poly_count(); }

  // slot -> generator id, in canonical (ascending id) order per kind
  int free_gen(int slot) const { return free_gens_[slot]; }
  int torsion_gen(int slot) const { return torsion_gens_[slot]; }
  int poly_gen(int slot) const { return poly_gens_[slot]; }
  int ext_gen(int slot) const { return ext_gens_[slot]; }
  /// Slot of a generator within its kind's section.
  int slot_of(int id) const { return slot_of_[id]; }

  int torsion_order(int slot) const { return gen(torsion_gens_[slot]).torsion_order; }
  int poly_degree(int slot) const { return gen(poly_gens_[slot]).degree; }
  int ext_degree(int slot) const { return gen(ext_gens_[slot]).degree; }

  const TableFactor* table() const { return table_.get(); }
  const std::shared_ptr<const TableFactor>& table_ptr() const { return table_; }
  int class_degree(uint16_t cls) const { return cls == 0 ? 0 : table_->degrees[cls]; }

  Monomial unit_monomial() const { return Monomial{}; }
  int degree(const Monomial& m) const;
  bool fits(const Monomial& m) const;  // slot ranges match, unused slots zero

  /// Negative-degree exterior generators and table classes carry the
  /// manifold factor; everything else is the loop factor.
  bool ext_slot_is_manifold(int slot) const { return ext_degree(slot) < 0; }
  bool is_loop_monomial(const Monomial& m) const;
  /// Ext mask restricted to the loop (resp. manifold) side.
  uint32_t loop_ext_mask() const { return loop_ext_mask_; }
  uint32_t manifold_ext_mask() const { return ~loop_ext_mask_; }

  std::string to_string(const Monomial& m) const;

 private:
  std::vector<GeneratorSpec> gens_;
  std::vector<int> free_gens_, torsion_gens_, poly_gens_, ext_gens_;
  std::vector<int> slot_of_;
  std::map<std::string, int, std::less<>> by_name_;
  std::shared_ptr<const TableFactor> table_;
  uint32_t loop_ext_mask_ = 0;
};

using SigPtr = std::shared_ptr<const Signature>;

inline std::string to_string(const Signature& sig, const Monomial& m) { return sig.to_string(m); }

}  // namespace loopbv
