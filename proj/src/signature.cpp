#include "loopbv/signature.hpp"

#include <algorithm>
#include <bit>

#include "loopbv/errors.hpp"

namespace loopbv {

namespace {
const std::vector<std::pair<uint16_t, Rational>> kEmptyProduct;
}

int TableFactor::find(std::string_view name) const {
  for (int i = 0; i < class_count(); ++i)
    if (names[i] == name) return i;
  return -1;
}

const std::vector<std::pair<uint16_t, Rational>>& TableFactor::product(uint16_t i, uint16_t j) const {
  auto it = products.find({i, j});
  return it == products.end() ? kEmptyProduct : it->second;
}

void TableFactor::validate() const {
  if (names.empty() || names.size() != degrees.size())
    throw SchemaError("table factor needs matching class/degree lists");
  if (names.size() > 4096) throw SchemaError("table factor too large");
  if (degrees[0] != 0) throw SchemaError("unit class '" + names[0] + "' must sit in degree 0");
  for (size_t i = 0; i < names.size(); ++i) {
    if (degrees[i] > 0)
      throw SchemaError("manifold class '" + names[i] + "' has positive degree");
    for (size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw SchemaError("duplicate manifold class '" + names[i] + "'");
  }
  const int n = class_count();
  for (const auto& [key, combo] : products) {
    auto [i, j] = key;
    if (i == 0 || j == 0 || i >= n || j >= n)
      throw SchemaError("product table entry outside the class list");
    for (const auto& [k, c] : combo) {
      if (k >= n) throw SchemaError("product table value outside the class list");
      if (c == 0) throw SchemaError("zero coefficient stored in product table");
      if (degrees[k] != degrees[i] + degrees[j])
        throw SchemaError("product of '" + names[i] + "' and '" + names[j] + "' is not graded");
    }
  }
  auto combo_of = [&](uint16_t i, uint16_t j) {
    std::map<uint16_t, Rational> m;
    for (const auto& [k, c] : product(i, j)) m[k] += c;
    return m;
  };
  // graded commutativity
  for (uint16_t i = 1; i < n; ++i)
    for (uint16_t j = 1; j < n; ++j) {
      auto lhs = combo_of(i, j);
      auto rhs = combo_of(j, i);
      const int sign = (degrees[i] % 2 != 0 && degrees[j] % 2 != 0) ? -1 : 1;
      for (auto& [k, c] : rhs) c *= sign;
      if (lhs != rhs)
        throw SchemaError("product table not graded-commutative on '" + names[i] + "','" + names[j] + "'");
    }
  // associativity
  auto mul_combo = [&](const std::map<uint16_t, Rational>& a, uint16_t j) {
    std::map<uint16_t, Rational> out;
    for (const auto& [i, c] : a) {
      if (i == 0) {
        out[j] += c;
        continue;
      }
      if (j == 0) {
        out[i] += c;
        continue;
      }
      for (const auto& [k, d] : product(i, j)) out[k] += c * d;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  };
  for (uint16_t i = 1; i < n; ++i)
    for (uint16_t j = 1; j < n; ++j)
      for (uint16_t k = 1; k < n; ++k) {
        auto lhs = mul_combo(combo_of(i, j), k);
        // i * (j*k)
        std::map<uint16_t, Rational> acc;
        for (const auto& [m, c] : combo_of(j, k)) {
          if (m == 0) {
            acc[i] += c;
          } else {
            for (const auto& [t, d] : product(i, m)) acc[t] += c * d;
          }
        }
        std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
        if (lhs != acc)
          throw SchemaError("product table not associative on '" + names[i] + "','" + names[j] +
                            "','" + names[k] + "'");
      }
}

Signature::Signature(std::vector<GeneratorSpec> gens, std::shared_ptr<const TableFactor> table)
    : gens_(std::move(gens)), table_(std::move(table)) {
  slot_of_.resize(gens_.size(), -1);
  for (int id = 0; id < generator_count(); ++id) {
    const GeneratorSpec& g = gens_[id];
    if (g.name.empty()) throw SchemaError("generator " + std::to_string(id) + " has no name");
    if (!by_name_.emplace(g.name, id).second)
      throw SchemaError("duplicate generator name '" + g.name + "'");
    switch (g.kind) {
      case GenKind::GroupFree:
        if (g.degree != 0) throw SchemaError("group generator '" + g.name + "' must have degree 0");
        slot_of_[id] = static_cast<int>(free_gens_.size());
        free_gens_.push_back(id);
        break;
      case GenKind::GroupTorsion:
        if (g.degree != 0) throw SchemaError("group generator '" + g.name + "' must have degree 0");
        if (g.torsion_order < 2)
          throw SchemaError("torsion order of '" + g.name + "' must be at least 2");
        slot_of_[id] = static_cast<int>(torsion_gens_.size());
        torsion_gens_.push_back(id);
        break;
      case GenKind::PolyEven:
        if (g.degree <= 0 || g.degree % 2 != 0)
          throw SchemaError("polynomial generator '" + g.name + "' needs positive even degree");
        slot_of_[id] = static_cast<int>(poly_gens_.size());
        poly_gens_.push_back(id);
        break;
      case GenKind::ExtOdd:
        if (g.degree % 2 == 0)
          throw SchemaError("exterior generator '" + g.name + "' needs odd degree");
        slot_of_[id] = static_cast<int>(ext_gens_.size());
        ext_gens_.push_back(id);
        break;
    }
  }
  if (ext_count() > 32) throw SchemaError("at most 32 exterior generators supported");
  if (scalar_slot_count() > Monomial::kMaxScalarSlots)
    throw SchemaError("at most " + std::to_string(Monomial::kMaxScalarSlots) +
                      " group/polynomial generators supported");
  for (int s = 0; s < ext_count(); ++s)
    if (!ext_slot_is_manifold(s)) loop_ext_mask_ |= (1u << s);
  if (table_) {
    table_->validate();
    for (const auto& name : table_->names)
      if (by_name_.count(name))
        throw SchemaError("table class '" + name + "' collides with a generator name");
  }
}

const GeneratorSpec& Signature::gen(int id) const {
  if (id < 0 || id >= generator_count())
    throw SignatureError("unknown generator id " + std::to_string(id));
  return gens_[id];
}

int Signature::find(std::string_view name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? -1 : it->second;
}

bool Signature::fits(const Monomial& m) const {
  if (ext_count() < 32 && (m.ext >> ext_count()) != 0) return false;
  const int classes = table_ ? table_->class_count() : 1;
  if (static_cast<int>(m.cls) >= classes) return false;
  for (int s = 0; s < torsion_count(); ++s) {
    int32_t v = m.e[free_count() + s];
    if (v < 0 || v >= torsion_order(s)) return false;
  }
  for (int s = 0; s < poly_count(); ++s)
    if (m.e[free_count() + torsion_count() + s] < 0) return false;
  for (int s = scalar_slot_count(); s < Monomial::kMaxScalarSlots; ++s)
    if (m.e[s] != 0) return false;
  return true;
}

int Signature::degree(const Monomial& m) const {
  int d = 0;
  const int off = free_count() + torsion_count();
  for (int s = 0; s < poly_count(); ++s) d += m.e[off + s] * poly_degree(s);
  for (uint32_t bits = m.ext; bits; bits &= bits - 1)
    d += ext_degree(std::countr_zero(bits));
  d += class_degree(m.cls);
  return d;
}

bool Signature::is_loop_monomial(const Monomial& m) const {
  return m.cls == 0 && (m.ext & manifold_ext_mask()) == 0;
}

std::string Signature::to_string(const Monomial& m) const {
  std::string out;
  auto app = [&](const std::string& f) {
    if (!out.empty()) out += "*";
    out += f;
  };
  for (int s = 0; s < free_count(); ++s)
    if (int32_t v = m.e[s]; v != 0)
      app(v == 1 ? gen(free_gen(s)).name : gen(free_gen(s)).name + "^" + std::to_string(v));
  for (int s = 0; s < torsion_count(); ++s)
    if (int32_t v = m.e[free_count() + s]; v != 0)
      app(v == 1 ? gen(torsion_gen(s)).name : gen(torsion_gen(s)).name + "^" + std::to_string(v));
  const int off = free_count() + torsion_count();
  for (int s = 0; s < poly_count(); ++s)
    if (int32_t v = m.e[off + s]; v != 0)
      app(v == 1 ? gen(poly_gen(s)).name : gen(poly_gen(s)).name + "^" + std::to_string(v));
  for (uint32_t bits = m.ext; bits; bits &= bits - 1)
    app(gen(ext_gen(std::countr_zero(bits))).name);
  if (m.cls != 0) app(table_->names[m.cls]);
  return out.empty() ? "1" : out;
}

}  // namespace loopbv
