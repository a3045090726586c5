#include "loopbv/hopf.hpp"

#include <bit>

#include "loopbv/errors.hpp"

namespace loopbv {

void TensorSquareElement::add_term(const Monomial& a, const Monomial& b, const Rational& c) {
  if (c == 0) return;
  auto key = std::make_pair(a, b);
  auto [it, inserted] = terms.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

TensorSquareElement& TensorSquareElement::operator+=(const TensorSquareElement& o) {
  for (const auto& [key, c] : o.terms) add_term(key.first, key.second, c);
  return *this;
}

std::string TensorSquareElement::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += to_string(c) + "*";
    out += "(" + sig->to_string(key.first) + " (x) " + sig->to_string(key.second) + ")";
  }
  return out;
}

TensorSquareElement tsq_unit(SigPtr sig) {
  TensorSquareElement out(sig);
  out.add_term(sig->unit_monomial(), sig->unit_monomial(), 1);
  return out;
}

TensorSquareElement tsq_multiply(const TensorSquareElement& a, const TensorSquareElement& b) {
  if (a.sig.get() != b.sig.get()) throw SignatureError("tensor squares over different signatures");
  const Signature& sig = *a.sig;
  TensorSquareElement out(a.sig);
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      Rational c = ca * cb;
      if ((sig.degree(ka.second) & 1) && (sig.degree(kb.first) & 1)) c = -c;
      Element left(a.sig), right(a.sig);
      mono_mul_into(left, sig, ka.first, kb.first, 1);
      mono_mul_into(right, sig, ka.second, kb.second, 1);
      for (const auto& [ml, cl] : left.terms())
        for (const auto& [mr, cr] : right.terms()) out.add_term(ml, mr, c * cl * cr);
    }
  return out;
}

namespace {

TensorSquareElement coproduct_monomial(const SigPtr& sig, const Monomial& m) {
  const Signature& s = *sig;
  if (!s.is_loop_monomial(m))
    throw DomainError("coproduct applies to the loop factor only; '" + s.to_string(m) +
                      "' has a manifold part");
  // group-like block: every group-ring basis monomial g has diagonal g (x) g
  Monomial g = s.unit_monomial();
  for (int i = 0; i < s.free_count() + s.torsion_count(); ++i) g.e[i] = m.e[i];
  TensorSquareElement acc(sig);
  acc.add_term(g, g, 1);
  // primitive polynomial generators: diagonal of u^n is the binomial sum
  const int off = s.free_count() + s.torsion_count();
  for (int slot = 0; slot < s.poly_count(); ++slot) {
    const int32_t n = m.e[off + slot];
    if (n == 0) continue;
    TensorSquareElement factor(sig);
    for (int32_t k = 0; k <= n; ++k) {
      Monomial u = s.unit_monomial(), v = s.unit_monomial();
      u.e[off + slot] = k;
      v.e[off + slot] = n - k;
      factor.add_term(u, v, binomial(n, k));
    }
    acc = tsq_multiply(acc, factor);
  }
  // primitive odd loop generators
  for (uint32_t bits = m.ext; bits; bits &= bits - 1) {
    const int slot = std::countr_zero(bits);
    TensorSquareElement factor(sig);
    Monomial v = s.unit_monomial();
    v.ext = 1u << slot;
    factor.add_term(v, s.unit_monomial(), 1);
    factor.add_term(s.unit_monomial(), v, 1);
    acc = tsq_multiply(acc, factor);
  }
  return acc;
}

}  // namespace

TensorSquareElement coproduct(const Element& a) {
  TensorSquareElement out(a.signature());
  for (const auto& [m, c] : a.terms()) {
    TensorSquareElement d = coproduct_monomial(a.signature(), m);
    for (const auto& [key, q] : d.terms) out.add_term(key.first, key.second, c * q);
  }
  return out;
}

Rational counit(const Element& a) {
  const Signature& s = *a.signature();
  Rational out(0);
  for (const auto& [m, c] : a.terms()) {
    if (!s.is_loop_monomial(m))
      throw DomainError("counit applies to the loop factor only");
    bool group_only = m.ext == 0;
    const int off = s.free_count() + s.torsion_count();
    for (int slot = 0; group_only && slot < s.poly_count(); ++slot)
      if (m.e[off + slot] != 0) group_only = false;
    if (group_only) out += c;
  }
  return out;
}

bool is_primitive(const Element& a) {
  TensorSquareElement expected(a.signature());
  const Monomial one = a.signature()->unit_monomial();
  for (const auto& [m, c] : a.terms()) {
    expected.add_term(m, one, c);
    expected.add_term(one, m, c);
  }
  return coproduct(a) == expected;
}

}  // namespace loopbv
