#include "loopbv/element.hpp"

#include <algorithm>
#include <bit>

#include "loopbv/errors.hpp"

namespace loopbv {

namespace {

void require_same_signature(const SigPtr& a, const SigPtr& b) {
  if (!a || !b || a.get() != b.get())
    throw SignatureError("elements belong to different signatures");
}

/// Koszul sign of merging two disjoint ascending exterior words: every pair
/// (a in A, b in B) with a > b is one transposition of odd generators.
int ext_merge_sign(uint32_t a, uint32_t b) {
  int inversions = 0;
  for (uint32_t bits = b; bits; bits &= bits - 1) {
    const int pos = std::countr_zero(bits);
    inversions += std::popcount(a >> (pos + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

}  // namespace

Element Element::unit(SigPtr sig, const Rational& c) {
  Element out(std::move(sig));
  if (!c.is_zero()) out.terms_.emplace_back(out.sig_->unit_monomial(), c);
  return out;
}

Element Element::monomial(SigPtr sig, const Monomial& m, const Rational& c) {
  if (!sig->fits(m)) throw SignatureError("monomial does not fit the signature");
  Element out(std::move(sig));
  if (!c.is_zero()) out.terms_.emplace_back(m, c);
  return out;
}

Rational Element::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.first < key; });
  return (it != terms_.end() && it->first == m) ? it->second : Rational(0);
}

void Element::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.first < key; });
  if (it != terms_.end() && it->first == m) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.emplace(it, m, c);
  }
}

Element& Element::operator+=(const Element& o) {
  require_same_signature(sig_, o.sig_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same_signature(sig_, o.sig_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Element Element::operator-() const {
  Element out(sig_);
  out.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.terms_.emplace_back(m, -c);
  return out;
}

void Element::negate() {
  for (auto& [m, c] : terms_) c = -c;
}

void Element::add_scaled(const Element& o, const Rational& c) {
  require_same_signature(sig_, o.sig_);
  if (c.is_zero()) return;
  for (const auto& [m, v] : o.terms_) add_term(m, v * c);
}

std::optional<int> Element::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  std::optional<int> deg;
  for (const auto& [m, c] : terms_) {
    int d = sig_->degree(m);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

bool Element::is_homogeneous() const { return terms_.empty() || homogeneous_degree().has_value(); }

std::map<int, Element> Element::homogeneous_components() const {
  std::map<int, Element> out;
  for (const auto& [m, c] : terms_) {
    auto it = out.try_emplace(sig_->degree(m), Element(sig_)).first;
    it->second.add_term(m, c);
  }
  return out;
}

void mono_mul_into(Element& out, const Signature& sig, const Monomial& ma, const Monomial& mb,
                   const Rational& coeff) {
  if (coeff.is_zero()) return;
  if (ma.ext & mb.ext) return;  // exterior square
  int sign = ext_merge_sign(ma.ext, mb.ext);
  // ma's table class crosses mb's exterior word; all ext generators are odd
  if (ma.cls != 0 && (sig.class_degree(ma.cls) & 1) && (std::popcount(mb.ext) & 1)) sign = -sign;

  Monomial m;
  const int nf = sig.free_count(), nt = sig.torsion_count();
  for (int s = 0; s < Monomial::kMaxScalarSlots; ++s) m.e[s] = ma.e[s] + mb.e[s];
  for (int s = 0; s < nt; ++s) m.e[nf + s] %= sig.torsion_order(s);
  m.ext = ma.ext | mb.ext;

  const Rational c = (sign < 0) ? -coeff : coeff;
  if (ma.cls == 0 || mb.cls == 0) {
    m.cls = ma.cls ? ma.cls : mb.cls;
    out.add_term(m, c);
    return;
  }
  for (const auto& [k, q] : sig.table()->product(ma.cls, mb.cls)) {
    m.cls = k;
    out.add_term(m, c * q);
  }
}

Element multiply(const Element& a, const Element& b) {
  require_same_signature(a.signature(), b.signature());
  Element out(a.signature());
  const Signature& sig = *a.signature();
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) mono_mul_into(out, sig, ma, mb, ca * cb);
  return out;
}

void multiply_add(Element& out, const Element& a, const Element& b, const Rational& scale) {
  require_same_signature(a.signature(), b.signature());
  require_same_signature(out.signature(), a.signature());
  if (scale.is_zero()) return;
  const Signature& sig = *a.signature();
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) mono_mul_into(out, sig, ma, mb, ca * cb * scale);
}

Element normalize(const SigPtr& sig, const Rational& coeff,
                  std::span<const std::pair<int, long long>> word) {
  Element acc = Element::unit(sig, coeff);
  for (const auto& [id, exp] : word) {
    const GeneratorSpec& g = sig->gen(id);  // throws SignatureError on bad id
    if (acc.is_zero()) return acc;
    Monomial f = sig->unit_monomial();
    switch (g.kind) {
      case GenKind::GroupFree:
        f.e[sig->slot_of(id)] = static_cast<int32_t>(exp);
        break;
      case GenKind::GroupTorsion: {
        const int order = g.torsion_order;
        f.e[sig->free_count() + sig->slot_of(id)] =
            static_cast<int32_t>(((exp % order) + order) % order);
        break;
      }
      case GenKind::PolyEven:
        if (exp < 0)
          throw DomainError("negative exponent on polynomial generator '" + g.name + "'");
        f.e[sig->free_count() + sig->torsion_count() + sig->slot_of(id)] =
            static_cast<int32_t>(exp);
        break;
      case GenKind::ExtOdd:
        if (exp < 0)
          throw DomainError("negative exponent on exterior generator '" + g.name + "'");
        if (exp >= 2) return Element::zero(sig);
        if (exp == 1) f.ext = 1u << sig->slot_of(id);
        break;
    }
    Element next(sig);
    for (const auto& [m, c] : acc.terms()) mono_mul_into(next, *sig, m, f, c);
    acc = std::move(next);
  }
  return acc;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  const Rational one(1);
  for (const auto& [m, c] : terms_) {
    const bool neg = c.sign() < 0;
    Rational a = neg ? -c : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    const std::string mono = sig_->to_string(m);
    if (a == one && mono != "1")
      out += mono;
    else if (mono == "1")
      out += a.str();
    else
      out += a.str() + "*" + mono;
    first = false;
  }
  return out;
}

std::string to_string(const Element& e) { return e.str(); }

}  // namespace loopbv
