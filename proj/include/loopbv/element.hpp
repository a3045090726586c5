#pragma once
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "loopbv/signature.hpp"

namespace loopbv {

/// Finite formal rational combination of canonical monomials. Terms are kept
/// sorted by monomial with no zero coefficients, so equality is structural.
class Element {
 public:
  using Term = std::pair<Monomial, Rational>;

  Element() = default;
  explicit Element(SigPtr sig) : sig_(std::move(sig)) {}

  static Element zero(SigPtr sig) { return Element(std::move(sig)); }
  static Element unit(SigPtr sig, const Rational& c = 1);
  static Element monomial(SigPtr sig, const Monomial& m, const Rational& c = 1);

  const SigPtr& signature() const { return sig_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const std::vector<Term>& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);
  /// Drops the terms but keeps the capacity (for scratch reuse in sweeps).
  void clear() { terms_.clear(); }
  void reset(SigPtr sig) {
    sig_ = std::move(sig);
    terms_.clear();
  }
  void negate();
  void add_scaled(const Element& o, const Rational& c);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rational& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& c, Element a) { return a *= c; }
  friend Element operator*(const Element& a, const Element& b) { return multiply(a, b); }
  Element operator-() const;
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

  /// Common degree of all stored monomials; nullopt when zero or mixed.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const;
  std::map<int, Element> homogeneous_components() const;

  /// Graded-commutative product, bilinear over the term lists.
  friend Element multiply(const Element& a, const Element& b);

  std::string str() const;

 private:
  SigPtr sig_;
  std::vector<Term> terms_;
};

/// Multiplies coeff * g1^e1 * ... * gk^ek into canonical form. Sorting the
/// exterior factors contributes the Koszul sign of the permutation, repeated
/// exterior factors give zero, torsion exponents are reduced mod the order.
Element normalize(const SigPtr& sig, const Rational& coeff,
                  std::span<const std::pair<int, long long>> word);

/// Product of two canonical monomials as an Element (table classes may
/// multiply into sums). Accumulates `coeff * ma * mb` into `out`.
void mono_mul_into(Element& out, const Signature& sig, const Monomial& ma, const Monomial& mb,
                   const Rational& coeff);

/// Accumulates scale * a * b into out without temporaries.
void multiply_add(Element& out, const Element& a, const Element& b, const Rational& scale);

std::string to_string(const Element& e);

}  // namespace loopbv
