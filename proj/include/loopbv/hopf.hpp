#pragma once
#include <map>
#include <utility>

#include "loopbv/element.hpp"

namespace loopbv {

/// Element of the Koszul-signed tensor-square algebra A (x) A. Products use
/// (a1 (x) a2)(b1 (x) b2) = (-1)^{|a2||b1|} a1 b1 (x) a2 b2.
struct TensorSquareElement {
  SigPtr sig;
  std::map<std::pair<Monomial, Monomial>, Rational> terms;

  TensorSquareElement() = default;
  explicit TensorSquareElement(SigPtr s) : sig(std::move(s)) {}

  bool is_zero() const { return terms.empty(); }
  void add_term(const Monomial& a, const Monomial& b, const Rational& c);
  TensorSquareElement& operator+=(const TensorSquareElement& o);
  friend bool operator==(const TensorSquareElement& x, const TensorSquareElement& y) {
    return x.terms == y.terms;
  }
  std::string str() const;
};

TensorSquareElement tsq_unit(SigPtr sig);
TensorSquareElement tsq_multiply(const TensorSquareElement& a, const TensorSquareElement& b);

/// Diagonal of the loop factor: group monomials are group-like, s^{-1}
/// generators are primitive, extended as an algebra morphism into the
/// Koszul-signed tensor square. Throws DomainError if `a` touches the
/// manifold factor.
TensorSquareElement coproduct(const Element& a);

/// Augmentation: the coefficient sum over group-only monomials.
Rational counit(const Element& a);

/// True iff coproduct(a) == a (x) 1 + 1 (x) a.
bool is_primitive(const Element& a);

}  // namespace loopbv
