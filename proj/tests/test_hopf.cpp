#include <doctest.h>

#include "loopbv/errors.hpp"
#include "loopbv/hopf.hpp"
#include "loopbv/models.hpp"
#include "loopbv/sweep.hpp"

using namespace loopbv;

namespace {

// U(2)-shaped signature: x1 group, sx2 polynomial, d1/d2 manifold duals
SigPtr u2sig() { return make_lie_signature(LieGroupData{1, {}, {3}}); }

SigPtr su3sig() { return make_lie_signature(LieGroupData{0, {}, {3, 5}}); }

Element gen_pow(const SigPtr& sig, const char* name, long long e) {
  const std::pair<int, long long> w[] = {{sig->find(name), e}};
  return normalize(sig, 1, w);
}

Monomial only_monomial(const Element& e) {
  REQUIRE(e.term_count() == 1);
  return e.terms().begin()->first;
}

}  // namespace

TEST_SUITE("hopf") {
  TEST_CASE("group monomials are group-like") {
    auto sig = u2sig();
    Element x3 = gen_pow(sig, "x1", 3);
    TensorSquareElement d = coproduct(x3);
    TensorSquareElement expected(sig);
    expected.add_term(only_monomial(x3), only_monomial(x3), 1);
    CHECK(d == expected);
  }

  TEST_CASE("s^{-1} generators are primitive") {
    auto sig = u2sig();
    Element s = gen_pow(sig, "sx2", 1);
    TensorSquareElement d = coproduct(s);
    TensorSquareElement expected(sig);
    expected.add_term(only_monomial(s), sig->unit_monomial(), 1);
    expected.add_term(sig->unit_monomial(), only_monomial(s), 1);
    CHECK(d == expected);
  }

  TEST_CASE("coproduct of a product of two primitives") {
    auto sig = su3sig();
    Element sj = gen_pow(sig, "sx1", 1);
    Element sk = gen_pow(sig, "sx2", 1);
    TensorSquareElement d = coproduct(sj * sk);
    // all four terms appear with sign +1: both generators have even degree
    TensorSquareElement expected(sig);
    const Monomial one = sig->unit_monomial();
    expected.add_term(only_monomial(sj * sk), one, 1);
    expected.add_term(only_monomial(sj), only_monomial(sk), 1);
    expected.add_term(only_monomial(sk), only_monomial(sj), 1);
    expected.add_term(one, only_monomial(sj * sk), 1);
    CHECK(d == expected);
  }

  TEST_CASE("koszul sign in the tensor square with odd loop generators") {
    // two odd positive s^{-1} generators, as for a monoid with pi_2 terms
    auto sig = std::make_shared<Signature>(std::vector<GeneratorSpec>{
        GeneratorSpec{"e1", GenKind::ExtOdd, 1, 0},
        GeneratorSpec{"e2", GenKind::ExtOdd, 1, 0},
    });
    Element e1 = gen_pow(sig, "e1", 1), e2 = gen_pow(sig, "e2", 1);
    TensorSquareElement d = coproduct(e1 * e2);
    // (e1 (x) 1 + 1 (x) e1)(e2 (x) 1 + 1 (x) e2): the middle term
    // (1 (x) e1)(e2 (x) 1) picks up (-1)^{|e1||e2|} = -1
    TensorSquareElement expected(sig);
    const Monomial one = sig->unit_monomial();
    expected.add_term(only_monomial(e1 * e2), one, 1);
    expected.add_term(only_monomial(e1), only_monomial(e2), 1);
    expected.add_term(only_monomial(e2), only_monomial(e1), -1);
    expected.add_term(one, only_monomial(e1 * e2), 1);
    CHECK(d == expected);
  }

  TEST_CASE("binomial diagonal of polynomial powers") {
    auto sig = u2sig();
    TensorSquareElement d = coproduct(gen_pow(sig, "sx2", 3));
    TensorSquareElement expected(sig);
    for (int k = 0; k <= 3; ++k) {
      Monomial a = only_monomial(gen_pow(sig, "sx2", k));
      Monomial b = only_monomial(gen_pow(sig, "sx2", 3 - k));
      expected.add_term(a, b, binomial(3, k));
    }
    CHECK(d == expected);
  }

  TEST_CASE("counit") {
    auto sig = u2sig();
    CHECK(counit(gen_pow(sig, "x1", 7)) == 1);
    CHECK(counit(gen_pow(sig, "sx2", 1)) == 0);
    Element e = Element::unit(sig, 3) + Rational(2) * gen_pow(sig, "sx2", 1);
    CHECK(counit(e) == 3);
  }

  TEST_CASE("primitivity") {
    auto sig = u2sig();
    CHECK(is_primitive(gen_pow(sig, "sx2", 1)));
    CHECK_FALSE(is_primitive(gen_pow(sig, "x1", 1)));  // group-like, not primitive
    CHECK_FALSE(is_primitive(gen_pow(sig, "sx2", 2)));
  }

  TEST_CASE("manifold part is rejected") {
    auto sig = u2sig();
    Element d1 = gen_pow(sig, "d1", 1);
    CHECK_THROWS_AS(coproduct(d1), DomainError);
    CHECK_THROWS_AS(counit(d1), DomainError);
  }

  TEST_CASE("coassociativity, counit laws and the algebra-map law") {
    for (const SigPtr& sig : {u2sig(), su3sig()}) {
      SweepOptions opts;
      opts.window = {8, 2};
      opts.parallel = false;
      CheckReport rep = run_hopf_checks(sig, opts, 12345, 48);
      INFO(render_text(std::span(&rep, 1)));
      CHECK(rep.passed());
      CHECK(rep.counter("coassociativity").checked > 0);
      CHECK(rep.counter("algebra_morphism").checked == 48);
    }
  }

  TEST_CASE("grouplike times primitive mixes into the expected diagonal") {
    auto sig = u2sig();
    Element g = gen_pow(sig, "x1", 2);
    Element s = gen_pow(sig, "sx2", 1);
    TensorSquareElement d = coproduct(g * s);
    TensorSquareElement expected(sig);
    Monomial gm = only_monomial(g), gs = only_monomial(g * s);
    expected.add_term(gs, gm, 1);
    expected.add_term(gm, gs, 1);
    CHECK(d == expected);
  }
}
