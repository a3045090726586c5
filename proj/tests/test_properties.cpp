#include <doctest.h>

#include <random>

#include "loopbv/models.hpp"
#include "loopbv/sweep.hpp"

using namespace loopbv;

namespace {

// Hand-rolled generators over the U(2)-shaped and SO(3)-shaped signatures.
struct Gen {
  std::mt19937 rng;
  explicit Gen(unsigned seed) : rng(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  Rational coefficient() {
    int num = uniform(-9, 9);
    if (num == 0) num = 1;
    return Rational(num, uniform(1, 7));
  }

  std::vector<std::pair<int, long long>> word(const Signature& sig, int max_len) {
    std::vector<std::pair<int, long long>> w;
    const int len = uniform(0, max_len);
    for (int i = 0; i < len; ++i) {
      const int id = uniform(0, sig.generator_count() - 1);
      long long e = 0;
      switch (sig.gen(id).kind) {
        case GenKind::GroupFree: e = uniform(-4, 4); break;
        case GenKind::GroupTorsion: e = uniform(-3, 3); break;
        case GenKind::PolyEven: e = uniform(0, 3); break;
        case GenKind::ExtOdd: e = uniform(0, 1); break;
      }
      w.emplace_back(id, e);
    }
    return w;
  }

  Element element(const SigPtr& sig, int max_terms) {
    Element out(sig);
    const int terms = uniform(0, max_terms);
    for (int t = 0; t < terms; ++t) out += normalize(sig, coefficient(), word(*sig, 4));
    return out;
  }
};

int word_degree(const Signature& sig, const std::pair<int, long long>& f) {
  return sig.gen(f.first).degree * static_cast<int>(f.second);
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("adjacent transposition in a word costs exactly the Koszul sign") {
    Gen gen(2024);
    auto sig = make_lie_signature(LieGroupData{1, {2}, {3}});
    for (int trial = 0; trial < 400; ++trial) {
      auto w = gen.word(*sig, 6);
      if (w.size() < 2) continue;
      const int at = gen.uniform(0, static_cast<int>(w.size()) - 2);
      auto swapped = w;
      std::swap(swapped[at], swapped[at + 1]);
      const int sign =
          (word_degree(*sig, w[at]) % 2 != 0 && word_degree(*sig, w[at + 1]) % 2 != 0) ? -1 : 1;
      Element lhs = normalize(sig, 1, w);
      Element rhs = Rational(sign) * normalize(sig, 1, swapped);
      CHECK(lhs == rhs);
    }
  }

  TEST_CASE("product is bilinear and associative on random elements") {
    Gen gen(7);
    auto sig = make_lie_signature(LieGroupData{1, {}, {3}});
    for (int trial = 0; trial < 120; ++trial) {
      Element a = gen.element(sig, 3), b = gen.element(sig, 3), c = gen.element(sig, 3);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      Rational q = gen.coefficient();
      CHECK((q * a) * b == q * (a * b));
    }
  }

  TEST_CASE("B and the bracket are linear on random elements") {
    Gen gen(99);
    BVModel m = build_lie_group_model(LieGroupData{1, {}, {3}});
    for (int trial = 0; trial < 120; ++trial) {
      Element a = gen.element(m.sig, 3), b = gen.element(m.sig, 3), c = gen.element(m.sig, 2);
      Rational q = gen.coefficient();
      CHECK(apply_B(m, a + b) == apply_B(m, a) + apply_B(m, b));
      CHECK(apply_B(m, q * a) == q * apply_B(m, a));
      CHECK(bracket(m, a + b, c) == bracket(m, a, c) + bracket(m, b, c));
      CHECK(bracket(m, c, q * a) == q * bracket(m, c, a));
    }
  }

  TEST_CASE("B squares to zero on random (mixed) elements") {
    Gen gen(4242);
    for (const LieGroupData& data : {LieGroupData{1, {}, {3}}, LieGroupData{0, {2}, {3}}}) {
      BVModel m = build_lie_group_model(data);
      for (int trial = 0; trial < 150; ++trial)
        CHECK(apply_B(m, apply_B(m, gen.element(m.sig, 4))).is_zero());
    }
  }

  TEST_CASE("scratch-based sweep primitives match the expression forms") {
    Gen gen(55);
    auto sig = make_lie_signature(LieGroupData{1, {}, {3}});
    for (int trial = 0; trial < 100; ++trial) {
      Element a = gen.element(sig, 3), b = gen.element(sig, 3);
      Rational q = gen.coefficient();
      Element via_ops = a * b;
      via_ops *= q;
      Element via_into(sig);
      multiply_add(via_into, a, b, q);
      CHECK(via_ops == via_into);
      Element acc = gen.element(sig, 2);
      Element expected = acc + q * a;
      acc.add_scaled(a, q);
      CHECK(acc == expected);
    }
  }
}

TEST_SUITE("rational") {
  TEST_CASE("fast path covers ordinary arithmetic") {
    Rational a(3, 7), b(-2, 5);
    CHECK((a + b).str() == "1/35");
    CHECK((a * b).str() == "-6/35");
    CHECK((a - a).is_zero());
    CHECK(Rational(4, -6).str() == "-2/3");
    CHECK(Rational(0, 5).is_zero());
    CHECK(Rational("-3/7") == Rational(-3, 7));
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK(Rational(-1).sign() == -1);
  }

  TEST_CASE("values promote exactly past the int64 window") {
    const Rational big = Rational(1LL << 40) * Rational(1LL << 40);  // 2^80
    CHECK(big.str() == "1208925819614629174706176");
    CHECK(big * Rational(1, 1LL << 40) == Rational(1LL << 40));
    const Rational tiny = Rational(1, 1LL << 40) * Rational(1, 1LL << 40);
    CHECK(tiny.str() == "1/1208925819614629174706176");
    CHECK(big * tiny == Rational(1));
  }

  TEST_CASE("promotion round trips through arithmetic") {
    const Rational big = Rational(1LL << 40) * Rational(1LL << 40);
    CHECK(big - big == Rational(0));
    CHECK((big + Rational(1) - big).str() == "1");
    CHECK(big == big);
    CHECK(Rational(1) < big);
    CHECK((-big).sign() == -1);
    // demotion: big / big lands back on the fast path representation
    Rational q = big;
    q *= Rational(1, 1LL << 40);
    q *= Rational(1, 1LL << 40);
    CHECK(q == Rational(1));
    CHECK(q.str() == "1");
  }

  TEST_CASE("parsing is exact for arbitrarily large literals") {
    const std::string huge = "123456789012345678901234567890123456789";
    CHECK(parse_rational(huge).str() == huge);
    CHECK(parse_rational("-" + huge + "/3").str() == "-41152263004115226300411522630041152263");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
    CHECK_THROWS(parse_rational("1.5"));
  }

  TEST_CASE("binomials near and past the fast-path boundary") {
    CHECK(binomial(64, 32).str() == "1832624140942590534");
    CHECK(binomial(70, 35).str() == "112186277816662845432");  // needs promotion
    CHECK(binomial(5, 2) == Rational(10));
  }
}
