#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace loopbv {

using Integer = mpz_class;

/// Exact rational number. Values stay in a reduced int64 fast path while
/// they fit and promote to GMP transparently when they do not, so every
/// computation is exact and arbitrary precision; there are no tolerances
/// anywhere in this library. The fast path never touches the heap, which
/// keeps the verification sweeps allocation-free on their hot paths.
class Rational {
 public:
  Rational() = default;
  Rational(int n) : num_(n) {}
  Rational(long n) : num_(n) {}
  Rational(long long n) : num_(n) {}
  Rational(long long n, long long d);
  explicit Rational(const Integer& z);
  explicit Rational(const mpq_class& q) { assign_big(q); }
  explicit Rational(std::string_view text);

  Rational(const Rational& o) { copy_from(o); }
  Rational(Rational&& o) noexcept : num_(o.num_), den_(o.den_), big_(o.big_) { o.big_ = nullptr; }
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      release();
      copy_from(o);
    }
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    if (this != &o) {
      release();
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_;
      o.big_ = nullptr;
    }
    return *this;
  }
  ~Rational() { release(); }

  bool is_zero() const { return big_ ? mpq_sgn(big_->get_mpq_t()) == 0 : num_ == 0; }
  int sign() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);

  std::string str() const;
  mpq_class to_mpq() const;

 private:
  // small state: reduced, den_ > 0, both within +-2^62; big state: den_ == 0
  long long num_ = 0;
  long long den_ = 1;
  mpq_class* big_ = nullptr;

  bool small() const { return big_ == nullptr; }
  void release() {
    delete big_;
    big_ = nullptr;
  }
  void copy_from(const Rational& o);
  void assign_big(mpq_class q);  // demotes back to the fast path when it fits
  static Rational make(__int128 n, __int128 d);
};

/// Parses "n" or "n/d" with optional sign, exactly. Throws SchemaError on
/// anything else (including d == 0).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

Rational binomial(unsigned long n, unsigned long k);

}  // namespace loopbv
