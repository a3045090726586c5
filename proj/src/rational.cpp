#include "loopbv/rational.hpp"

#include <cctype>

#include "loopbv/errors.hpp"

namespace loopbv {

namespace {

constexpr long long kSmallLimit = 1LL << 62;

bool fits_small(__int128 v) { return v > -static_cast<__int128>(kSmallLimit) && v < static_cast<__int128>(kSmallLimit); }

unsigned __int128 uabs(__int128 v) {
  return static_cast<unsigned __int128>(v < 0 ? -v : v);
}

void mpz_from_u128(mpz_t out, unsigned __int128 v) {
  const unsigned long long limbs[2] = {static_cast<unsigned long long>(v >> 64),
                                       static_cast<unsigned long long>(v)};
  mpz_import(out, 2, 1, sizeof(unsigned long long), 0, 0, limbs);
}

// std::gcd is not guaranteed for __int128 under -std=c++20
unsigned __int128 gcd_u128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    const unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpq_class mpq_of(long long num, long long den) {
  mpq_class q;
  mpq_set_si(q.get_mpq_t(), static_cast<long>(num), static_cast<unsigned long>(den));
  return q;  // inputs are already reduced with den > 0
}

}  // namespace

void Rational::copy_from(const Rational& o) {
  num_ = o.num_;
  den_ = o.den_;
  big_ = o.big_ ? new mpq_class(*o.big_) : nullptr;
}

void Rational::assign_big(mpq_class q) {
  q.canonicalize();
  if (mpz_fits_slong_p(q.get_num().get_mpz_t()) && mpz_fits_slong_p(q.get_den().get_mpz_t())) {
    const long long n = mpz_get_si(q.get_num().get_mpz_t());
    const long long d = mpz_get_si(q.get_den().get_mpz_t());
    if (n > -kSmallLimit && n < kSmallLimit && d < kSmallLimit) {
      release();
      num_ = n;
      den_ = d;
      return;
    }
  }
  if (big_)
    *big_ = std::move(q);
  else
    big_ = new mpq_class(std::move(q));
  num_ = 0;
  den_ = 0;
}

mpq_class Rational::to_mpq() const { return big_ ? *big_ : mpq_of(num_, den_); }

Rational Rational::make(__int128 n, __int128 d) {
  // d != 0; reduce and settle into whichever representation fits
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rational();
  const unsigned __int128 g = gcd_u128(uabs(n), uabs(d));
  n /= static_cast<__int128>(g);
  d /= static_cast<__int128>(g);
  Rational out;
  if (fits_small(n) && fits_small(d)) {
    out.num_ = static_cast<long long>(n);
    out.den_ = static_cast<long long>(d);
    return out;
  }
  mpq_class q;
  mpz_from_u128(mpq_numref(q.get_mpq_t()), uabs(n));
  mpz_from_u128(mpq_denref(q.get_mpq_t()), uabs(d));
  if (n < 0) mpq_neg(q.get_mpq_t(), q.get_mpq_t());
  out.assign_big(std::move(q));
  return out;
}

Rational::Rational(long long n, long long d) {
  if (d == 0) throw SchemaError("zero denominator");
  *this = make(n, d);
}

Rational::Rational(const Integer& z) {
  if (mpz_fits_slong_p(z.get_mpz_t())) {
    const long long v = mpz_get_si(z.get_mpz_t());
    if (v > -kSmallLimit && v < kSmallLimit) {
      num_ = v;
      return;
    }
  }
  assign_big(mpq_class(z));
}

Rational::Rational(std::string_view text) { *this = parse_rational(text); }

int Rational::sign() const {
  if (big_) return mpq_sgn(big_->get_mpq_t());
  return num_ < 0 ? -1 : num_ > 0 ? 1 : 0;
}

Rational& Rational::operator+=(const Rational& o) {
  if (small() && o.small()) {
    const __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    const __int128 d = static_cast<__int128>(den_) * o.den_;
    *this = make(n, d);
    return *this;
  }
  assign_big(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (small() && o.small()) {
    const __int128 n = static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_;
    const __int128 d = static_cast<__int128>(den_) * o.den_;
    *this = make(n, d);
    return *this;
  }
  assign_big(to_mpq() - o.to_mpq());
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (small() && o.small()) {
    const __int128 n = static_cast<__int128>(num_) * o.num_;
    const __int128 d = static_cast<__int128>(den_) * o.den_;
    *this = make(n, d);
    return *this;
  }
  assign_big(to_mpq() * o.to_mpq());
  return *this;
}

Rational Rational::operator-() const {
  if (small()) {
    Rational out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
  }
  Rational out;
  out.assign_big(mpq_class(-*big_));
  return out;
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.small() && b.small()) return a.num_ == b.num_ && a.den_ == b.den_;
  return mpq_cmp(a.to_mpq().get_mpq_t(), b.to_mpq().get_mpq_t()) == 0;
}

bool operator<(const Rational& a, const Rational& b) {
  if (a.small() && b.small())
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  return mpq_cmp(a.to_mpq().get_mpq_t(), b.to_mpq().get_mpq_t()) < 0;
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  std::string out = std::to_string(num_);
  if (den_ != 1) out += "/" + std::to_string(den_);
  return out;
}

Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view num = text, den;
  if (auto pos = text.find('/'); pos != std::string_view::npos) {
    num = text.substr(0, pos);
    den = text.substr(pos + 1);
    if (!is_int(den)) throw SchemaError("bad rational literal '" + std::string(text) + "'");
  }
  if (!is_int(num)) throw SchemaError("bad rational literal '" + std::string(text) + "'");
  mpq_class q(std::string(text), 10);
  if (q.get_den() == 0) throw SchemaError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return Rational(q);
}

std::string to_string(const Rational& q) { return q.str(); }

Rational binomial(unsigned long n, unsigned long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

}  // namespace loopbv
