#include "goorbit/rational.hpp"

#include <cctype>
#include <ostream>

#include "goorbit/error.hpp"

namespace goorbit {

namespace {

using i128 = __int128;

constexpr int64_t kLimit = int64_t{1} << 62;

bool fits(i128 v) { return v > -static_cast<i128>(kLimit) && v < static_cast<i128>(kLimit); }

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

int64_t gcd64(int64_t a, int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool mpz_to_i64(const mpz_class& z, int64_t& out) {
  if (!mpz_fits_slong_p(z.get_mpz_t())) return false;
  long v = z.get_si();
  if (v <= -kLimit || v >= kLimit) return false;
  out = v;
  return true;
}

}  // namespace

Rational::Rational(long long v) {
  if (v > -kLimit && v < kLimit) {
    n_ = v;
  } else {
    big_ = std::make_unique<mpq_class>(mpz_class(std::to_string(v)));
  }
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw DivisionByZero();
  mpq_class q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  q.canonicalize();
  *this = from_big(q);
}

Rational::Rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  *this = from_big(c);
}

Rational::Rational(const Rational& o) : n_(o.n_), d_(o.d_) {
  if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
}

Rational& Rational::operator=(const Rational& o) {
  if (this == &o) return *this;
  n_ = o.n_;
  d_ = o.d_;
  if (o.big_) {
    big_ = std::make_unique<mpq_class>(*o.big_);
  } else {
    big_.reset();
  }
  return *this;
}

Rational Rational::from_big(mpq_class q) {
  Rational r;
  int64_t n, d;
  if (mpz_to_i64(q.get_num(), n) && mpz_to_i64(q.get_den(), d)) {
    r.n_ = n;
    r.d_ = d;
  } else {
    r.big_ = std::make_unique<mpq_class>(std::move(q));
  }
  return r;
}

Rational Rational::parse(std::string_view s) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  s = trim(s);
  auto is_int = [](std::string_view v) {
    if (!v.empty() && (v.front() == '-' || v.front() == '+')) v.remove_prefix(1);
    if (v.empty()) return false;
    for (char c : v)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string_view ns = trim(s.substr(0, slash));
  std::string_view ds = slash == std::string_view::npos ? "1" : trim(s.substr(slash + 1));
  if (!is_int(ns) || !is_int(ds)) throw ParseError("bad rational literal '" + std::string(s) + "'");
  std::string nstr(ns), dstr(ds);
  if (nstr.front() == '+') nstr.erase(0, 1);
  if (dstr.front() == '+') dstr.erase(0, 1);
  mpz_class num(nstr), den(dstr);
  if (den == 0) throw DivisionByZero();
  mpq_class q(num, den);
  q.canonicalize();
  return from_big(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : d_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return n_ > 0 ? 1 : (n_ < 0 ? -1 : 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q{mpz_class(static_cast<long>(n_)), mpz_class(static_cast<long>(d_))};
  return q;
}

mpz_class Rational::num() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(n_)); }
mpz_class Rational::den() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(d_)); }

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(n_) / static_cast<double>(d_);
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (d_ == 1) return std::to_string(n_);
  return std::to_string(n_) + "/" + std::to_string(d_);
}

Rational Rational::operator-() const {
  if (big_) return from_big(-*big_);
  Rational r;
  r.n_ = -n_;
  r.d_ = d_;
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (big_) return from_big(1 / *big_);
  Rational r;
  r.n_ = n_ < 0 ? -d_ : d_;
  r.d_ = n_ < 0 ? -n_ : n_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (!a.big_ && !b.big_) {
    if (a.d_ == 1 && b.d_ == 1) {
      i128 s = static_cast<i128>(a.n_) + b.n_;
      if (fits(s)) {
        Rational r;
        r.n_ = static_cast<int64_t>(s);
        return r;
      }
    } else {
      int64_t g = gcd64(a.d_, b.d_);
      i128 ad = a.d_ / g, bd = b.d_ / g;
      i128 num = static_cast<i128>(a.n_) * bd + static_cast<i128>(b.n_) * ad;
      i128 den = ad * b.d_;
      if (num == 0) return Rational();
      i128 h = gcd128(num, g);
      num /= h;
      den /= h;
      if (fits(num) && fits(den)) {
        Rational r;
        r.n_ = static_cast<int64_t>(num);
        r.d_ = static_cast<int64_t>(den);
        return r;
      }
    }
  }
  mpq_class q = a.to_mpq() + b.to_mpq();
  return Rational::from_big(q);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  if (!a.big_ && !b.big_) {
    int64_t g1 = gcd64(a.n_, b.d_);
    int64_t g2 = gcd64(b.n_, a.d_);
    i128 num = static_cast<i128>(a.n_ / g1) * (b.n_ / g2);
    i128 den = static_cast<i128>(a.d_ / g2) * (b.d_ / g1);
    if (fits(num) && fits(den)) {
      Rational r;
      r.n_ = static_cast<int64_t>(num);
      r.d_ = static_cast<int64_t>(den);
      return r;
    }
    mpq_class q(mpz_from(num), mpz_from(den));
    return Rational::from_big(q);
  }
  mpq_class q = a.to_mpq() * b.to_mpq();
  return Rational::from_big(q);
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  // Canonical form keeps small values inline, so mixed storage means unequal.
  return false;
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return static_cast<i128>(a.n_) * b.d_ < static_cast<i128>(b.n_) * a.d_;
  return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace goorbit
