#include "goorbit/field.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <vector>

#include "goorbit/error.hpp"

namespace goorbit {

namespace {

// Storage index <-> bitmask of primes {2,3,5} under the square root.
constexpr std::array<int, 8> kIdxToMask{0, 1, 2, 4, 3, 5, 6, 7};
constexpr std::array<int, 8> kMaskToIdx{0, 1, 2, 4, 3, 5, 6, 7};

struct MulEntry {
  int idx;
  int factor;
};

constexpr std::array<std::array<MulEntry, 8>, 8> make_table() {
  std::array<std::array<MulEntry, 8>, 8> t{};
  constexpr int primes[3] = {2, 3, 5};
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      int mi = kIdxToMask[i], mj = kIdxToMask[j];
      int f = 1;
      for (int b = 0; b < 3; ++b)
        if ((mi & mj) & (1 << b)) f *= primes[b];
      t[i][j] = {kMaskToIdx[mi ^ mj], f};
    }
  }
  return t;
}

constexpr auto kMul = make_table();

// Flip the sign of every coordinate whose radicand contains the given prime bit.
Scalar conjugate(const Scalar& a, int prime_bit) {
  Scalar r;
  for (int i = 0; i < 8; ++i) {
    const Rational& c = a.coeff(i);
    if (c.is_zero()) continue;
    r.set_coeff(i, (kIdxToMask[i] & prime_bit) ? -c : c);
  }
  return r;
}

// Interval for the value using sqrt bounds at precision 2^-p.
Interval enclose(const Scalar& a, unsigned long p) {
  mpq_class lo = a.coeff(0).to_mpq();
  mpq_class hi = lo;
  mpz_class scale = mpz_class(1) << p;
  for (int i = 1; i < 8; ++i) {
    const Rational& c = a.coeff(i);
    if (c.is_zero()) continue;
    mpz_class n = mpz_class(Scalar::kRadicand[i]) * scale * scale;
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    mpq_class rlo(s, scale), rhi(mpz_class(s + 1), scale);
    rlo.canonicalize();
    rhi.canonicalize();
    mpq_class q = c.to_mpq();
    if (c.sign() > 0) {
      lo += q * rlo;
      hi += q * rhi;
    } else {
      lo += q * rhi;
      hi += q * rlo;
    }
  }
  return {lo, hi};
}

}  // namespace

Scalar::Scalar(const Rational& q) {
  c_[0] = q;
  mask_ = q.is_zero() ? 0 : 1;
}

Scalar Scalar::radical(int radicand, const Rational& c) {
  for (int i = 0; i < kDim; ++i) {
    if (kRadicand[i] == radicand) {
      Scalar s;
      s.set_coeff(i, c);
      return s;
    }
  }
  throw ParseError("radicand " + std::to_string(radicand) + " is not a basis element of the field");
}

void Scalar::set_coeff(int i, const Rational& v) {
  c_[i] = v;
  if (v.is_zero()) {
    mask_ &= static_cast<uint8_t>(~(1u << i));
  } else {
    mask_ |= static_cast<uint8_t>(1u << i);
  }
}

void Scalar::refresh_mask() {
  mask_ = 0;
  for (int i = 0; i < kDim; ++i)
    if (!c_[i].is_zero()) mask_ |= static_cast<uint8_t>(1u << i);
}

Scalar Scalar::operator-() const {
  Scalar r;
  for (int i = 0; i < kDim; ++i)
    if (mask_ & (1u << i)) r.c_[i] = -c_[i];
  r.mask_ = mask_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& b) {
  for (int i = 0; i < kDim; ++i)
    if (b.mask_ & (1u << i)) c_[i] += b.c_[i];
  if (b.mask_) refresh_mask();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) {
  for (int i = 0; i < kDim; ++i)
    if (b.mask_ & (1u << i)) c_[i] -= b.c_[i];
  if (b.mask_) refresh_mask();
  return *this;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar r(a);
  r += b;
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar r(a);
  r -= b;
  return r;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  if (a.mask_ == 0 || b.mask_ == 0) return;
  for (int i = 0; i < kDim; ++i) {
    if (!(a.mask_ & (1u << i))) continue;
    for (int j = 0; j < kDim; ++j) {
      if (!(b.mask_ & (1u << j))) continue;
      const MulEntry& e = kMul[i][j];
      Rational p = a.c_[i] * b.c_[j];
      if (e.factor != 1) p *= Rational(e.factor);
      c_[e.idx] += p;
    }
  }
  refresh_mask();
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r;
  if (a.mask_ == 1 && b.mask_ == 1) return Scalar(a.c_[0] * b.c_[0]);
  r.add_product(a, b);
  return r;
}

Scalar operator*(const Scalar& a, const Rational& b) {
  if (b.is_zero()) return Scalar();
  Scalar r;
  for (int i = 0; i < Scalar::kDim; ++i)
    if (!a.coeff(i).is_zero()) r.set_coeff(i, a.coeff(i) * b);
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return Scalar(c_[0].inverse());
  // a * s5(a) is fixed by s5, and so on down to Q.
  Scalar s5 = conjugate(*this, 4);
  Scalar b = *this * s5;
  Scalar s3 = conjugate(b, 2);
  Scalar c = b * s3;
  Scalar s2 = conjugate(c, 1);
  Scalar d = c * s2;
  if (!d.is_rational() || d.is_zero()) throw ConsistencyError("field norm is not a nonzero rational");
  return s5 * s3 * s2 * d.c_[0].inverse();
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (b.is_rational()) return a * b.coeff(0).inverse();
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.mask_ != b.mask_) return false;
  for (int i = 0; i < Scalar::kDim; ++i)
    if ((a.mask_ & (1u << i)) && a.c_[i] != b.c_[i]) return false;
  return true;
}

int Scalar::sign() const {
  if (mask_ == 0) return 0;
  if (is_rational()) return c_[0].sign();
  for (unsigned long p = 32;; p *= 2) {
    Interval iv = enclose(*this, p);
    if (iv.lo > 0) return 1;
    if (iv.hi < 0) return -1;
  }
}

Interval Scalar::approx(unsigned bits) const {
  if (bits == 0) throw Error("approx needs bits >= 1");
  if (is_rational()) {
    mpq_class q = c_[0].to_mpq();
    return {q, q};
  }
  mpq_class total = 0;
  for (int i = 1; i < kDim; ++i) total += c_[i].abs().to_mpq();
  mpq_class target(mpz_class(1), mpz_class(1) << bits);
  unsigned long p = bits + 1 + mpz_sizeinbase(mpz_class(total.get_num() / total.get_den() + 1).get_mpz_t(), 2);
  for (;; p += 8) {
    Interval iv = enclose(*this, p);
    if (iv.width() <= target) return iv;
  }
}

double Scalar::to_double() const {
  if (is_rational()) return c_[0].to_double();
  return approx(64).midpoint();
}

std::string Scalar::str() const {
  static const char* names[kDim] = {"", "r2", "r3", "r5", "r6", "r10", "r15", "r30"};
  std::string out = c_[0].str();
  for (int i = 1; i < kDim; ++i) {
    out += " + ";
    out += c_[i].str();
    out += "*";
    out += names[i];
  }
  return out;
}

std::string Scalar::pretty() const {
  if (is_zero()) return "0";
  static const char* names[kDim] = {"", "r2", "r3", "r5", "r6", "r10", "r15", "r30"};
  std::string out;
  for (int i = 0; i < kDim; ++i) {
    if (c_[i].is_zero()) continue;
    Rational c = c_[i];
    bool neg = c.sign() < 0;
    if (neg) c = -c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (i == 0) {
      out += c.str();
    } else if (c.is_one()) {
      out += names[i];
    } else {
      out += c.str() + "*" + names[i];
    }
  }
  return out;
}

Scalar Scalar::parse(std::string_view s) {
  std::string text(s);
  size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) {
    throw ParseError("bad scalar literal '" + text + "': " + why);
  };
  Scalar result;
  bool any = false;
  skip();
  while (pos < text.size()) {
    int sign = 1;
    bool had_sign = false;
    while (pos < text.size() && (text[pos] == '+' || text[pos] == '-' || std::isspace(static_cast<unsigned char>(text[pos])))) {
      if (text[pos] == '-') sign = -sign;
      if (text[pos] != ' ') had_sign = true;
      ++pos;
    }
    if (any && !had_sign) fail("expected '+' or '-'");
    if (pos >= text.size()) fail("dangling sign");
    Scalar term(sign);
    bool first = true;
    while (true) {
      skip();
      if (!first) {
        if (pos >= text.size() || text[pos] != '*') break;
        ++pos;
        skip();
      }
      first = false;
      if (pos < text.size() && text[pos] == 'r') {
        ++pos;
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("radical without radicand");
        term *= Scalar::radical(std::stoi(text.substr(start, pos - start)));
      } else {
        size_t start = pos;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
        if (start == pos) fail("expected a number or radical");
        term *= Scalar(Rational::parse(text.substr(start, pos - start)));
      }
    }
    result += term;
    any = true;
    skip();
  }
  if (!any) fail("empty");
  return result;
}

std::optional<Scalar> sqrt_in_field(const Rational& q) {
  if (q.sign() < 0) return std::nullopt;
  if (q.is_zero()) return Scalar();
  mpz_class m = q.num() * q.den();
  mpz_class root = 1;
  int f = 1;
  for (int p : {2, 3, 5}) {
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      ++e;
    }
    if (e % 2) f *= p;
    for (int k = 0; k < e / 2; ++k) root *= p;
  }
  if (!mpz_perfect_square_p(m.get_mpz_t())) return std::nullopt;
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());
  root *= s;
  mpq_class c(root, q.den());
  c.canonicalize();
  return Scalar::radical(f, Rational(c));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.pretty(); }

}  // namespace goorbit
