#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace plab {

// Exact rational arithmetic on int64.
//
// Built-in permuton geometry comes from small explicit fractions and several
// reference values must be reproduced with zero tolerance, so the permuton
// layer computes masses and coordinates in this type and converts to double
// only at the API boundary.
class Frac {
 public:
  constexpr Frac() = default;
  constexpr Frac(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Frac(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend Frac operator+(const Frac& a, const Frac& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Frac operator-(const Frac& a, const Frac& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Frac operator*(const Frac& a, const Frac& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Frac operator/(const Frac& a, const Frac& b) {
    if (b.num_ == 0) throw std::domain_error("Frac: division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Frac operator-() const {
    Frac r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Frac& operator+=(const Frac& o) { return *this = *this + o; }
  Frac& operator-=(const Frac& o) { return *this = *this - o; }
  Frac& operator*=(const Frac& o) { return *this = *this * o; }
  Frac& operator/=(const Frac& o) { return *this = *this / o; }

  friend bool operator==(const Frac& a, const Frac& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }
  friend bool operator<(const Frac& a, const Frac& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Frac& a, const Frac& b) { return b < a; }
  friend bool operator<=(const Frac& a, const Frac& b) { return !(b < a); }
  friend bool operator>=(const Frac& a, const Frac& b) { return !(a < b); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Nearest small-denominator rational, used when reading numeric JSON so that
  // decimal inputs like 0.2 become exactly 1/5. Falls back to the continued
  // fraction convergent closest to x with denominator at most max_den.
  static Frac from_double(double x, std::int64_t max_den = 1000000000LL) {
    if (!std::isfinite(x)) throw std::domain_error("Frac: non-finite input");
    bool neg = x < 0;
    double v = neg ? -x : x;
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double t = v;
    for (int it = 0; it < 64; ++it) {
      double fa = std::floor(t);
      if (fa > 9e17) break;
      auto a = static_cast<std::int64_t>(fa);
      std::int64_t p2 = a * p1 + p0;
      std::int64_t q2 = a * q1 + q0;
      if (q2 > max_den || q2 < 0) break;
      p0 = p1;
      q0 = q1;
      p1 = p2;
      q1 = q2;
      double rem = t - fa;
      if (rem < 1e-15 || std::fabs(static_cast<double>(p1) / q1 - v) < 1e-15) break;
      t = 1.0 / rem;
    }
    if (q1 == 0) throw std::domain_error("Frac: cannot rationalize " + std::to_string(x));
    return Frac(neg ? -p1 : p1, q1);
  }

 private:
  using i128 = __int128;

  static Frac make(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("Frac: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr i128 kMax = INT64_MAX;
    if (n > kMax || n < -kMax || d > kMax) throw std::overflow_error("Frac: overflow");
    Frac r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void normalize() { *this = make(num_, den_); }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Frac abs(const Frac& f) { return f.num() < 0 ? -f : f; }
inline const Frac& min(const Frac& a, const Frac& b) { return a < b ? a : b; }
inline const Frac& max(const Frac& a, const Frac& b) { return a < b ? b : a; }

}  // namespace plab
