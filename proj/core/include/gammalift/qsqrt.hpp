// Exact numbers of the form a + b sqrt(q) with rational a, b and a fixed
// integer q >= 2. q = 0 marks a plain rational; binary operations merge a
// plain rational with either radical field and reject mixed radicals.
#ifndef GAMMALIFT_QSQRT_HPP
#define GAMMALIFT_QSQRT_HPP

#include "gammalift/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gammalift {

struct QSqrt {
  long q = 0;
  BigRational a, b;

  QSqrt() = default;
  QSqrt(const BigRational& r) : q(0), a(r) {} // NOLINT: implicit by design
  QSqrt(long qq, BigRational aa, BigRational bb) : q(qq), a(std::move(aa)), b(std::move(bb)) {
    if (b.is_zero()) q = 0;
    if (q == 0 && !b.is_zero()) throw std::logic_error("QSqrt: radical part without a base");
  }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  bool is_rational() const { return b.is_zero(); }

  static long merge_base(long x, long y) {
    if (x == 0) return y;
    if (y == 0) return x;
    if (x != y) throw std::logic_error("QSqrt: mixed radical bases");
    return x;
  }

  friend QSqrt operator+(const QSqrt& x, const QSqrt& y) {
    long q = merge_base(x.q, y.q);
    BigRational b = x.b + y.b;
    return b.is_zero() ? QSqrt(x.a + y.a) : QSqrt(q, x.a + y.a, b);
  }
  friend QSqrt operator-(const QSqrt& x, const QSqrt& y) {
    long q = merge_base(x.q, y.q);
    BigRational b = x.b - y.b;
    return b.is_zero() ? QSqrt(x.a - y.a) : QSqrt(q, x.a - y.a, b);
  }
  QSqrt operator-() const { return is_rational() ? QSqrt(-a) : QSqrt(q, -a, -b); }
  friend QSqrt operator*(const QSqrt& x, const QSqrt& y) {
    long q = merge_base(x.q, y.q);
    BigRational rq(q);
    BigRational a = x.a * y.a + x.b * y.b * rq;
    BigRational b = x.a * y.b + x.b * y.a;
    return b.is_zero() ? QSqrt(a) : QSqrt(q, a, b);
  }
  friend QSqrt operator/(const QSqrt& x, const QSqrt& y) {
    if (y.is_zero()) throw std::domain_error("QSqrt: division by zero");
    long q = merge_base(x.q, y.q);
    BigRational norm = y.a * y.a - y.b * y.b * BigRational(q);
    if (norm.is_zero()) throw std::domain_error("QSqrt: division by a zero-norm element");
    QSqrt conj = y.is_rational() ? QSqrt(y.a) : QSqrt(q, y.a, -y.b);
    QSqrt prod = x * conj;
    if (prod.is_rational()) return QSqrt(prod.a / norm);
    return QSqrt(q, prod.a / norm, prod.b / norm);
  }
  QSqrt& operator+=(const QSqrt& o) { *this = *this + o; return *this; }
  QSqrt& operator-=(const QSqrt& o) { *this = *this - o; return *this; }
  QSqrt& operator*=(const QSqrt& o) { *this = *this * o; return *this; }
  QSqrt& operator/=(const QSqrt& o) { *this = *this / o; return *this; }

  friend bool operator==(const QSqrt& x, const QSqrt& y) {
    return x.a == y.a && x.b == y.b && (x.b.is_zero() || x.q == y.q);
  }
  friend bool operator!=(const QSqrt& x, const QSqrt& y) { return !(x == y); }

  double to_double() const {
    double v = a.to_double();
    if (!b.is_zero()) v += b.to_double() * std::sqrt(static_cast<double>(q));
    return v;
  }

  std::string str() const {
    if (b.is_zero()) return a.str();
    return a.str() + " + (" + b.str() + ")*sqrt(" + std::to_string(q) + ")";
  }
};

// q^(k/2) as a QSqrt; k may be negative.
inline QSqrt q_half_power(long q, long k) {
  BigRational base(q);
  BigRational ip = base.pow(k >= 0 ? k / 2 : -((-k + 1) / 2));
  if (k % 2 == 0) return QSqrt(ip);
  if (k > 0) return QSqrt(q, BigRational(0), ip);
  // k negative odd: q^(k/2) = q^((k-1)/2) * sqrt(q), with (k-1)/2 = -((-k+1)/2).
  return QSqrt(q, BigRational(0), ip);
}

} // namespace gammalift

#endif
