// Arbitrary-precision rationals, always kept in lowest terms with positive denominator.
#ifndef GAMMALIFT_RATIONAL_HPP
#define GAMMALIFT_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <iosfwd>

namespace gammalift {

class BigRational {
public:
  BigRational() : v_(0) {}
  BigRational(long n) : v_(n) {}
  BigRational(long num, long den);
  explicit BigRational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  // Parses "a" or "a/b".
  static BigRational parse(const std::string& s);

  BigRational operator-() const { return BigRational(mpq_class(-v_)); }
  BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
  BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
  BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const BigRational& a, const BigRational& b) { return a.v_ != b.v_; }
  friend bool operator<(const BigRational& a, const BigRational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const BigRational& a, const BigRational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const BigRational& a, const BigRational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const BigRational& a, const BigRational& b) { return a.v_ >= b.v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  BigRational abs() const { return BigRational(mpq_class(::abs(v_))); }

  // q^e for integer e (e may be negative; q must be nonzero then).
  BigRational pow(long e) const;

  long to_long() const;          // requires an integer fitting in long
  double to_double() const { return v_.get_d(); }
  std::string str() const;       // "a" or "a/b"

  const mpq_class& raw() const { return v_; }

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

} // namespace gammalift

#endif
