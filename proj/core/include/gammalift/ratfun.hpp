// Rational functions: pairs of polynomials kept reduced, denominator lex-monic.
#ifndef GAMMALIFT_RATFUN_HPP
#define GAMMALIFT_RATFUN_HPP

#include "gammalift/polynomial.hpp"

#include <stdexcept>

namespace gammalift {

struct pole_error : std::domain_error {
  explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

class RationalFunction {
public:
  RationalFunction() : num_(0), den_(0) {}
  explicit RationalFunction(const MultivariatePolynomial& num);
  RationalFunction(const MultivariatePolynomial& num, const MultivariatePolynomial& den);
  static RationalFunction constant(int nvars, const BigRational& c);
  static RationalFunction variable(int nvars, int index);

  const MultivariatePolynomial& num() const { return num_; }
  const MultivariatePolynomial& den() const { return den_; }
  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { *this = *this + o; return *this; }
  RationalFunction& operator-=(const RationalFunction& o) { *this = *this - o; return *this; }
  RationalFunction& operator*=(const RationalFunction& o) { *this = *this * o; return *this; }
  RationalFunction& operator/=(const RationalFunction& o) { *this = *this / o; return *this; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  // Throws pole_error when the reduced denominator vanishes at the point.
  BigRational eval(const std::vector<BigRational>& point) const;
  RationalFunction derivative(int var) const;

  std::string str(const std::vector<std::string>& names = {}) const;

private:
  void normalize();
  MultivariatePolynomial num_, den_;
};

} // namespace gammalift

#endif
