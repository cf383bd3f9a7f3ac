#include "gammalift/ratfun.hpp"

namespace gammalift {

RationalFunction::RationalFunction(const MultivariatePolynomial& num)
    : num_(num), den_(MultivariatePolynomial::constant(num.nvars(), BigRational(1))) {}

RationalFunction::RationalFunction(const MultivariatePolynomial& num, const MultivariatePolynomial& den)
    : num_(num), den_(den) {
  if (num_.nvars() != den_.nvars()) throw std::invalid_argument("ratfun: variable count mismatch");
  if (den_.is_zero()) throw std::domain_error("ratfun: zero denominator");
  normalize();
}

RationalFunction RationalFunction::constant(int nvars, const BigRational& c) {
  return RationalFunction(MultivariatePolynomial::constant(nvars, c));
}

RationalFunction RationalFunction::variable(int nvars, int index) {
  return RationalFunction(MultivariatePolynomial::variable(nvars, index));
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = MultivariatePolynomial::constant(den_.nvars(), BigRational(1));
    return;
  }
  MultivariatePolynomial g = MultivariatePolynomial::gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = *num_.divide_exact(g);
    den_ = *den_.divide_exact(g);
  }
  BigRational lc = den_.leading_coeff();
  if (lc != BigRational(1)) {
    BigRational inv = BigRational(1) / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.num_.is_zero()) throw std::domain_error("ratfun: division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

BigRational RationalFunction::eval(const std::vector<BigRational>& point) const {
  BigRational d = den_.eval(point);
  if (d.is_zero()) throw pole_error("ratfun: pole at evaluation point");
  return num_.eval(point) / d;
}

RationalFunction RationalFunction::derivative(int var) const {
  MultivariatePolynomial n = num_.derivative(var) * den_ - num_ * den_.derivative(var);
  return RationalFunction(n, den_ * den_);
}

std::string RationalFunction::str(const std::vector<std::string>& names) const {
  if (den_.is_constant() && den_.constant_value() == BigRational(1)) return num_.str(names);
  return "(" + num_.str(names) + ") / (" + den_.str(names) + ")";
}

} // namespace gammalift
