// Sparse multivariate polynomials over BigRational, lex-ordered monomials.
#ifndef GAMMALIFT_POLYNOMIAL_HPP
#define GAMMALIFT_POLYNOMIAL_HPP

#include "gammalift/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gammalift {

using Monomial = std::vector<int>; // exponent vector, one slot per variable

class MultivariatePolynomial {
public:
  MultivariatePolynomial() : nvars_(0) {}
  explicit MultivariatePolynomial(int nvars) : nvars_(nvars) {}
  static MultivariatePolynomial constant(int nvars, const BigRational& c);
  static MultivariatePolynomial variable(int nvars, int index);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigRational constant_value() const; // requires is_constant()

  void set(const Monomial& m, const BigRational& c);
  const std::map<Monomial, BigRational>& terms() const { return terms_; }

  MultivariatePolynomial operator-() const;
  MultivariatePolynomial& operator+=(const MultivariatePolynomial& o);
  MultivariatePolynomial& operator-=(const MultivariatePolynomial& o);
  friend MultivariatePolynomial operator+(MultivariatePolynomial a, const MultivariatePolynomial& b) { return a += b; }
  friend MultivariatePolynomial operator-(MultivariatePolynomial a, const MultivariatePolynomial& b) { return a -= b; }
  friend MultivariatePolynomial operator*(const MultivariatePolynomial& a, const MultivariatePolynomial& b);
  MultivariatePolynomial& operator*=(const MultivariatePolynomial& o) { *this = *this * o; return *this; }
  MultivariatePolynomial scaled(const BigRational& c) const;

  friend bool operator==(const MultivariatePolynomial& a, const MultivariatePolynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultivariatePolynomial& a, const MultivariatePolynomial& b) { return !(a == b); }

  // Largest monomial in lex order. Zero polynomial has no leading term.
  const Monomial& leading_monomial() const;
  const BigRational& leading_coeff() const;

  int degree_in(int var) const;
  int total_degree() const;

  BigRational eval(const std::vector<BigRational>& point) const;
  MultivariatePolynomial derivative(int var) const;

  // Exact division; nullopt if o does not divide *this.
  std::optional<MultivariatePolynomial> divide_exact(const MultivariatePolynomial& o) const;

  // GCD up to a rational unit; result is primitive with integer coefficients
  // and positive lex-leading coefficient.
  static MultivariatePolynomial gcd(const MultivariatePolynomial& a, const MultivariatePolynomial& b);

  std::string str(const std::vector<std::string>& names = {}) const;

private:
  int nvars_;
  std::map<Monomial, BigRational> terms_;
};

} // namespace gammalift

#endif
