// Exact cyclotomic numbers: elements of Q(zeta_N) on the power basis modulo
// the N-th cyclotomic polynomial, with automatic conductor minimization so
// that equality is independent of the construction path.
#ifndef GAMMALIFT_CYCLOTOMIC_HPP
#define GAMMALIFT_CYCLOTOMIC_HPP

#include "gammalift/rational.hpp"

#include <complex>
#include <string>
#include <vector>

namespace gammalift {

class CyclotomicNumber {
public:
  CyclotomicNumber() : n_(1), coeffs_(1, BigRational(0)) {}
  CyclotomicNumber(const BigRational& r) : n_(1), coeffs_(1, r) {}
  CyclotomicNumber(long r) : n_(1), coeffs_(1, BigRational(r)) {}

  // zeta_N^k
  static CyclotomicNumber root_of_unity(long N, long k);
  // sum of coeffs[j] * zeta_N^j (any length; reduced and minimized)
  static CyclotomicNumber from_power_sums(long N, std::vector<BigRational> coeffs);

  long conductor() const { return n_; }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const { return n_ == 1; }
  BigRational rational_value() const; // requires is_rational()

  CyclotomicNumber operator-() const;
  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  CyclotomicNumber& operator+=(const CyclotomicNumber& o) { *this = *this + o; return *this; }
  CyclotomicNumber& operator-=(const CyclotomicNumber& o) { *this = *this - o; return *this; }
  CyclotomicNumber& operator*=(const CyclotomicNumber& o) { *this = *this * o; return *this; }
  CyclotomicNumber scaled(const BigRational& c) const;

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

  // Galois action zeta_N -> zeta_N^a, gcd(a, N) = 1.
  CyclotomicNumber galois(long a) const;
  CyclotomicNumber conjugate() const { return galois(-1); }

  // Numerical value with zeta_N = exp(2*pi*i/N).
  std::complex<double> embed() const;

  std::string str() const;

  // The N-th cyclotomic polynomial (integer coefficients, ascending degree).
  static const std::vector<BigRational>& cyclotomic_polynomial(long N);

private:
  void reduce(std::vector<BigRational>& poly) const;
  void minimize();
  CyclotomicNumber lifted(long M) const; // N | M

  long n_;
  std::vector<BigRational> coeffs_; // size phi(n_), basis zeta^0..zeta^{phi-1}
};

long euler_phi(long n);

} // namespace gammalift

#endif
