// Exact gamma values: a cyclotomic number times an integer power of q^{1/2}.
// The half-power exponent is fixed by the defining sum (for example -n for a
// rank-n torus sum, -n^2 for the full-group sum), so equality must absorb
// even exponent differences into the cyclotomic part.
#ifndef GAMMALIFT_GAMMA_VALUE_HPP
#define GAMMALIFT_GAMMA_VALUE_HPP

#include "gammalift/cyclotomic.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>

namespace gammalift {

struct GammaValue {
  long q = 0;
  CyclotomicNumber cyc;
  long q_half_power = 0; // represented value: cyc * q^{q_half_power/2}

  std::complex<double> embed() const {
    return cyc.embed() * std::pow(static_cast<double>(q), q_half_power / 2.0);
  }

  friend bool operator==(const GammaValue& a, const GammaValue& b) {
    if (a.cyc.is_zero() && b.cyc.is_zero()) return true;
    if (a.q != b.q) return false;
    long d = a.q_half_power - b.q_half_power;
    if (d % 2 != 0) return false; // an odd q^{1/2} mismatch is never absorbed
    if (d >= 0) return a.cyc.scaled(BigRational(a.q).pow(d / 2)) == b.cyc;
    return a.cyc == b.cyc.scaled(BigRational(b.q).pow(-d / 2));
  }
  friend bool operator!=(const GammaValue& a, const GammaValue& b) { return !(a == b); }

  // product law (same q): multiplies the cyclotomic parts, adds the exponents
  friend GammaValue operator*(const GammaValue& a, const GammaValue& b) {
    if (a.q != b.q) throw std::invalid_argument("GammaValue: mixed q");
    return {a.q, a.cyc * b.cyc, a.q_half_power + b.q_half_power};
  }

  std::string str() const {
    std::ostringstream os;
    os << "(" << cyc.str() << ") * " << q << "^(" << q_half_power << "/2)";
    return os.str();
  }
};

} // namespace gammalift

#endif
