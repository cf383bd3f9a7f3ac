// Characters of Q_p^*, local L-factors, and Tate gamma factors.
//
// A character is split as (value at p) x (character of the units). The unit
// part is trivial (conductor 0) or factors through (Z/p)^* (conductor 1) and
// is recorded as an exponent against the least primitive root mod p. The
// additive character is fixed once: psi(x) = exp(2*pi*i*{x}) with {x} the
// p-adic fractional part, so psi is trivial on Z_p and nontrivial on p^-1 Z_p.
#ifndef GAMMALIFT_PADIC_CHARS_HPP
#define GAMMALIFT_PADIC_CHARS_HPP

#include "gammalift/normalization.hpp"
#include "gammalift/ratfun.hpp" // pole_error
#include "gammalift/weights.hpp"

#include <complex>
#include <vector>

namespace gammalift {

struct PAdicCharacter {
  long p = 2;
  std::complex<double> z{1.0, 0.0}; // value at the uniformizer p
  int conductor = 0;                // 0 (unramified) or 1
  long ram_exponent = 0;            // against the least primitive root mod p
};

long least_primitive_root(long p);

PAdicCharacter unramified_character(long p, std::complex<double> z);
// Normalizes the exponent mod p-1; an exponent divisible by p-1 gives
// conductor 0.
PAdicCharacter ramified_character(long p, std::complex<double> z, long ram_exponent);

PAdicCharacter character_inverse(const PAdicCharacter& chi);
// theta o lambda as a character of Q_p^*: the product of theta[a]^lambda[a].
PAdicCharacter compose_weight(const std::vector<PAdicCharacter>& theta,
                              const std::vector<long>& lambda);

// Unit-part value chi_ram(u) for u coprime to p.
std::complex<double> ramified_value(const PAdicCharacter& chi, long u);

// Local L-factor as a rational function of X = q^-s. Tate factors have
// numerator 1; products keep both polynomials expanded with den[0] = 1.
struct LocalLFactor {
  std::vector<std::complex<double>> num{ {1.0, 0.0} };
  std::vector<std::complex<double>> den{ {1.0, 0.0} };
  std::complex<double> eval(std::complex<double> X) const;
};

LocalLFactor tate_L(const PAdicCharacter& chi);
LocalLFactor l_factor_product(const LocalLFactor& a, const LocalLFactor& b);
// L_rho(theta, s) = prod_i tate_L(theta o lambda_i).
LocalLFactor L_rho(const WeightList& rho, const std::vector<PAdicCharacter>& theta);

// Tate gamma factor. Unramified: (1 - z^-1 q^(s-1)) / (1 - z q^-s).
// Conductor 1: g(chi) z^-1 q^(s-1) with g the Gauss sum over (Z/p)^*.
// Throws pole_error within 1e-12 of a pole of the unramified factor.
std::complex<double> tate_gamma(const PAdicCharacter& chi, std::complex<double> s);

// prod_i tate_gamma(theta o lambda_i, s); a pole in factor i is rethrown as
// pole_error naming that factor. sigma is not needed: the factors are
// computed coordinatewise.
std::complex<double> gamma_rho_torus(const WeightList& rho,
                                     const std::vector<PAdicCharacter>& theta,
                                     std::complex<double> s);

// Multiset {prod_a z_a^lambda_ia} for unramified theta, sorted by real part
// then imaginary part. Zero z_a or a ramified coordinate is a domain error.
std::vector<std::complex<double>> unramified_satake_lift(
    const WeightList& rho, const std::vector<PAdicCharacter>& theta);

// The characters theta o lambda_i sorted by |z| ascending, ties keeping the
// weight order of rho.
std::vector<PAdicCharacter> torus_lifting_data(
    const WeightList& rho, const std::vector<PAdicCharacter>& theta);

} // namespace gammalift

#endif
