// Schwartz-type functions on the cocharacter lattice of a split torus, their
// Mellin images as Laurent rational functions, and the Fourier operator in
// the multiplier model.
//
// A LatticeFunction is a finite list of base points with exact coefficients.
// In plain mode it is the function supported on those points; in tail mode it
// is sum_j c_j C_rho(mu - mu_j), where C_rho counts monoid presentations
// mu = sum a_i lambda_i with a_i >= 0. Mellin images carry a Laurent
// numerator and a multiset of denominator factors (1 - z^mu), kept with no
// factor dividing the numerator.
#ifndef GAMMALIFT_LATTICE_HPP
#define GAMMALIFT_LATTICE_HPP

#include "gammalift/normalization.hpp"
#include "gammalift/qsqrt.hpp"
#include "gammalift/weights.hpp"

#include <map>
#include <vector>

namespace gammalift {

struct LatticeFunction {
  int rank = 0;
  bool tail = false;
  WeightList rho; // cone data; required in tail mode
  std::vector<std::pair<std::vector<long>, QSqrt>> points;
};

LatticeFunction make_plain_function(int rank,
                                    std::vector<std::pair<std::vector<long>, QSqrt>> points);
LatticeFunction make_tail_function(const WeightList& rho,
                                   std::vector<std::pair<std::vector<long>, QSqrt>> points);

struct MellinImage {
  int rank = 0;
  long q = 0; // radical base used by coefficients once a Fourier twist enters
  std::map<std::vector<long>, QSqrt> numerator;
  std::map<std::vector<long>, int> denominator; // factor (1 - z^mu) -> multiplicity
};

// Exact count of presentations mu = sum a_i lambda_i with a_i >= 0. Needs
// sigma or a positive witness to certify the count is finite; without either
// the cone has a line and the call is a domain error.
long partition_C_rho(const WeightList& rho, const std::vector<long>& mu);

// Value of the function at one lattice point.
QSqrt evaluate_lattice(const LatticeFunction& phi, const std::vector<long>& mu);

// M(phi)(z) = sum_mu phi(mu) z^mu, as a reduced Laurent rational function.
MellinImage mellin(const LatticeFunction& phi);

// True iff prod_i (z^{lambda_i} - 1) * M reduces to a Laurent polynomial.
bool schwartz_membership(const MellinImage& M, const WeightList& rho);

// Multiplier model with the inversion z -> q^(shift * sigma) z^{-1}:
// M(F phi)(z) = Gamma_rho(z) M(phi)(inverted z), with
// Gamma_rho(z) = prod_i (1 - q^{-1} z^{-lambda_i}) / (1 - z^{lambda_i}).
// Requires schwartz_membership(M, rho); q is the residue cardinality.
MellinImage fourier_mellin(const MellinImage& M, const WeightList& rho, long q,
                           int shift = kFourierShiftExponent);

// Same operator on tail/plain functions; the result is in tail mode.
LatticeFunction fourier_rho(const LatticeFunction& phi, long q,
                            int shift = kFourierShiftExponent);

} // namespace gammalift

#endif
