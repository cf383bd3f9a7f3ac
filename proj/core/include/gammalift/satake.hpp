// Spherical expansion of the basic function attached to a weight list:
// symmetric-power traces resolved against Hall-Littlewood polynomials.
#ifndef GAMMALIFT_SATAKE_HPP
#define GAMMALIFT_SATAKE_HPP

#include "gammalift/ratfun.hpp"
#include "gammalift/weights.hpp"

#include <map>
#include <vector>

namespace gammalift {

// Coefficient of q^{<lambda,delta>} P_lambda(z; q^-1) inside the symmetrized
// degree-`degree` trace, as an exact rational function in u = q^{-1/2}.
struct SatakeTerm {
  int degree = 0;
  std::vector<long> lambda;
  RationalFunction value;
};

struct SatakeExpansion {
  int rank = 0;
  int max_degree = 0;
  bool symmetrized_differs = false; // some raw trace needed Weyl averaging
  std::vector<SatakeTerm> terms;
};

// Hall-Littlewood Laurent polynomial P_lambda(z_1..z_r; t) with t = u^2,
// as exponent vector -> coefficient in Q(u). Parts must be weakly
// decreasing; negative parts are allowed.
std::map<std::vector<long>, RationalFunction> hall_littlewood(
    const std::vector<long>& lambda, int rank);

// Expands the Weyl-averaged traces of the symmetric powers of rho, twisted
// by the half-sum shift, through symmetric degree max_degree. Requires
// rank <= 3, max_degree <= 12, and an admissibility certificate on rho.
SatakeExpansion satake_basic_function(const WeightList& rho, int max_degree);

// Sum of the expansion coefficients attached to one dominant exponent.
RationalFunction satake_coefficient(const SatakeExpansion& E,
                                    const std::vector<long>& lambda);

} // namespace gammalift

#endif
