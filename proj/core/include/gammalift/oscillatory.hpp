// Brute-force oscillatory integrals over p-adic tori.
//
// Approximates (Phi_rho * theta|sigma|^s)(1) by a truncated sum: valuation
// tuples (v_1..v_n) with |v_i| <= radius, the unit integral on each shell done
// by honest enumeration of (Z/p^K)^* at a level K capped by unit_level. The
// measure is d^*t = dt/|t| with additive dt giving Z_p mass 1, so each shell
// carries mass 1 - 1/q times the unit average. Admissibility of rho makes the
// regularizer |sigma|^s pull back to prod_i |t_i|^s, which is what the sum
// uses; rho without a solvable sigma is accepted on the same terms.
#ifndef GAMMALIFT_OSCILLATORY_HPP
#define GAMMALIFT_OSCILLATORY_HPP

#include "gammalift/padic_chars.hpp"
#include "gammalift/weights.hpp"

#include <complex>
#include <vector>

namespace gammalift {

struct OscillatoryParams {
  int radius = 8;     // valuation cutoff |v_i| <= radius
  int unit_level = 8; // unit enumeration capped at (Z/p^unit_level)^*
};

// Truncated sum for (Phi_rho * theta|sigma|^s)(1). Throws domain_error when
// some |z_i q^-s| >= 1, where the positive-valuation tail diverges.
std::complex<double> oscillatory_oracle(const WeightList& rho,
                                        const std::vector<PAdicCharacter>& theta,
                                        std::complex<double> s,
                                        const OscillatoryParams& params = {});

} // namespace gammalift

#endif
