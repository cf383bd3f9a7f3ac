// Exact fiber volumes of twisted monomial maps on a p-adic torus.
#ifndef GAMMALIFT_VOLUMES_HPP
#define GAMMALIFT_VOLUMES_HPP

#include "gammalift/rational.hpp"

#include <vector>

namespace gammalift {

// Volume of the fiber of (x_1..x_k) -> prod x_i^{n_i} over a point with
// valuation v and unit part `unit`, where coordinate i >= 2 carries the
// extra density |x_i|^{m_i}. The unit-class count g [g | dlog unit] is
// resolved inside the cyclic group (Z/p^level)^*, so p must be an odd
// prime; the result is checked for stability against level+1. Returns 0
// when no valuation splitting exists.
BigRational monomial_fiber_volume(const std::vector<long>& n, const std::vector<long>& m,
                                  long p, long v, long unit, int level);

} // namespace gammalift

#endif
