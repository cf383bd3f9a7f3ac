// Weight lists: a torus representation given by its list of integer weight
// tuples, with an exact rational admissibility witness sigma satisfying
// <lambda_i, sigma> = 1 for every weight.
#ifndef GAMMALIFT_WEIGHTS_HPP
#define GAMMALIFT_WEIGHTS_HPP

#include "gammalift/rational.hpp"

#include <optional>
#include <vector>

namespace gammalift {

struct WeightList {
  int rank = 0;
  std::vector<std::vector<long>> weights; // n tuples, each of length rank
  std::optional<std::vector<BigRational>> sigma;

  int n() const { return static_cast<int>(weights.size()); }
};

// validates tuple lengths and attaches a sigma when one exists
WeightList make_weight_list(int rank, std::vector<std::vector<long>> weights);

// exact rational solution of <lambda_i, sigma> = 1 for all i, or nullopt
std::optional<std::vector<BigRational>> solve_sigma(int rank,
                                                    const std::vector<std::vector<long>>& weights);

bool is_admissible(const WeightList& rho);
// true if the weights span a finite-index subgroup of Z^rank
bool is_faithful(const WeightList& rho);

// A rational h with <lambda_i, h> > 0 for every weight, certifying that the
// monoid cone is pointed. Tries sigma, then the least-squares solution of
// <lambda_i, h> = 1, then the sum of the weights; nullopt if none works.
std::optional<std::vector<BigRational>> solve_positive_witness(const WeightList& rho);

BigRational weight_pairing(const std::vector<long>& lambda, const std::vector<BigRational>& sigma);

} // namespace gammalift

#endif
