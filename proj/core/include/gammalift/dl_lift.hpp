// Torus-to-group transfer for GL(2, F_q): constituents of the virtual
// representations attached to (torus, character) pairs, the sweep checking
// that every constituent's group gamma equals the torus gamma, and the
// weight-map pullback gamma for a torus representation given by a weight
// list (with Weyl lifts along repeated weights).
#ifndef GAMMALIFT_DL_LIFT_HPP
#define GAMMALIFT_DL_LIFT_HPP

#include "gammalift/char_table.hpp"
#include "gammalift/finite_torus.hpp"
#include "gammalift/weights.hpp"

#include <string>
#include <vector>

namespace gammalift {

struct DLConstituent {
  int irrep = -1; // row index into the table
  int mult = 0;   // +1 or -1
};

// a (torus, character) pair with its irreducible constituents; the signed
// sum of the constituent characters is pinned to the closed virtual
// character row, so the label is self-checking
struct DLLabel {
  std::vector<int> w_cycle_type;
  std::vector<long> theta_exponents;
  std::vector<DLConstituent> constituents;
};

// closed form of the virtual character attached to theta on each class of
// the table: induced-from-Borel values on the split side, the classical
// elliptic-sum values on the Coxeter side
std::vector<CyclotomicNumber> dl_virtual_character(const CharacterTable& table,
                                                   const FiniteTorusCharacter& theta);

// constituents with signs; throws logic_error if the signed character sum
// does not reproduce dl_virtual_character
DLLabel dl_constituents_gl2(const CharacterTable& table, const FiniteTorusCharacter& theta);

struct FiniteMainCheck {
  std::vector<int> w_cycle_type;
  std::vector<long> theta_exponents;
  std::string constituent;
  GammaValue gamma_group;
  GammaValue gamma_torus;
  bool pass = false;
};

struct FiniteMainReport {
  long q = 0;
  std::vector<FiniteMainCheck> checks;
  long failure_count = 0;
  bool all_pass() const { return failure_count == 0; }
};

// enumerates every (torus, character) pair up to equivalence (unordered
// split exponents; Coxeter exponents up to e ~ qe) and asserts that each
// constituent's group gamma equals the torus gamma exactly
FiniteMainReport verify_finite_main(long q, long psi_shift = 1);

// lexicographically least permutation w' of the weight indices with
// lambda_{w'(i)} = w(lambda_i); domain_error if w does not preserve the
// weight multiset. Permutations act on tuples by (w.lambda)_{w(a)} = lambda_a.
std::vector<int> lift_weyl_image(const WeightList& rho, const std::vector<int>& w);

// gamma of the pullback character: lifts w to w' on the weight indices,
// transports theta along p(x_1..x_n) = prod_i lambda_i(x_i) to the torus
// with component per cycle of w', and evaluates its gamma. theta lives on
// a torus whose cycle type matches the cycles of w ordered by least moved
// index; component generators are identified across realizations as
// normalized powers of the ambient generator, so the transport is exact
// exponent arithmetic. An explicit lift may be supplied; it is checked for
// equivariance (logic_error on failure, signaling a wrong lift).
GammaValue gamma_rho_finite(const WeightList& rho, const FiniteTorusCharacter& theta,
                            const std::vector<int>& w, const AdditiveCharacter& psi,
                            const std::vector<int>* lift = nullptr);

} // namespace gammalift

#endif
