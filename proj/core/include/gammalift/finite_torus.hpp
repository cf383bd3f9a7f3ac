// Twisted maximal tori of GL(n) over F_q: a cycle type (n_1, ..., n_k) gives
// T_w = prod F_{q^{n_i}}^*, realized as subgroups of one ambient field so that
// characters, traces and weight-map pullbacks stay in a single arithmetic
// world. Supplies the torus gamma sum.
#ifndef GAMMALIFT_FINITE_TORUS_HPP
#define GAMMALIFT_FINITE_TORUS_HPP

#include "gammalift/finite_field.hpp"
#include "gammalift/gamma_value.hpp"

#include <vector>

namespace gammalift {

// psi_c(x) = zeta_p^{lift(Tr_{F_q/F_p}(c x))} with the shift c in the prime
// subfield (1 <= c < p); this keeps the character independent of how F_q is
// realized inside a larger field.
struct AdditiveCharacter {
  long q = 0, p = 0;
  int f = 0;
  long shift = 1;

  explicit AdditiveCharacter(long q_, long shift_ = 1);
  // x must lie in the F_q-subfield of its field; returns the exponent in [0, p)
  long exponent_at(const FiniteFieldElement& x) const;
};

class FiniteTorus {
public:
  // ambient_multiple: degree of the ambient field over F_q; 0 picks the least
  // common multiple of the cycle lengths. It must be a common multiple.
  FiniteTorus(long q, std::vector<int> cycle_type, int ambient_multiple = 0);

  long q() const { return q_; }
  long p() const { return p_; }
  int f() const { return f_; }
  const std::vector<int>& cycle_type() const { return cycle_; }
  int components() const { return static_cast<int>(cycle_.size()); }
  int rank() const { return n_; }
  int sign_length() const; // sum of (n_i - 1); the sign of any representative

  const FiniteField& ambient() const { return *ambient_; }
  const FiniteFieldElement& component_generator(int i) const { return gens_[i]; }
  long component_order(int i) const { return orders_[i]; }

  // Tr_{F_{q^{n_i}}/F_q} of a component value, computed in the ambient field.
  FiniteFieldElement trace_component(int i, const FiniteFieldElement& x) const;

private:
  long q_, p_;
  int f_, n_;
  std::vector<int> cycle_;
  const FiniteField* ambient_;
  std::vector<FiniteFieldElement> gens_;
  std::vector<long> orders_;
};

// theta(t) = prod_i zeta_{M_i}^{e_i * dlog_{g_i}(t_i)}, M_i = q^{n_i} - 1.
struct FiniteTorusCharacter {
  const FiniteTorus* torus = nullptr;
  std::vector<long> exponents;

  FiniteTorusCharacter(const FiniteTorus& t, std::vector<long> exps);
  // regular = trivial stabilizer in the relative Weyl group (component-wise
  // Frobenius rotations and permutations of equal-length cycles)
  bool is_regular() const;
};

// gamma_w(theta) = (-1)^{n + l(w)} q^{-n/2} sum_{t in T_w} psi(tr t) theta(t),
// with tr t the sum of the component field traces; q_half_power = -n.
GammaValue torus_gamma(const FiniteTorus& torus, const FiniteTorusCharacter& theta,
                       const AdditiveCharacter& psi);

} // namespace gammalift

#endif
