// Character tables of explicit small groups by the class-sum eigenvector
// method (Dixon's modular variant): eigenvectors of the class multiplication
// matrices over a suitable prime field yield the central characters, degrees
// and values mod ell, then a discrete Fourier transform lifts each value to
// an exact cyclotomic number. Serves as an oracle independent of any closed
// table formulas.
#ifndef GAMMALIFT_DIXON_HPP
#define GAMMALIFT_DIXON_HPP

#include "gammalift/char_table.hpp"

#include <string>
#include <vector>

namespace gammalift {

// a group given by its multiplication table; index 0 must be the identity
struct FiniteGroup {
  std::string label;
  std::vector<std::vector<int>> mult; // mult[i][j] = index of g_i * g_j
  // optional per-element invariants used to align classes with other tables
  std::vector<FiniteFieldElement> traces;
  std::vector<FiniteFieldElement> dets;

  long order() const { return static_cast<long>(mult.size()); }
};

FiniteGroup cyclic_group(int n);
FiniteGroup symmetric_group(int n); // n <= 5
// all invertible 2x2 matrices over F_q, with traces and determinants recorded;
// group order (q^2-1)(q^2-q) must stay within the class-sum method's bound
FiniteGroup gl2_group(long q);

// order <= 500; throws domain_error if the table is not a group
CharacterTable dixon_character_table(const FiniteGroup& group);

// true if the tables agree up to a relabeling of classes and irreducibles;
// classes are aligned by the invariant key (size, trace, det) with trace and
// det read as prime-field values, so both tables must carry that data
bool tables_match_up_to_permutation(const CharacterTable& a, const CharacterTable& b);

} // namespace gammalift

#endif
