// Exact character tables for GL(1, q) and GL(2, q) (classical four-family
// construction), the full-group gamma sum over a table row, and the central
// function attached to a system of gamma values.
#ifndef GAMMALIFT_CHAR_TABLE_HPP
#define GAMMALIFT_CHAR_TABLE_HPP

#include "gammalift/cyclotomic.hpp"
#include "gammalift/finite_torus.hpp"
#include "gammalift/gamma_value.hpp"

#include <string>
#include <vector>

namespace gammalift {

enum class ClassKind { Central, Unipotent, Split, Elliptic, Generic };
enum class IrrepKind { Linear, SteinbergTwist, PrincipalSeries, Cuspidal, Generic };

struct ConjClass {
  ClassKind kind;
  std::vector<long> params; // central/unipotent {a}; split {a,b}; elliptic {m}
  long size = 0;
  FiniteFieldElement trace; // of a representative, in the table's ambient field
  FiniteFieldElement det;
  std::string label;
};

struct Irrep {
  IrrepKind kind;
  std::vector<long> params; // linear/steinberg {alpha}; principal {alpha,beta}; cuspidal {e}
  long dim = 0;
  std::string label;
};

// Multiplicative characters are indexed by exponents against fixed generators:
// alpha-type exponents against h = G^{q+1} (a generator of F_q^* inside the
// ambient field), cuspidal exponents against G itself. A torus built over the
// same ambient field shares these generators, so torus character exponents
// pair with table parameters with no translation.
struct CharacterTable {
  std::string group_label;
  long q = 0;
  int n = 0; // GL(n, q)
  long group_order = 0;
  const FiniteField* ambient = nullptr;
  std::vector<ConjClass> classes;
  std::vector<Irrep> irreps;
  std::vector<std::vector<CyclotomicNumber>> values; // [irrep][class]

  int class_index(ClassKind kind, std::vector<long> params) const;  // -1 if absent
  int irrep_index(IrrepKind kind, std::vector<long> params) const;  // -1 if absent
  long sum_dim_squares() const;
};

CharacterTable gl1_character_table(long q);
// q an odd prime power with 3 <= q <= 9
CharacterTable gl2_character_table(long q);

struct OrthogonalityReport {
  long row_checks = 0;
  long column_checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
// exact row and column orthogonality over cyclotomic arithmetic
OrthogonalityReport verify_orthogonality(const CharacterTable& table);

// (-1)^n q^{-n^2/2} (1/dim) sum_C |C| psi(trace C) chi(C); q_half_power = -n^2
GammaValue group_gamma(const CharacterTable& table, int irrep, const AdditiveCharacter& psi);

// class function with one common power of q^{1/2}: value on class c is
// values[c] * q^{q_half_power/2}
struct CentralFunction {
  long q = 0;
  long q_half_power = 0;
  std::vector<CyclotomicNumber> values;
};

// Phi(C) = (1/|G|) sum_pi dim(pi) gamma(pi) chi_pi(C^{-1}); gamma indexed like
// table.irreps, all entries over the same q with half-powers of equal parity
CentralFunction central_function_from_gamma(const CharacterTable& table,
                                            const std::vector<GammaValue>& gamma);

// (1/dim) sum_C |C| Phi(C) chi(C): recovers gamma(pi) from its central function
GammaValue gamma_from_central_function(const CharacterTable& table, const CentralFunction& phi,
                                       int irrep);

} // namespace gammalift

#endif
