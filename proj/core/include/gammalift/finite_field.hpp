// F_{p^k} with a deterministic defining polynomial and generator:
// the defining polynomial is the lexicographically least monic irreducible
// (coefficients compared as (c_0, ..., c_{k-1})), the generator the least
// element of full multiplicative order in base-p digit order.
#ifndef GAMMALIFT_FINITE_FIELD_HPP
#define GAMMALIFT_FINITE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace gammalift {

class FiniteField;

class FiniteFieldElement {
public:
  FiniteFieldElement() : field_(nullptr) {}
  FiniteFieldElement(const FiniteField* f, std::vector<int> coords)
      : field_(f), coords_(std::move(coords)) {}

  const FiniteField& field() const { return *field_; }
  const std::vector<int>& coords() const { return coords_; }
  bool is_zero() const;
  long index() const; // base-p digit encoding; 0 is the zero element

  FiniteFieldElement operator-() const;
  friend FiniteFieldElement operator+(const FiniteFieldElement& a, const FiniteFieldElement& b);
  friend FiniteFieldElement operator-(const FiniteFieldElement& a, const FiniteFieldElement& b);
  friend FiniteFieldElement operator*(const FiniteFieldElement& a, const FiniteFieldElement& b);
  friend FiniteFieldElement operator/(const FiniteFieldElement& a, const FiniteFieldElement& b);
  friend bool operator==(const FiniteFieldElement& a, const FiniteFieldElement& b);
  friend bool operator!=(const FiniteFieldElement& a, const FiniteFieldElement& b) { return !(a == b); }

  FiniteFieldElement pow(long e) const;
  FiniteFieldElement inverse() const;
  FiniteFieldElement frobenius(long times = 1) const; // x -> x^(p^times)

  std::string str() const;

private:
  const FiniteField* field_;
  std::vector<int> coords_;
};

class FiniteField {
public:
  // Shared, cached per (p, k). Size p^k must stay within desk scale (<= 10^6).
  static const FiniteField& get(long p, int k);

  long p() const { return p_; }
  int degree() const { return k_; }
  long size() const { return size_; }
  const std::vector<int>& modulus() const { return modulus_; } // ascending coeffs, degree k, monic

  FiniteFieldElement zero() const;
  FiniteFieldElement one() const;
  FiniteFieldElement from_prime(long a) const;       // image of a mod p
  FiniteFieldElement from_index(long idx) const;      // inverse of FiniteFieldElement::index()
  FiniteFieldElement generator() const { return from_index(gen_index_); }

  // Brute-force discrete log base generator(); x must be nonzero.
  long discrete_log(const FiniteFieldElement& x) const;

  // Trace to the subfield of degree sub_degree | k: sum of x^(p^(sub_degree * i)).
  FiniteFieldElement trace_to(const FiniteFieldElement& x, int sub_degree) const;
  long trace_to_prime(const FiniteFieldElement& x) const; // in [0, p)

  std::vector<int> mul_coords(const std::vector<int>& a, const std::vector<int>& b) const;

private:
  FiniteField(long p, int k);
  void build_log_table() const;

  long p_;
  int k_;
  long size_;
  std::vector<int> modulus_;
  long gen_index_;
  mutable std::vector<long> log_table_; // index -> dlog, lazily built
};

} // namespace gammalift

#endif
