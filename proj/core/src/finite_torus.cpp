#include "gammalift/finite_torus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace gammalift {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// (q, f) with q = p^f for prime p, or throws
std::pair<long, int> factor_prime_power(long q) {
  if (q < 2) throw std::invalid_argument("torus: q must be a prime power >= 2");
  long p = 0;
  for (long d = 2; d * d <= q; ++d)
    if (q % d == 0) { p = d; break; }
  if (p == 0) return {q, 1};
  int f = 0;
  long m = q;
  while (m % p == 0) { m /= p; ++f; }
  if (m != 1 || !is_prime(p))
    throw std::invalid_argument("torus: q must be a prime power");
  return {p, f};
}

} // namespace

AdditiveCharacter::AdditiveCharacter(long q_in, long shift_in) : shift(shift_in) {
  auto [pp, ff] = factor_prime_power(q_in);
  q = q_in;
  p = pp;
  f = ff;
  if (shift <= 0 || shift >= p)
    throw std::invalid_argument("additive character: shift must lie in {1, ..., p-1}");
}

long AdditiveCharacter::exponent_at(const FiniteFieldElement& x) const {
  const FiniteField& F = x.field();
  if (F.p() != p)
    throw std::invalid_argument("additive character: characteristic mismatch");
  if (F.degree() % f != 0)
    throw std::invalid_argument("additive character: element not over F_q");
  // Tr_{F_q/F_p} computed as a partial trace of the ambient element: summing
  // the f conjugates x^{p^i} of an F_q element gives a constant (prime-field)
  // element whenever x really lies in F_q, whatever the ambient degree.
  FiniteFieldElement t = x;
  FiniteFieldElement s = x;
  for (int i = 1; i < f; ++i) {
    t = t.frobenius(1);
    s = s + t;
  }
  for (size_t i = 1; i < s.coords().size(); ++i)
    if (s.coords()[i] != 0)
      throw std::invalid_argument("additive character: element not in the F_q-subfield");
  long c = s.coords()[0];
  return (shift * c) % p;
}

FiniteTorus::FiniteTorus(long q_in, std::vector<int> cycle_type, int ambient_multiple)
    : cycle_(std::move(cycle_type)) {
  auto [pp, ff] = factor_prime_power(q_in);
  q_ = q_in;
  p_ = pp;
  f_ = ff;
  if (cycle_.empty()) throw std::invalid_argument("torus: empty cycle type");
  n_ = 0;
  long need = 1;
  for (int c : cycle_) {
    if (c < 1) throw std::invalid_argument("torus: cycle lengths must be positive");
    n_ += c;
    need = std::lcm(need, static_cast<long>(c));
  }
  long mult = ambient_multiple == 0 ? need : ambient_multiple;
  if (mult % need != 0)
    throw std::invalid_argument("torus: ambient degree must be a multiple of every cycle length");
  ambient_ = &FiniteField::get(p_, f_ * static_cast<int>(mult));
  FiniteFieldElement G = ambient_->generator();
  long Q = ambient_->size();
  gens_.clear();
  orders_.clear();
  for (int c : cycle_) {
    long M = 1;
    for (int i = 0; i < c; ++i) M *= q_;
    M -= 1; // q^c - 1
    gens_.push_back(G.pow((Q - 1) / M));
    orders_.push_back(M);
  }
}

int FiniteTorus::sign_length() const {
  int l = 0;
  for (int c : cycle_) l += c - 1;
  return l;
}

FiniteFieldElement FiniteTorus::trace_component(int i, const FiniteFieldElement& x) const {
  // Tr_{F_{q^{n_i}}/F_q}: sum of x^{q^d} for d < n_i, with q-Frobenius = f-fold
  // p-Frobenius inside the ambient field.
  int c = cycle_[i];
  FiniteFieldElement t = x;
  FiniteFieldElement s = x;
  for (int d = 1; d < c; ++d) {
    t = t.frobenius(f_);
    s = s + t;
  }
  return s;
}

FiniteTorusCharacter::FiniteTorusCharacter(const FiniteTorus& t, std::vector<long> exps)
    : torus(&t), exponents(std::move(exps)) {
  if (static_cast<int>(exponents.size()) != t.components())
    throw std::invalid_argument("torus character: one exponent per cycle");
  for (int i = 0; i < t.components(); ++i) {
    long M = t.component_order(i);
    exponents[i] = ((exponents[i] % M) + M) % M;
  }
}

bool FiniteTorusCharacter::is_regular() const {
  // The stabilizer check runs over the centralizer of w in S_n: independent
  // Frobenius rotations e_i -> q^{j_i} e_i mod M_i on each cycle, composed
  // with permutations of cycles of equal length. theta is regular iff only
  // the identity fixes the exponent tuple.
  const FiniteTorus& T = *torus;
  int k = T.components();
  long q = T.q();

  // orbit of each exponent under e -> q e mod M, as a sorted vector (the
  // rotation part is transitive on the orbit, so two components can be
  // matched by some rotation iff their orbits agree)
  std::vector<std::vector<long>> orbit(k);
  std::vector<long> stab(k, 0); // orbit rotations fixing e_i, i.e. M_i-order / orbit size
  for (int i = 0; i < k; ++i) {
    long M = T.component_order(i);
    long e = exponents[i];
    long x = e;
    do {
      orbit[i].push_back(x);
      x = (x * q) % M;
    } while (x != e);
    std::sort(orbit[i].begin(), orbit[i].end());
    stab[i] = T.cycle_type()[i] - static_cast<long>(orbit[i].size());
  }

  // a nontrivial rotation on a single component fixes e_i iff the q-orbit of
  // e_i is shorter than the cycle length
  for (int i = 0; i < k; ++i)
    if (stab[i] != 0) return false;

  // a transposition of two equal-length components composed with a rotation
  // fixes the tuple iff the orbits coincide
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (T.cycle_type()[i] == T.cycle_type()[j] && orbit[i] == orbit[j]) return false;

  return true;
}

GammaValue torus_gamma(const FiniteTorus& torus, const FiniteTorusCharacter& theta,
                       const AdditiveCharacter& psi) {
  if (theta.torus != &torus)
    throw std::invalid_argument("torus gamma: character belongs to a different torus");
  if (psi.q != torus.q())
    throw std::invalid_argument("torus gamma: additive character over a different base field");

  int k = torus.components();
  long p = torus.p();
  int n = torus.rank();

  // conductor: zeta_p from psi, zeta_{M_i} from every component where theta
  // is nontrivial
  long C = p;
  for (int i = 0; i < k; ++i)
    if (theta.exponents[i] != 0) C = std::lcm(C, torus.component_order(i));

  // per-component tables psi(Tr(g_i^a)) as exponents of zeta_p
  std::vector<std::vector<long>> psi_exp(k);
  for (int i = 0; i < k; ++i) {
    long M = torus.component_order(i);
    psi_exp[i].resize(M);
    FiniteFieldElement x = torus.ambient().one();
    const FiniteFieldElement& g = torus.component_generator(i);
    for (long a = 0; a < M; ++a) {
      psi_exp[i][a] = psi.exponent_at(torus.trace_component(i, x));
      x = x * g;
    }
  }

  // accumulate the full sum as integer multiplicities of zeta_C powers, then
  // build one cyclotomic number at the end
  std::vector<BigRational> raw(C, BigRational(0));
  std::vector<long> a(k, 0);
  long Cp = C / p;
  std::vector<long> step(k);
  for (int i = 0; i < k; ++i)
    step[i] = theta.exponents[i] == 0
                  ? 0
                  : (C / torus.component_order(i)) * theta.exponents[i] % C;
  while (true) {
    long pos = 0;
    for (int i = 0; i < k; ++i) {
      pos += Cp * psi_exp[i][a[i]] + step[i] * a[i];
      pos %= C;
    }
    raw[pos] += BigRational(1);
    int i = 0;
    while (i < k) {
      if (++a[i] < torus.component_order(i)) break;
      a[i] = 0;
      ++i;
    }
    if (i == k) break;
  }

  GammaValue out;
  out.q = torus.q();
  out.q_half_power = -n;
  out.cyc = CyclotomicNumber::from_power_sums(C, std::move(raw));
  if ((n + torus.sign_length()) % 2 != 0) out.cyc = -out.cyc;
  return out;
}

} // namespace gammalift
