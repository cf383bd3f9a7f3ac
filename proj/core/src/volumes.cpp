#include "gammalift/volumes.hpp"

#include "gammalift/padic_chars.hpp"

#include <numeric>
#include <stdexcept>

namespace gammalift {

namespace {

long mul_mod(long a, long b, long mod) {
  return static_cast<long>((static_cast<__int128>(a) * b) % mod);
}

// Generator of the cyclic group (Z/p^level)^*.
long primitive_root_mod_power(long p, int level) {
  long g = least_primitive_root(p);
  if (level >= 2) {
    long p2 = p * p;
    long x = 1;
    for (long e = 0; e < p - 1; ++e) x = mul_mod(x, g, p2);
    if (x == 1) g += p;
  }
  return g;
}

long discrete_log(long u, long gen, long modulus, long order) {
  long x = 1;
  for (long d = 0; d < order; ++d) {
    if (x == u) return d;
    x = mul_mod(x, gen, modulus);
  }
  throw std::logic_error("unit has no discrete log");
}

BigRational inv_prime_power(long p, long e) {
  BigRational out(1);
  BigRational step(1, p);
  for (long i = 0; i < e; ++i) out = out * step;
  return out;
}

// Sum over (a_1..a_k), a_i >= 1, sum n_i a_i = v, of the density factors
// carried by coordinates 2..k.
BigRational splitting_sum(const std::vector<long>& n, const std::vector<long>& m,
                          long p, long v) {
  const int k = static_cast<int>(n.size());
  const BigRational shell(p - 1, p);
  BigRational total(0);
  std::vector<long> a(k, 1);
  auto rec = [&](auto&& self, int i, long left, const BigRational& acc) -> void {
    if (i + 1 == k) {
      if (left <= 0 || left % n[i] != 0) return;
      long ai = left / n[i];
      BigRational term = acc;
      if (i >= 1) term = term * inv_prime_power(p, ai * (1 + m[i - 1])) * shell;
      total = total + term;
      return;
    }
    long tail = 0;
    for (int j = i + 1; j < k; ++j) tail += n[j];
    for (long ai = 1; n[i] * ai + tail <= left; ++ai) {
      BigRational term = acc;
      if (i >= 1) term = term * inv_prime_power(p, ai * (1 + m[i - 1])) * shell;
      self(self, i + 1, left - n[i] * ai, term);
    }
  };
  rec(rec, 0, v, BigRational(1));
  return total;
}

long unit_class_count(const std::vector<long>& n, long p, long unit, int level) {
  long modulus = 1;
  for (int i = 0; i < level; ++i) modulus *= p;
  long order = (modulus / p) * (p - 1);
  long g = order;
  for (long ni : n) g = std::gcd(g, ni);
  long u = unit % modulus;
  if (u < 0) u += modulus;
  long gen = primitive_root_mod_power(p, level);
  long d = discrete_log(u, gen, modulus, order);
  return d % g == 0 ? g : 0;
}

} // namespace

BigRational monomial_fiber_volume(const std::vector<long>& n, const std::vector<long>& m,
                                  long p, long v, long unit, int level) {
  if (n.empty()) throw std::invalid_argument("need at least one exponent");
  if (m.size() + 1 != n.size())
    throw std::invalid_argument("need one density twist per coordinate past the first");
  for (long ni : n)
    if (ni < 1) throw std::invalid_argument("exponents must be positive");
  for (long mi : m)
    if (mi < 0) throw std::invalid_argument("density twists must be nonnegative");
  if (p == 2) throw std::domain_error("the unit group is not cyclic at p = 2");
  if (p < 3) throw std::invalid_argument("p must be an odd prime");
  for (long d = 3; d * d <= p; d += 2)
    if (p % d == 0) throw std::invalid_argument("p must be an odd prime");
  if (level < 1 || level > 8) throw std::invalid_argument("level must be in [1, 8]");
  if (unit % p == 0) throw std::invalid_argument("unit part must be prime to p");

  BigRational S = splitting_sum(n, m, p, v);
  if (S == BigRational(0)) return S;

  long c0 = unit_class_count(n, p, unit, level);
  long c1 = unit_class_count(n, p, unit, level + 1);
  if (c0 != c1)
    throw std::invalid_argument("unit level too small: the class count has not stabilized");
  return BigRational(c0) * S;
}

} // namespace gammalift
