#include "gammalift/satake.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace gammalift {

namespace {

using ZLaurent = std::map<std::vector<long>, RationalFunction>;

RationalFunction rf_rat(const BigRational& c) {
  return RationalFunction::constant(1, c);
}

RationalFunction rf_upow(long k) {
  MultivariatePolynomial m(1);
  m.set({static_cast<int>(k < 0 ? -k : k)}, BigRational(1));
  RationalFunction p(m);
  if (k >= 0) return p;
  return rf_rat(BigRational(1)) / p;
}

void add_term(ZLaurent& L, const std::vector<long>& e, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto it = L.find(e);
  if (it == L.end()) {
    L.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) L.erase(it);
}

// Divide by (1 - z^mu): group the support into cosets of Z*mu; divisible
// iff every coset's coefficients sum to zero, and the quotient along a
// coset is the running prefix sum.
std::optional<ZLaurent> divide_one_minus(const ZLaurent& N, const std::vector<long>& mu) {
  int d = -1;
  for (int t = 0; t < static_cast<int>(mu.size()); ++t)
    if (mu[t] != 0) { d = t; break; }
  if (d < 0) throw std::invalid_argument("division by a zero direction");

  std::map<std::vector<long>, std::map<long, RationalFunction>> cosets;
  for (const auto& [e, c] : N) {
    long k = e[d] / mu[d];
    if (e[d] % mu[d] != 0 && (e[d] % mu[d] < 0) != (mu[d] < 0)) --k;
    std::vector<long> rep(e.size());
    for (size_t t = 0; t < e.size(); ++t) rep[t] = e[t] - k * mu[t];
    cosets[rep][k] = c;
  }

  ZLaurent Q;
  for (const auto& [rep, line] : cosets) {
    RationalFunction prefix = rf_rat(BigRational(0));
    bool first = true;
    long prev = 0;
    for (const auto& [k, c] : line) {
      if (!first && !prefix.is_zero()) {
        for (long j = prev; j < k; ++j) {
          std::vector<long> e(rep.size());
          for (size_t t = 0; t < rep.size(); ++t) e[t] = rep[t] + j * mu[t];
          add_term(Q, e, prefix);
        }
      }
      prefix += c;
      prev = k;
      first = false;
    }
    if (!prefix.is_zero()) return std::nullopt;
  }
  return Q;
}

std::vector<long> permute_exponent(const std::vector<long>& e, const std::vector<int>& w) {
  std::vector<long> out(e.size());
  for (size_t a = 0; a < e.size(); ++a) out[w[a]] = e[a];
  return out;
}

int permutation_sign(const std::vector<int>& w) {
  int inv = 0;
  for (size_t a = 0; a < w.size(); ++a)
    for (size_t b = a + 1; b < w.size(); ++b)
      if (w[a] > w[b]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

long doubled_delta_pairing(const std::vector<long>& v, int rank) {
  long s = 0;
  for (int a = 0; a < rank; ++a) s += v[a] * (rank - 1 - 2 * a);
  return s;
}

} // namespace

std::map<std::vector<long>, RationalFunction> hall_littlewood(
    const std::vector<long>& lambda, int rank) {
  if (static_cast<int>(lambda.size()) != rank)
    throw std::invalid_argument("exponent length must match the rank");
  if (!std::is_sorted(lambda.rbegin(), lambda.rend()))
    throw std::invalid_argument("hall_littlewood needs weakly decreasing parts");

  const RationalFunction one = rf_rat(BigRational(1));
  const RationalFunction t = rf_upow(2);

  // B = z^lambda prod_{a<b} (z_a - t z_b)
  ZLaurent B;
  add_term(B, lambda, one);
  for (int a = 0; a < rank; ++a)
    for (int b = a + 1; b < rank; ++b) {
      ZLaurent next;
      for (const auto& [e, c] : B) {
        std::vector<long> ea = e, eb = e;
        ea[a] += 1;
        eb[b] += 1;
        add_term(next, ea, c);
        add_term(next, eb, -(t * c));
      }
      B = std::move(next);
    }

  // Signed Weyl sum of B.
  std::vector<int> w(rank);
  std::iota(w.begin(), w.end(), 0);
  ZLaurent A;
  do {
    int sgn = permutation_sign(w);
    for (const auto& [e, c] : B)
      add_term(A, permute_exponent(e, w), sgn > 0 ? c : -c);
  } while (std::next_permutation(w.begin(), w.end()));

  // Divide by the Vandermonde: (z_a - z_b) = -z_b (1 - z^{e_a - e_b}).
  for (int a = 0; a < rank; ++a)
    for (int b = a + 1; b < rank; ++b) {
      std::vector<long> mu(rank, 0);
      mu[a] = 1;
      mu[b] = -1;
      auto q = divide_one_minus(A, mu);
      if (!q) throw std::logic_error("alternating sum not divisible by the Vandermonde");
      ZLaurent shifted;
      for (const auto& [e, c] : *q) {
        std::vector<long> e2 = e;
        e2[b] -= 1;
        add_term(shifted, e2, -c);
      }
      A = std::move(shifted);
    }

  // Normalize by v_lambda(t) = prod over part values of prod_k (1-t^k)/(1-t).
  RationalFunction v = one;
  const RationalFunction denom = one - t;
  int run = 0;
  for (int a = 0; a < rank; ++a) {
    ++run;
    if (a + 1 == rank || lambda[a + 1] != lambda[a]) {
      for (int k = 2; k <= run; ++k) v *= (one - rf_upow(2 * k)) / denom;
      run = 0;
    }
  }
  ZLaurent P;
  for (const auto& [e, c] : A) add_term(P, e, c / v);

  auto lead = P.find(lambda);
  if (lead == P.end() || lead->second != one)
    throw std::logic_error("hall-littlewood normalization failed");
  return P;
}

SatakeExpansion satake_basic_function(const WeightList& rho, int max_degree) {
  if (rho.rank < 1 || rho.rank > 3)
    throw std::invalid_argument("satake expansion supports rank 1 to 3");
  if (max_degree < 0 || max_degree > 12)
    throw std::invalid_argument("satake expansion supports degrees up to 12");
  if (!rho.sigma.has_value())
    throw std::domain_error("satake expansion needs an admissible weight list");

  const int r = rho.rank;
  const int n = rho.n();
  const RationalFunction one = rf_rat(BigRational(1));

  SatakeExpansion E;
  E.rank = r;
  E.max_degree = max_degree;

  std::map<std::vector<long>, ZLaurent> hl_cache;
  std::vector<std::vector<int>> perms;
  {
    std::vector<int> w(r);
    std::iota(w.begin(), w.end(), 0);
    do perms.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
  }
  long factorial = static_cast<long>(perms.size());

  for (int deg = 0; deg <= max_degree; ++deg) {
    // Trace of the degree-th symmetric power at z_a q^{-delta_a}:
    // multisets of weights, each contributing z^nu u^{2<nu,delta>}.
    ZLaurent f;
    std::vector<int> counts(n, 0);
    auto emit = [&]() {
      std::vector<long> nu(r, 0);
      for (int i = 0; i < n; ++i)
        for (int a = 0; a < r; ++a) nu[a] += counts[i] * rho.weights[i][a];
      add_term(f, nu, rf_upow(doubled_delta_pairing(nu, r)));
    };
    auto rec = [&](auto&& self, int i, int left) -> void {
      if (i + 1 == n) {
        counts[i] = left;
        emit();
        return;
      }
      for (int c = 0; c <= left; ++c) {
        counts[i] = c;
        self(self, i + 1, left - c);
      }
    };
    rec(rec, 0, deg);

    ZLaurent F;
    for (const auto& w : perms)
      for (const auto& [e, c] : f) add_term(F, permute_exponent(e, w), c);
    for (auto& [e, c] : F) c = c / rf_rat(BigRational(factorial));
    if (F != f) E.symmetrized_differs = true;

    // Peel lex-maximal exponents; for a symmetric function these are
    // weakly decreasing, so the spherical basis is triangular here.
    ZLaurent R = F;
    while (!R.empty()) {
      auto it = std::prev(R.end());
      std::vector<long> lam = it->first;
      if (!std::is_sorted(lam.rbegin(), lam.rend())) {
        std::ostringstream os;
        os << "non-symmetric residual at degree " << deg << ", exponent";
        for (long x : lam) os << ' ' << x;
        throw std::logic_error(os.str());
      }
      long dd = doubled_delta_pairing(lam, r);
      RationalFunction c = it->second * rf_upow(dd);
      auto cached = hl_cache.find(lam);
      if (cached == hl_cache.end())
        cached = hl_cache.emplace(lam, hall_littlewood(lam, r)).first;
      RationalFunction scale = c * rf_upow(-dd);
      for (const auto& [e, pc] : cached->second) add_term(R, e, -(scale * pc));
      E.terms.push_back({deg, lam, c});
    }
  }
  return E;
}

RationalFunction satake_coefficient(const SatakeExpansion& E,
                                    const std::vector<long>& lambda) {
  RationalFunction total = RationalFunction::constant(1, BigRational(0));
  for (const auto& term : E.terms)
    if (term.lambda == lambda) total += term.value;
  return total;
}

} // namespace gammalift
