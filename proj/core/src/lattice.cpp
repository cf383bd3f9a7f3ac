#include "gammalift/lattice.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace gammalift {

namespace {

using Laurent = std::map<std::vector<long>, QSqrt>;
using Denominator = std::map<std::vector<long>, int>;

void add_term(Laurent& L, const std::vector<long>& e, const QSqrt& c) {
  if (c.is_zero()) return;
  auto it = L.find(e);
  if (it == L.end()) {
    L.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) L.erase(it);
}

// multiply by (c0 + c1 z^mu)
Laurent mul_binomial(const Laurent& L, const std::vector<long>& mu, const QSqrt& c0,
                     const QSqrt& c1) {
  Laurent out;
  for (const auto& [e, c] : L) {
    add_term(out, e, c * c0);
    std::vector<long> shifted = e;
    for (size_t i = 0; i < shifted.size(); ++i) shifted[i] += mu[i];
    add_term(out, shifted, c * c1);
  }
  return out;
}

// Exact division by (1 - z^mu). The support splits into cosets of Z mu; on a
// coset the terms form a one-variable Laurent polynomial f(t), t = z^mu, and
// divisibility by 1 - t means f(1) = 0, with quotient given by prefix sums.
std::optional<Laurent> divide_one_minus(const Laurent& N, const std::vector<long>& mu) {
  int d = -1;
  for (size_t i = 0; i < mu.size(); ++i)
    if (mu[i] != 0) {
      d = static_cast<int>(i);
      break;
    }
  if (d < 0) throw std::invalid_argument("mellin image: zero denominator direction");

  std::map<std::vector<long>, std::map<long, QSqrt>> cosets;
  for (const auto& [e, c] : N) {
    long k = e[d] / mu[d];
    if (e[d] % mu[d] != 0 && (e[d] % mu[d] < 0) != (mu[d] < 0)) --k; // floor division
    std::vector<long> rep = e;
    for (size_t i = 0; i < rep.size(); ++i) rep[i] -= k * mu[i];
    cosets[rep][k] = c;
  }
  Laurent quotient;
  for (const auto& [rep, f] : cosets) {
    QSqrt total;
    for (const auto& [k, c] : f) total += c;
    if (!total.is_zero()) return std::nullopt;
    QSqrt prefix;
    long prev = 0;
    bool first = true;
    for (const auto& [k, c] : f) {
      if (!first && !prefix.is_zero())
        for (long j = prev; j < k; ++j) {
          std::vector<long> e = rep;
          for (size_t i = 0; i < e.size(); ++i) e[i] += j * mu[i];
          add_term(quotient, e, prefix);
        }
      prefix += c;
      prev = k;
      first = false;
    }
    // after the last term the prefix is zero, so nothing extends past it
  }
  return quotient;
}

// cancel every denominator factor that divides the numerator
void factor_reduce(Laurent& N, Denominator& den) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto& [mu, mult] : den) {
      while (mult > 0) {
        auto q = divide_one_minus(N, mu);
        if (!q) break;
        N = std::move(*q);
        --mult;
        progress = true;
      }
    }
    for (auto it = den.begin(); it != den.end();)
      it = it->second == 0 ? den.erase(it) : std::next(it);
  }
}

std::vector<BigRational> require_sigma(const WeightList& rho, const char* who) {
  if (!rho.sigma)
    throw std::domain_error(std::string(who) + ": the weight list has no sigma witness");
  return *rho.sigma;
}

} // namespace

LatticeFunction make_plain_function(int rank,
                                    std::vector<std::pair<std::vector<long>, QSqrt>> points) {
  LatticeFunction phi;
  phi.rank = rank;
  phi.tail = false;
  for (const auto& [mu, c] : points) {
    if (static_cast<int>(mu.size()) != rank)
      throw std::invalid_argument("lattice function: point length differs from rank");
    (void)c;
  }
  phi.points = std::move(points);
  return phi;
}

LatticeFunction make_tail_function(const WeightList& rho,
                                   std::vector<std::pair<std::vector<long>, QSqrt>> points) {
  if (!solve_positive_witness(rho))
    throw std::domain_error("lattice function: tail mode needs a pointed cone");
  LatticeFunction phi;
  phi.rank = rho.rank;
  phi.tail = true;
  phi.rho = rho;
  for (const auto& [mu, c] : points) {
    if (static_cast<int>(mu.size()) != rho.rank)
      throw std::invalid_argument("lattice function: point length differs from rank");
    (void)c;
  }
  phi.points = std::move(points);
  return phi;
}

long partition_C_rho(const WeightList& rho, const std::vector<long>& mu) {
  if (static_cast<int>(mu.size()) != rho.rank)
    throw std::invalid_argument("partition count: point length differs from rank");
  auto h = solve_positive_witness(rho);
  if (!h) throw std::domain_error("partition count: cone is not pointed (no positive witness)");
  int n = rho.n();
  std::vector<BigRational> price(n);
  for (int i = 0; i < n; ++i) price[i] = weight_pairing(rho.weights[i], *h);
  BigRational budget = weight_pairing(mu, *h);

  long count = 0;
  std::vector<long> rem = mu;
  // depth-first over exponents a_i, pruned by the positive pairing
  auto rec = [&](auto&& self, int i, const BigRational& left) -> void {
    if (i == n) {
      for (long x : rem)
        if (x != 0) return;
      ++count;
      return;
    }
    BigRational spent(0);
    long a = 0;
    for (; spent <= left; ++a, spent += price[i]) {
      self(self, i + 1, left - spent);
      for (int t = 0; t < rho.rank; ++t) rem[t] -= rho.weights[i][t];
    }
    for (int t = 0; t < rho.rank; ++t) rem[t] += a * rho.weights[i][t];
  };
  if (!(budget < BigRational(0))) rec(rec, 0, budget);
  return count;
}

QSqrt evaluate_lattice(const LatticeFunction& phi, const std::vector<long>& mu) {
  if (static_cast<int>(mu.size()) != phi.rank)
    throw std::invalid_argument("lattice function: point length differs from rank");
  QSqrt value;
  for (const auto& [base, c] : phi.points) {
    if (!phi.tail) {
      if (base == mu) value += c;
      continue;
    }
    std::vector<long> diff(mu.size());
    for (size_t i = 0; i < mu.size(); ++i) diff[i] = mu[i] - base[i];
    long k = partition_C_rho(phi.rho, diff);
    if (k != 0) value += c * QSqrt(BigRational(k));
  }
  return value;
}

MellinImage mellin(const LatticeFunction& phi) {
  MellinImage M;
  M.rank = phi.rank;
  for (const auto& [mu, c] : phi.points) add_term(M.numerator, mu, c);
  if (phi.tail)
    for (const auto& lam : phi.rho.weights) ++M.denominator[lam];
  factor_reduce(M.numerator, M.denominator);
  return M;
}

bool schwartz_membership(const MellinImage& M, const WeightList& rho) {
  Laurent N = M.numerator;
  Denominator den = M.denominator;
  for (const auto& lam : rho.weights) {
    auto it = den.find(lam);
    if (it != den.end() && it->second > 0) {
      --it->second;
      for (auto& [e, c] : N) c = -c;
    } else {
      N = mul_binomial(N, lam, QSqrt(BigRational(-1)), QSqrt(BigRational(1)));
    }
  }
  factor_reduce(N, den);
  return den.empty();
}

MellinImage fourier_mellin(const MellinImage& M, const WeightList& rho, long q, int shift) {
  auto sigma = require_sigma(rho, "fourier");
  if (q < 2) throw std::invalid_argument("fourier: q must be a prime power cardinality");

  // P = prod_i (z^{lambda_i} - 1) * M must be a Laurent polynomial.
  Laurent P = M.numerator;
  Denominator den = M.denominator;
  for (const auto& lam : rho.weights) {
    auto it = den.find(lam);
    if (it != den.end() && it->second > 0) {
      --it->second;
      for (auto& [e, c] : P) c = -c;
    } else {
      P = mul_binomial(P, lam, QSqrt(BigRational(-1)), QSqrt(BigRational(1)));
    }
  }
  factor_reduce(P, den);
  if (!den.empty())
    throw std::domain_error("fourier: the image is not in the Schwartz space of this weight list");

  // M(F phi) = (-1)^n P(inverted z) / prod_i (1 - z^{lambda_i}), where the
  // inversion sends z^nu to q^(shift <nu, sigma>) z^-nu.
  MellinImage out;
  out.rank = M.rank;
  out.q = q;
  bool flip = rho.n() % 2 != 0;
  for (const auto& [e, c] : P) {
    BigRational pairing = weight_pairing(e, sigma);
    BigRational doubled = pairing * BigRational(2 * shift);
    if (!doubled.is_integer())
      throw std::domain_error("fourier: a monomial pairs with sigma outside half-integers");
    QSqrt scale = q_half_power(q, doubled.to_long());
    std::vector<long> inv(e.size());
    for (size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
    add_term(out.numerator, inv, (flip ? -c : c) * scale);
  }
  for (const auto& lam : rho.weights) ++out.denominator[lam];
  factor_reduce(out.numerator, out.denominator);
  return out;
}

LatticeFunction fourier_rho(const LatticeFunction& phi, long q, int shift) {
  if (!phi.tail)
    throw std::invalid_argument("fourier: expected a tail-mode lattice function");
  MellinImage F = fourier_mellin(mellin(phi), phi.rho, q, shift);

  // Restore the full denominator multiset of rho, then read off base points.
  Denominator want;
  for (const auto& lam : phi.rho.weights) ++want[lam];
  Laurent N = F.numerator;
  for (const auto& [mu, mult] : want) {
    int have = 0;
    auto it = F.denominator.find(mu);
    if (it != F.denominator.end()) have = it->second;
    if (have > mult)
      throw std::logic_error("fourier: image left the Schwartz space of the cone");
    for (int k = 0; k < mult - have; ++k)
      N = mul_binomial(N, mu, QSqrt(BigRational(1)), QSqrt(BigRational(-1)));
  }
  for (const auto& [mu, mult] : F.denominator)
    if (want.find(mu) == want.end() && mult > 0)
      throw std::logic_error("fourier: image has a denominator outside the cone data");

  LatticeFunction out;
  out.rank = phi.rank;
  out.tail = true;
  out.rho = phi.rho;
  for (const auto& [e, c] : N) out.points.emplace_back(e, c);
  return out;
}

} // namespace gammalift
