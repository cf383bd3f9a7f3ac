#include "gammalift/padic_chars.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gammalift {

namespace {

const double kTau = 6.28318530717958647692;

bool is_prime_long(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long mod_pow_long(long b, long e, long m) {
  long r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::complex<double> ipow(std::complex<double> z, long e) {
  if (e < 0) return 1.0 / ipow(z, -e);
  std::complex<double> r{1.0, 0.0};
  while (e > 0) {
    if (e & 1) r *= z;
    z *= z;
    e >>= 1;
  }
  return r;
}

void check_p(long p) {
  if (!is_prime_long(p)) throw std::domain_error("p-adic character: p must be prime");
}

} // namespace

long least_primitive_root(long p) {
  check_p(p);
  if (p == 2) return 1;
  std::vector<long> prime_divs;
  long m = p - 1;
  for (long d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      prime_divs.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) prime_divs.push_back(m);
  for (long g = 2; g < p; ++g) {
    bool ok = true;
    for (long d : prime_divs)
      if (mod_pow_long(g, (p - 1) / d, p) == 1) { ok = false; break; }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");
}

PAdicCharacter unramified_character(long p, std::complex<double> z) {
  check_p(p);
  if (std::abs(z) == 0.0)
    throw std::domain_error("p-adic character: value at the uniformizer must be nonzero");
  return PAdicCharacter{p, z, 0, 0};
}

PAdicCharacter ramified_character(long p, std::complex<double> z, long ram_exponent) {
  check_p(p);
  if (std::abs(z) == 0.0)
    throw std::domain_error("p-adic character: value at the uniformizer must be nonzero");
  long e = ram_exponent % (p - 1);
  if (e < 0) e += p - 1;
  if (e == 0) return PAdicCharacter{p, z, 0, 0};
  return PAdicCharacter{p, z, 1, e};
}

PAdicCharacter character_inverse(const PAdicCharacter& chi) {
  return ramified_character(chi.p, 1.0 / chi.z, -chi.ram_exponent);
}

PAdicCharacter compose_weight(const std::vector<PAdicCharacter>& theta,
                              const std::vector<long>& lambda) {
  if (theta.empty()) throw std::invalid_argument("compose_weight: empty character tuple");
  if (theta.size() != lambda.size())
    throw std::invalid_argument("compose_weight: weight length differs from the character tuple");
  long p = theta[0].p;
  std::complex<double> z{1.0, 0.0};
  long e = 0;
  for (size_t a = 0; a < theta.size(); ++a) {
    if (theta[a].p != p)
      throw std::invalid_argument("compose_weight: characters live over different primes");
    z *= ipow(theta[a].z, lambda[a]);
    e += lambda[a] * theta[a].ram_exponent;
  }
  return ramified_character(p, z, e);
}

std::complex<double> ramified_value(const PAdicCharacter& chi, long u) {
  long r = u % chi.p;
  if (r < 0) r += chi.p;
  if (r == 0) throw std::domain_error("ramified_value: argument is not a unit");
  if (chi.conductor == 0) return {1.0, 0.0};
  long g = least_primitive_root(chi.p);
  long t = 0, pw = 1;
  while (pw != r) { pw = pw * g % chi.p; ++t; }
  double ang = kTau * static_cast<double>(chi.ram_exponent * t % (chi.p - 1)) /
               static_cast<double>(chi.p - 1);
  return {std::cos(ang), std::sin(ang)};
}

std::complex<double> LocalLFactor::eval(std::complex<double> X) const {
  auto horner = [&](const std::vector<std::complex<double>>& c) {
    std::complex<double> v{0.0, 0.0};
    for (size_t i = c.size(); i-- > 0;) v = v * X + c[i];
    return v;
  };
  return horner(num) / horner(den);
}

LocalLFactor tate_L(const PAdicCharacter& chi) {
  LocalLFactor L;
  if (chi.conductor == 0) L.den = { {1.0, 0.0}, -chi.z };
  return L;
}

LocalLFactor l_factor_product(const LocalLFactor& a, const LocalLFactor& b) {
  auto mul = [](const std::vector<std::complex<double>>& x,
                const std::vector<std::complex<double>>& y) {
    std::vector<std::complex<double>> r(x.size() + y.size() - 1, {0.0, 0.0});
    for (size_t i = 0; i < x.size(); ++i)
      for (size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
    return r;
  };
  LocalLFactor r;
  r.num = mul(a.num, b.num);
  r.den = mul(a.den, b.den);
  return r;
}

LocalLFactor L_rho(const WeightList& rho, const std::vector<PAdicCharacter>& theta) {
  if (static_cast<int>(theta.size()) != rho.rank)
    throw std::invalid_argument("L_rho: character tuple length differs from the rank");
  LocalLFactor L;
  for (const auto& lam : rho.weights) L = l_factor_product(L, tate_L(compose_weight(theta, lam)));
  return L;
}

std::complex<double> tate_gamma(const PAdicCharacter& chi, std::complex<double> s) {
  double q = static_cast<double>(chi.p);
  std::complex<double> qs = std::exp(s * std::log(q));
  if (chi.conductor == 0) {
    std::complex<double> den = 1.0 - chi.z * (1.0 / qs);
    if (std::abs(den) < 1e-12)
      throw pole_error("tate_gamma: pole of the unramified factor at this s");
    std::complex<double> numr = 1.0 - (1.0 / chi.z) * qs / q;
    return numr / den;
  }
  std::complex<double> gauss{0.0, 0.0};
  long g = least_primitive_root(chi.p);
  long pw = 1;
  for (long t = 0; t < chi.p - 1; ++t) {
    double ang = kTau * static_cast<double>(chi.ram_exponent * t % (chi.p - 1)) /
                     static_cast<double>(chi.p - 1) +
                 kTau * static_cast<double>(pw) / q;
    gauss += std::complex<double>(std::cos(ang), std::sin(ang));
    pw = pw * g % chi.p;
  }
  return gauss * (1.0 / chi.z) * qs * std::pow(q, kTateEpsNormalization);
}

std::complex<double> gamma_rho_torus(const WeightList& rho,
                                     const std::vector<PAdicCharacter>& theta,
                                     std::complex<double> s) {
  std::complex<double> g{1.0, 0.0};
  for (size_t i = 0; i < rho.weights.size(); ++i) {
    try {
      g *= tate_gamma(compose_weight(theta, rho.weights[i]), s);
    } catch (const pole_error&) {
      throw pole_error("gamma_rho_torus: pole in factor " + std::to_string(i));
    }
  }
  return g;
}

std::vector<std::complex<double>> unramified_satake_lift(
    const WeightList& rho, const std::vector<PAdicCharacter>& theta) {
  for (const auto& chi : theta) {
    if (chi.conductor != 0)
      throw std::domain_error("unramified_satake_lift: ramified coordinate character");
    if (std::abs(chi.z) == 0.0)
      throw std::domain_error("unramified_satake_lift: zero Satake parameter");
  }
  std::vector<std::complex<double>> lift;
  lift.reserve(rho.weights.size());
  for (const auto& lam : rho.weights) lift.push_back(compose_weight(theta, lam).z);
  std::sort(lift.begin(), lift.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return lift;
}

std::vector<PAdicCharacter> torus_lifting_data(
    const WeightList& rho, const std::vector<PAdicCharacter>& theta) {
  std::vector<PAdicCharacter> chars;
  chars.reserve(rho.weights.size());
  for (const auto& lam : rho.weights) chars.push_back(compose_weight(theta, lam));
  std::stable_sort(chars.begin(), chars.end(),
                   [](const PAdicCharacter& a, const PAdicCharacter& b) {
                     return std::abs(a.z) < std::abs(b.z);
                   });
  return chars;
}

} // namespace gammalift
