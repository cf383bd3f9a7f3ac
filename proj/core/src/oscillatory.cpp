#include "gammalift/oscillatory.hpp"

#include <cmath>
#include <stdexcept>

namespace gammalift {

namespace {

const double kTau = 6.28318530717958647692;

// Average over units u of (Z/p^K)^* of psi(p^v u) chi_ram(u), where K is
// exactly the level resolving both the phase (period p^-v for v < 0) and the
// unit character (period p). For K >= 2 the average vanishes identically:
// writing u = u0 (1 + p w) makes the inner w-sum a full geometric cycle
// sum_{w mod p^(K-1)} exp(2 pi i u0 w / p^(K-1)) = 0. That regrouping is
// applied exactly; floating enumeration of the cancelling phases would leave
// noise that the q^(s|v|) shell prefactor amplifies. The surviving shells
// (K <= 1) are enumerated honestly.
std::complex<double> shell_unit_average(const PAdicCharacter& chi, long v, int unit_level) {
  long p = chi.p;
  int K = static_cast<int>(v < 0 ? -v : 0);
  if (chi.conductor > 0 && K < 1) K = 1;
  if (K == 0) return {1.0, 0.0}; // psi trivial on Z_p, chi_ram trivial
  if (K > unit_level)
    throw std::invalid_argument("oscillatory_oracle: unit_level too small for the radius");
  if (K >= 2) return {0.0, 0.0};
  std::complex<double> acc{0.0, 0.0};
  for (long u = 1; u < p; ++u) {
    double ang = v < 0 ? kTau * static_cast<double>(u) / static_cast<double>(p) : 0.0;
    std::complex<double> term{std::cos(ang), std::sin(ang)};
    if (chi.conductor > 0) term *= ramified_value(chi, u);
    acc += term;
  }
  return acc / static_cast<double>(p - 1);
}

} // namespace

std::complex<double> oscillatory_oracle(const WeightList& rho,
                                        const std::vector<PAdicCharacter>& theta,
                                        std::complex<double> s,
                                        const OscillatoryParams& params) {
  if (theta.empty()) throw std::invalid_argument("oscillatory_oracle: empty character tuple");
  long p = theta[0].p;
  double q = static_cast<double>(p);
  int n = rho.n();
  std::vector<PAdicCharacter> chi;
  chi.reserve(n);
  for (const auto& lam : rho.weights) chi.push_back(compose_weight(theta, lam));

  std::complex<double> qs = std::exp(s * std::log(q));
  for (int i = 0; i < n; ++i) {
    if (std::abs(chi[i].z / qs) >= 1.0 - 1e-9)
      throw std::domain_error("oscillatory_oracle: sum diverges, |z q^-s| >= 1 in factor " +
                              std::to_string(i));
  }

  int r = params.radius;
  // The radius caps |t_i| <= q^r, so v_i >= -r; the small-|t| side is a
  // convergent geometric tail followed until it drops below 1e-12.
  std::vector<long> vmax(n);
  double cells = 1.0;
  for (int i = 0; i < n; ++i) {
    double ui = std::abs(chi[i].z) / std::exp(s.real() * std::log(q));
    long V = r;
    double tail = std::pow(ui, static_cast<double>(V + 1)) / (1.0 - ui);
    while (tail >= 1e-12 && V < 100000) { tail *= ui; ++V; }
    if (tail >= 1e-12)
      throw std::domain_error("oscillatory_oracle: sum converges too slowly at this s");
    vmax[i] = V;
    cells *= static_cast<double>(V + r + 1);
  }
  if (cells > 3e7)
    throw std::domain_error("oscillatory_oracle: truncation box too large at this s");

  // Per-coordinate shell factors: value of chi_i on the shell of valuation v
  // times the shell mass (1 - 1/q) times the unit average.
  std::vector<std::vector<std::complex<double>>> shell(n);
  for (int i = 0; i < n; ++i) {
    shell[i].resize(vmax[i] + r + 1);
    for (long v = -r; v <= vmax[i]; ++v) {
      std::complex<double> zv{1.0, 0.0};
      for (long t = 0; t < (v < 0 ? -v : v); ++t) zv *= (v < 0 ? 1.0 / chi[i].z : chi[i].z);
      std::complex<double> qsv = std::exp(-s * static_cast<double>(v) * std::log(q));
      shell[i][v + r] = zv * qsv * (1.0 - 1.0 / q) *
                        shell_unit_average(chi[i], v, params.unit_level);
    }
  }

  std::complex<double> total{0.0, 0.0};
  std::vector<long> v(n, -r);
  for (;;) {
    std::complex<double> term{1.0, 0.0};
    for (int i = 0; i < n; ++i) term *= shell[i][v[i] + r];
    total += term;
    int i = n - 1;
    while (i >= 0 && v[i] == vmax[i]) { v[i] = -r; --i; }
    if (i < 0) break;
    ++v[i];
  }
  return total;
}

} // namespace gammalift
