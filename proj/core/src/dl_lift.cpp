#include "gammalift/dl_lift.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gammalift {

namespace {

long norm_mod(long x, long m) { return ((x % m) + m) % m; }

// cycles ordered by least moved index, each listed from its least element
std::vector<std::vector<int>> cycles_of(const std::vector<int>& w) {
  int n = static_cast<int>(w.size());
  std::vector<bool> seen(w.size(), false);
  std::vector<int> check(w.begin(), w.end());
  std::sort(check.begin(), check.end());
  for (int i = 0; i < n; ++i)
    if (check[i] != i) throw std::invalid_argument("weyl element: not a permutation");
  std::vector<std::vector<int>> cycles;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    int j = i;
    do {
      seen[j] = true;
      cyc.push_back(j);
      j = w[j];
    } while (j != i);
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

std::vector<long> weight_image(const std::vector<long>& lam, const std::vector<int>& w) {
  std::vector<long> out(lam.size());
  for (size_t a = 0; a < lam.size(); ++a) out[w[a]] = lam[a];
  return out;
}

} // namespace

std::vector<CyclotomicNumber> dl_virtual_character(const CharacterTable& table,
                                                   const FiniteTorusCharacter& theta) {
  if (table.n != 2) throw std::invalid_argument("virtual character: table is not a GL(2) table");
  const FiniteTorus& T = *theta.torus;
  if (T.q() != table.q) throw std::invalid_argument("virtual character: q mismatch");
  long q = table.q;
  long M = q * q - 1;
  bool split = T.cycle_type() == std::vector<int>{1, 1};
  if (!split && T.cycle_type() != std::vector<int>{2})
    throw std::invalid_argument("virtual character: torus is not a GL(2) maximal torus");

  std::vector<CyclotomicNumber> row;
  for (const auto& c : table.classes) {
    if (split) {
      long e1 = theta.exponents[0], e2 = theta.exponents[1];
      switch (c.kind) {
        case ClassKind::Central:
          row.push_back(CyclotomicNumber::root_of_unity(q - 1, (e1 + e2) * c.params[0])
                            .scaled(BigRational(q + 1)));
          break;
        case ClassKind::Unipotent:
          row.push_back(CyclotomicNumber::root_of_unity(q - 1, (e1 + e2) * c.params[0]));
          break;
        case ClassKind::Split:
          row.push_back(
              CyclotomicNumber::root_of_unity(q - 1, e1 * c.params[0] + e2 * c.params[1]) +
              CyclotomicNumber::root_of_unity(q - 1, e1 * c.params[1] + e2 * c.params[0]));
          break;
        case ClassKind::Elliptic:
          row.push_back(CyclotomicNumber(0));
          break;
        default:
          throw std::invalid_argument("virtual character: unexpected class kind");
      }
    } else {
      long e = theta.exponents[0];
      switch (c.kind) {
        case ClassKind::Central:
          row.push_back(CyclotomicNumber::root_of_unity(M, e * (q + 1) * c.params[0])
                            .scaled(BigRational(1 - q)));
          break;
        case ClassKind::Unipotent:
          row.push_back(CyclotomicNumber::root_of_unity(M, e * (q + 1) * c.params[0]));
          break;
        case ClassKind::Split:
          row.push_back(CyclotomicNumber(0));
          break;
        case ClassKind::Elliptic:
          row.push_back(CyclotomicNumber::root_of_unity(M, e * c.params[0]) +
                        CyclotomicNumber::root_of_unity(M, e * q * c.params[0]));
          break;
        default:
          throw std::invalid_argument("virtual character: unexpected class kind");
      }
    }
  }
  return row;
}

DLLabel dl_constituents_gl2(const CharacterTable& table, const FiniteTorusCharacter& theta) {
  const FiniteTorus& T = *theta.torus;
  long q = table.q;
  DLLabel label;
  label.w_cycle_type = T.cycle_type();
  label.theta_exponents = theta.exponents;

  bool split = T.cycle_type() == std::vector<int>{1, 1};
  if (split) {
    long e1 = norm_mod(theta.exponents[0], q - 1), e2 = norm_mod(theta.exponents[1], q - 1);
    if (e1 != e2) {
      label.constituents.push_back({table.irrep_index(IrrepKind::PrincipalSeries, {e1, e2}), 1});
    } else {
      label.constituents.push_back({table.irrep_index(IrrepKind::Linear, {e1}), 1});
      label.constituents.push_back({table.irrep_index(IrrepKind::SteinbergTwist, {e1}), 1});
    }
  } else {
    long M = q * q - 1;
    long e = norm_mod(theta.exponents[0], M);
    if (e % (q + 1) != 0) {
      label.constituents.push_back({table.irrep_index(IrrepKind::Cuspidal, {e}), -1});
    } else {
      long a = e / (q + 1);
      label.constituents.push_back({table.irrep_index(IrrepKind::Linear, {a}), 1});
      label.constituents.push_back({table.irrep_index(IrrepKind::SteinbergTwist, {a}), -1});
    }
  }

  auto expected = dl_virtual_character(table, theta);
  for (size_t c = 0; c < table.classes.size(); ++c) {
    CyclotomicNumber acc(0);
    for (const auto& [idx, mult] : label.constituents) {
      if (idx < 0) throw std::logic_error("constituents: irreducible not found in the table");
      acc += table.values[idx][c].scaled(BigRational(mult));
    }
    if (!(acc == expected[c]))
      throw std::logic_error("constituents: signed character sum differs from the virtual character");
  }
  return label;
}

FiniteMainReport verify_finite_main(long q, long psi_shift) {
  auto table = gl2_character_table(q);
  AdditiveCharacter psi(q, psi_shift);
  FiniteMainReport report;
  report.q = q;

  auto run = [&](const FiniteTorus& torus, const FiniteTorusCharacter& theta) {
    auto label = dl_constituents_gl2(table, theta);
    auto gt = torus_gamma(torus, theta, psi);
    for (const auto& [idx, mult] : label.constituents) {
      FiniteMainCheck chk;
      chk.w_cycle_type = label.w_cycle_type;
      chk.theta_exponents = label.theta_exponents;
      chk.constituent = table.irreps[idx].label;
      chk.gamma_group = group_gamma(table, idx, psi);
      chk.gamma_torus = gt;
      chk.pass = (chk.gamma_group == chk.gamma_torus);
      if (!chk.pass) ++report.failure_count;
      report.checks.push_back(std::move(chk));
    }
  };

  FiniteTorus split(q, {1, 1}, 2);
  for (long e1 = 0; e1 < q - 1; ++e1)
    for (long e2 = e1; e2 < q - 1; ++e2) run(split, FiniteTorusCharacter(split, {e1, e2}));

  FiniteTorus cox(q, {2});
  long M = q * q - 1;
  for (long e = 0; e < M; ++e) {
    if (e * q % M < e) continue; // orbit representative under e ~ qe
    run(cox, FiniteTorusCharacter(cox, {e}));
  }
  return report;
}

std::vector<int> lift_weyl_image(const WeightList& rho, const std::vector<int>& w) {
  if (static_cast<int>(w.size()) != rho.rank)
    throw std::invalid_argument("weyl lift: permutation size differs from the rank");
  cycles_of(w); // validates that w is a permutation
  int n = rho.n();
  std::vector<int> lift(n, -1);
  std::vector<bool> used(n, false);
  for (int i = 0; i < n; ++i) {
    auto target = weight_image(rho.weights[i], w);
    int pick = -1;
    for (int j = 0; j < n && pick < 0; ++j)
      if (!used[j] && rho.weights[j] == target) pick = j;
    if (pick < 0)
      throw std::domain_error("weyl lift: the element does not preserve the weight multiset");
    used[pick] = true;
    lift[i] = pick;
  }
  return lift;
}

GammaValue gamma_rho_finite(const WeightList& rho, const FiniteTorusCharacter& theta,
                            const std::vector<int>& w, const AdditiveCharacter& psi,
                            const std::vector<int>* lift) {
  const FiniteTorus& Tw = *theta.torus;
  long q = Tw.q();
  auto wcyc = cycles_of(w);
  {
    std::vector<int> lengths;
    for (const auto& c : wcyc) lengths.push_back(static_cast<int>(c.size()));
    if (Tw.cycle_type() != lengths)
      throw std::invalid_argument(
          "weight-map gamma: torus cycle type does not match the Weyl element");
  }

  std::vector<int> wp = lift ? *lift : lift_weyl_image(rho, w);
  if (lift) {
    if (static_cast<int>(wp.size()) != rho.n())
      throw std::logic_error("weight-map gamma: lift size differs from the weight count");
    cycles_of(wp); // validates permutation
    for (int i = 0; i < rho.n(); ++i)
      if (rho.weights[wp[i]] != weight_image(rho.weights[i], w))
        throw std::logic_error("weight-map gamma: supplied lift is not equivariant");
  }

  auto pcyc = cycles_of(wp);
  std::vector<int> rho_cycles;
  for (const auto& c : pcyc) rho_cycles.push_back(static_cast<int>(c.size()));

  // transported exponents: contribution e_k * m_k per w-cycle k, where the
  // cycle-j coordinates are y^{q^t} and m_k is the exponent of the image
  // coordinate at the least index of cycle k
  std::vector<long> exps;
  for (const auto& cyc : pcyc) {
    int cj = static_cast<int>(cyc.size());
    long Nj = 1;
    for (int t = 0; t < cj; ++t) Nj *= q;
    Nj -= 1;
    long E = 0;
    for (size_t k = 0; k < wcyc.size(); ++k) {
      int bk = static_cast<int>(wcyc[k].size());
      long Nk = 1;
      for (int t = 0; t < bk; ++t) Nk *= q;
      Nk -= 1;
      long a0 = wcyc[k][0];
      long m = 0, qt = 1;
      for (int t = 0; t < cj; ++t) {
        m = (m + qt % Nj * norm_mod(rho.weights[cyc[t]][a0], Nj)) % Nj;
        qt = qt * q % Nj;
      }
      if (static_cast<long long>(m) * Nk % Nj != 0)
        throw std::logic_error("weight-map gamma: image coordinate leaves its component field");
      E = (E + norm_mod(theta.exponents[k], Nk) * m) % Nj;
    }
    exps.push_back(E);
  }

  FiniteTorus Trho(q, rho_cycles);
  return torus_gamma(Trho, FiniteTorusCharacter(Trho, exps), psi);
}

} // namespace gammalift
