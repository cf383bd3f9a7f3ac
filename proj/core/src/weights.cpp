#include "gammalift/weights.hpp"

#include <stdexcept>

namespace gammalift {

namespace {

// reduced row echelon form over the rationals; returns pivot columns
std::vector<int> rref(std::vector<std::vector<BigRational>>& rows) {
  std::vector<int> pivots;
  size_t r = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t sel = r;
    while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    BigRational inv = BigRational(1) / rows[r][c];
    for (size_t j = c; j < cols; ++j) rows[r][j] = rows[r][j] * inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      BigRational f = rows[i][c];
      for (size_t j = c; j < cols; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

} // namespace

std::optional<std::vector<BigRational>> solve_sigma(
    int rank, const std::vector<std::vector<long>>& weights) {
  // augmented system [A | 1]; free variables are set to zero
  std::vector<std::vector<BigRational>> aug;
  for (const auto& lam : weights) {
    std::vector<BigRational> row;
    for (long x : lam) row.push_back(BigRational(x));
    row.push_back(BigRational(1));
    aug.push_back(std::move(row));
  }
  auto pivots = rref(aug);
  std::vector<BigRational> sigma(rank, BigRational(0));
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == rank) return std::nullopt; // row (0 ... 0 | 1): inconsistent
    sigma[pivots[r]] = aug[r][rank];
  }
  return sigma;
}

WeightList make_weight_list(int rank, std::vector<std::vector<long>> weights) {
  if (rank < 1) throw std::invalid_argument("weight list: rank must be positive");
  for (const auto& lam : weights)
    if (static_cast<int>(lam.size()) != rank)
      throw std::invalid_argument("weight list: tuple length differs from rank");
  WeightList rho;
  rho.rank = rank;
  rho.weights = std::move(weights);
  rho.sigma = solve_sigma(rank, rho.weights);
  return rho;
}

bool is_admissible(const WeightList& rho) {
  if (rho.sigma) return true;
  return solve_sigma(rho.rank, rho.weights).has_value();
}

bool is_faithful(const WeightList& rho) {
  std::vector<std::vector<BigRational>> m;
  for (const auto& lam : rho.weights) {
    std::vector<BigRational> row;
    for (long x : lam) row.push_back(BigRational(x));
    m.push_back(std::move(row));
  }
  return static_cast<int>(rref(m).size()) == rho.rank;
}

std::optional<std::vector<BigRational>> solve_positive_witness(const WeightList& rho) {
  auto all_positive = [&](const std::vector<BigRational>& h) {
    for (const auto& lam : rho.weights)
      if (!(BigRational(0) < weight_pairing(lam, h))) return false;
    return true;
  };
  if (rho.sigma && all_positive(*rho.sigma)) return rho.sigma;

  // least squares: solve A^T A h = A^T 1, free variables zero
  int r = rho.rank;
  std::vector<std::vector<BigRational>> aug(r, std::vector<BigRational>(r + 1, BigRational(0)));
  for (const auto& lam : rho.weights)
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) aug[i][j] += BigRational(lam[i]) * BigRational(lam[j]);
      aug[i][r] += BigRational(lam[i]);
    }
  auto pivots = rref(aug);
  bool consistent = true;
  std::vector<BigRational> h(r, BigRational(0));
  for (size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] == r) { consistent = false; break; }
    h[pivots[k]] = aug[k][r];
  }
  if (consistent && all_positive(h)) return h;

  std::vector<BigRational> s(r, BigRational(0));
  for (const auto& lam : rho.weights)
    for (int i = 0; i < r; ++i) s[i] += BigRational(lam[i]);
  if (all_positive(s)) return s;
  return std::nullopt;
}

BigRational weight_pairing(const std::vector<long>& lambda,
                           const std::vector<BigRational>& sigma) {
  if (lambda.size() != sigma.size())
    throw std::invalid_argument("weight pairing: length mismatch");
  BigRational acc(0);
  for (size_t i = 0; i < lambda.size(); ++i) acc += BigRational(lambda[i]) * sigma[i];
  return acc;
}

} // namespace gammalift
