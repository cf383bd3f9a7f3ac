#include "gammalift/crystal.hpp"

#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

namespace gammalift {

namespace {

BigRational one_like(const BigRational&) { return BigRational(1); }
RationalFunction one_like(const RationalFunction& f) {
  return RationalFunction::constant(f.nvars(), BigRational(1));
}

BigRational safe_div(const BigRational& a, const BigRational& b) {
  if (b.is_zero()) throw pole_error("crystal: division by zero");
  return a / b;
}
RationalFunction safe_div(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw pole_error("crystal: division by the zero function");
  return a / b;
}

// unreduced polynomial fraction, used to differentiate the closed-form
// involution without gcd normalization
struct PolyFrac {
  MultivariatePolynomial num, den;
  bool is_zero() const { return num.is_zero(); }
};
PolyFrac operator*(const PolyFrac& a, const PolyFrac& b) {
  return {a.num * b.num, a.den * b.den};
}
PolyFrac operator+(const PolyFrac& a, const PolyFrac& b) {
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}
PolyFrac operator-(const PolyFrac& a, const PolyFrac& b) {
  return {a.num * b.den - b.num * a.den, a.den * b.den};
}
bool operator==(const PolyFrac& a, const PolyFrac& b) {
  return a.num * b.den == b.num * a.den;
}
PolyFrac one_like(const PolyFrac& f) {
  auto c = MultivariatePolynomial::constant(f.num.nvars(), BigRational(1));
  return {c, c};
}
PolyFrac safe_div(const PolyFrac& a, const PolyFrac& b) {
  if (b.num.is_zero()) throw pole_error("crystal: division by the zero function");
  return {a.num * b.den, a.den * b.num};
}

template <class E>
E product_of(const std::vector<E>& v) {
  E p = one_like(v.front());
  for (const E& x : v) p = p * x;
  return p;
}

template <class E>
E sum_of(const std::vector<E>& v) {
  E s = v.front();
  for (size_t i = 1; i < v.size(); ++i) s = s + v[i];
  return s;
}

// Delta_k = sum over j = 0..k-1 of (r1[0]..r1[j-1]) * (r2[j+1]..r2[k-1]),
// rows 0-based; exactly k terms, Delta_1 = 1.
template <class E>
E delta_impl(const std::vector<E>& r1, const std::vector<E>& r2, int k) {
  E total = one_like(r1.front());
  for (int j = 0; j < k; ++j) {
    E term = one_like(r1.front());
    for (int i = 0; i < j; ++i) term = term * r1[i];
    for (int i = j + 1; i < k; ++i) term = term * r2[i];
    if (j == 0) total = term;
    else total = total + term;
  }
  return total;
}

template <class E>
E eta_impl(const std::vector<E>& r1, const std::vector<E>& r2) {
  int n = static_cast<int>(r1.size());
  return safe_div(product_of(r1) - product_of(r2), delta_impl(r1, r2, n));
}

template <class E>
std::pair<std::vector<E>, std::vector<E>> tau_rows(const std::vector<E>& r1,
                                                   const std::vector<E>& r2) {
  int n = static_cast<int>(r1.size());
  E e = eta_impl(r1, r2);
  std::vector<E> N;
  N.push_back(one_like(r1.front()));
  E pi2 = one_like(r1.front());
  for (int k = 1; k <= n; ++k) {
    pi2 = pi2 * r2[k - 1];
    N.push_back(pi2 + delta_impl(r1, r2, k) * e);
  }
  std::vector<E> o1, o2;
  for (int k = 1; k <= n; ++k) {
    E b = safe_div(N[k], N[k - 1]);
    E a = safe_div(r1[k - 1] * r2[k - 1], b);
    o1.push_back(a);
    o2.push_back(b);
  }
  for (int k = 0; k < n; ++k)
    if (!(o1[k] * o2[k] == r1[k] * r2[k]))
      throw std::logic_error("tau_tworow: column product not preserved");
  if (!(product_of(o1) == product_of(r2)) || !(product_of(o2) == product_of(r1)))
    throw std::logic_error("tau_tworow: row products not swapped");
  if (!(sum_of(o1) + sum_of(o2) == sum_of(r1) + sum_of(r2)))
    throw std::logic_error("tau_tworow: entry sum not preserved");
  return {std::move(o1), std::move(o2)};
}

} // namespace

struct CrystalAccess {
  static CrystalPoint make(int m, int n, bool symbolic) { return CrystalPoint(m, n, symbolic); }
  static std::vector<BigRational>& num(CrystalPoint& t) { return t.num_; }
  static std::vector<RationalFunction>& fn(CrystalPoint& t) { return t.fn_; }
};

CrystalPoint CrystalPoint::numeric(const std::vector<std::vector<BigRational>>& entries) {
  int m = static_cast<int>(entries.size());
  if (m == 0) throw std::invalid_argument("crystal: empty matrix");
  int n = static_cast<int>(entries.front().size());
  CrystalPoint t(m, n, false);
  for (const auto& row : entries) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("crystal: ragged matrix");
    for (const auto& x : row) {
      if (x.is_zero()) throw std::invalid_argument("crystal: zero entry");
      t.num_.push_back(x);
    }
  }
  return t;
}

CrystalPoint CrystalPoint::symbolic(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("crystal: bad shape");
  CrystalPoint t(m, n, true);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      t.fn_.push_back(RationalFunction::variable(m * n, i * n + j));
  return t;
}

CrystalPoint CrystalPoint::symbolic_from(int m, int n, std::vector<RationalFunction> entries) {
  if (static_cast<int>(entries.size()) != m * n)
    throw std::invalid_argument("crystal: entry count mismatch");
  CrystalPoint t(m, n, true);
  t.fn_ = std::move(entries);
  return t;
}

const BigRational& CrystalPoint::at(int i, int j) const {
  if (symbolic_) throw std::logic_error("crystal: numeric access on symbolic point");
  return num_[i * n_ + j];
}

const RationalFunction& CrystalPoint::fn(int i, int j) const {
  if (!symbolic_) throw std::logic_error("crystal: symbolic access on numeric point");
  return fn_[i * n_ + j];
}

bool operator==(const CrystalPoint& a, const CrystalPoint& b) {
  return a.m_ == b.m_ && a.n_ == b.n_ && a.symbolic_ == b.symbolic_ &&
         a.num_ == b.num_ && a.fn_ == b.fn_;
}

std::string CrystalPoint::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m_; ++i) {
    if (i) os << ",";
    os << "[";
    for (int j = 0; j < n_; ++j) {
      if (j) os << ",";
      if (symbolic_) os << fn(i, j).str();
      else os << at(i, j).str();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

std::vector<BigRational> numeric_row(const CrystalPoint& t, int i) {
  std::vector<BigRational> row;
  for (int j = 0; j < t.cols(); ++j) row.push_back(t.at(i, j));
  return row;
}
std::vector<RationalFunction> symbolic_row(const CrystalPoint& t, int i) {
  std::vector<RationalFunction> row;
  for (int j = 0; j < t.cols(); ++j) row.push_back(t.fn(i, j));
  return row;
}

void require_tworow(const CrystalPoint& t) {
  if (t.rows() != 2) throw std::invalid_argument("crystal: two-row point required");
}

} // namespace

CrystalValue delta_k(const CrystalPoint& t, int k) {
  require_tworow(t);
  if (k < 1 || k > t.cols()) throw std::invalid_argument("crystal: k out of range");
  CrystalValue v;
  v.symbolic = t.is_symbolic();
  if (t.is_symbolic())
    v.fn = delta_impl(symbolic_row(t, 0), symbolic_row(t, 1), k);
  else
    v.num = delta_impl(numeric_row(t, 0), numeric_row(t, 1), k);
  return v;
}

CrystalValue eta(const CrystalPoint& t) {
  require_tworow(t);
  CrystalValue v;
  v.symbolic = t.is_symbolic();
  if (t.is_symbolic())
    v.fn = eta_impl(symbolic_row(t, 0), symbolic_row(t, 1));
  else
    v.num = eta_impl(numeric_row(t, 0), numeric_row(t, 1));
  return v;
}

CrystalPoint tau1(const CrystalPoint& t, int alpha) {
  if (alpha < 1 || alpha >= t.rows()) throw std::invalid_argument("crystal: alpha out of range");
  if (t.is_symbolic()) {
    auto rows = tau_rows(symbolic_row(t, alpha - 1), symbolic_row(t, alpha));
    CrystalPoint out = t;
    auto& flat = CrystalAccess::fn(out);
    for (int j = 0; j < t.cols(); ++j) {
      flat[(alpha - 1) * t.cols() + j] = rows.first[j];
      flat[alpha * t.cols() + j] = rows.second[j];
    }
    return out;
  }
  auto rows = tau_rows(numeric_row(t, alpha - 1), numeric_row(t, alpha));
  CrystalPoint out = t;
  auto& flat = CrystalAccess::num(out);
  for (int j = 0; j < t.cols(); ++j) {
    flat[(alpha - 1) * t.cols() + j] = rows.first[j];
    flat[alpha * t.cols() + j] = rows.second[j];
  }
  return out;
}

CrystalPoint tau_tworow(const CrystalPoint& t) {
  require_tworow(t);
  return tau1(t, 1);
}

CrystalPoint transpose(const CrystalPoint& t) {
  CrystalPoint out = CrystalAccess::make(t.cols(), t.rows(), t.is_symbolic());
  for (int j = 0; j < t.cols(); ++j)
    for (int i = 0; i < t.rows(); ++i) {
      if (t.is_symbolic()) CrystalAccess::fn(out).push_back(t.fn(i, j));
      else CrystalAccess::num(out).push_back(t.at(i, j));
    }
  return out;
}

CrystalPoint tau2(const CrystalPoint& t, int beta) {
  return transpose(tau1(transpose(t), beta));
}

std::vector<BigRational> row_products(const CrystalPoint& t) {
  std::vector<BigRational> out;
  for (int i = 0; i < t.rows(); ++i) out.push_back(product_of(numeric_row(t, i)));
  return out;
}

std::vector<BigRational> column_products(const CrystalPoint& t) {
  std::vector<BigRational> out;
  for (int j = 0; j < t.cols(); ++j) {
    BigRational p(1);
    for (int i = 0; i < t.rows(); ++i) p *= t.at(i, j);
    out.push_back(p);
  }
  return out;
}

BigRational entry_sum(const CrystalPoint& t) {
  BigRational s(0);
  for (int i = 0; i < t.rows(); ++i)
    for (int j = 0; j < t.cols(); ++j) s += t.at(i, j);
  return s;
}

namespace {

// cached symbolic derivative data of the two-row involution in 2n variables:
// per output entry the unreduced (num, den) and their partials
struct JacobianEntry {
  MultivariatePolynomial num, den;
  std::vector<MultivariatePolynomial> dnum, dden; // by variable
};

const std::vector<JacobianEntry>& jacobian_data(int n) {
  static std::map<int, std::vector<JacobianEntry>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  int nv = 2 * n;
  std::vector<PolyFrac> r1, r2;
  auto one = MultivariatePolynomial::constant(nv, BigRational(1));
  for (int j = 0; j < n; ++j) {
    r1.push_back({MultivariatePolynomial::variable(nv, j), one});
    r2.push_back({MultivariatePolynomial::variable(nv, n + j), one});
  }
  auto rows = tau_rows(r1, r2);
  std::vector<JacobianEntry> data;
  auto add = [&](const PolyFrac& f) {
    JacobianEntry e;
    e.num = f.num;
    e.den = f.den;
    for (int v = 0; v < nv; ++v) {
      e.dnum.push_back(f.num.derivative(v));
      e.dden.push_back(f.den.derivative(v));
    }
    data.push_back(std::move(e));
  };
  for (const auto& f : rows.first) add(f);
  for (const auto& f : rows.second) add(f);
  return cache.emplace(n, std::move(data)).first->second;
}

BigRational det_rational(std::vector<std::vector<BigRational>> a) {
  int n = static_cast<int>(a.size());
  BigRational det(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (!a[r][c].is_zero()) { piv = r; break; }
    if (piv < 0) return BigRational(0);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    BigRational inv = BigRational(1) / a[c][c];
    for (int r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      BigRational f = a[r][c] * inv;
      for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

} // namespace

BigRational jacobian_sign(const CrystalPoint& t) {
  require_tworow(t);
  if (t.is_symbolic()) throw std::invalid_argument("crystal: numeric point required");
  int n = t.cols();
  const auto& data = jacobian_data(n);
  std::vector<BigRational> pt;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < n; ++j) pt.push_back(t.at(i, j));
  std::vector<std::vector<BigRational>> jac;
  for (const auto& e : data) {
    BigRational dv = e.den.eval(pt);
    if (dv.is_zero()) throw pole_error("crystal: jacobian at a pole");
    BigRational nv = e.num.eval(pt);
    std::vector<BigRational> row;
    for (size_t v = 0; v < e.dnum.size(); ++v)
      row.push_back((e.dnum[v].eval(pt) * dv - nv * e.dden[v].eval(pt)) / (dv * dv));
    jac.push_back(std::move(row));
  }
  return det_rational(std::move(jac));
}

namespace {

CrystalPoint sample_point(std::mt19937_64& rng, int m, int n) {
  if (m * n > 90) throw std::invalid_argument("crystal: shape too large for distinct sampling");
  std::vector<bool> used(98, false);
  std::vector<std::vector<BigRational>> entries(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      long v;
      do {
        v = 2 + static_cast<long>(rng() % 96);
      } while (used[v]);
      used[v] = true;
      entries[i].push_back(BigRational(v));
    }
  return CrystalPoint::numeric(entries);
}

} // namespace

WeylActionReport verify_weyl_action(int m, int n, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("crystal: trials must be positive");
  WeylActionReport rep;
  rep.m = m;
  rep.n = n;
  rep.seed = seed;
  rep.trials = trials;
  std::mt19937_64 rng(seed);

  for (int trial = 0; trial < trials; ++trial) {
    for (int attempt = 0;; ++attempt) {
      if (attempt > 1000) throw std::logic_error("crystal: sampling failed to avoid poles");
      CrystalPoint t = sample_point(rng, m, n);
      WeylActionReport local;
      try {
        auto fail = [&](const std::string& what) {
          local.failures.push_back(what + " at " + t.str());
        };
        // involutivity of each generator
        for (int a = 1; a < m; ++a) {
          if (tau1(tau1(t, a), a) == t) ++local.involution;
          else fail("tau1 involution alpha=" + std::to_string(a));
        }
        for (int b = 1; b < n; ++b) {
          if (tau2(tau2(t, b), b) == t) ++local.involution;
          else fail("tau2 involution beta=" + std::to_string(b));
        }
        // braid and distant commutation within each family
        for (int a = 1; a + 1 < m; ++a) {
          if (tau1(tau1(tau1(t, a), a + 1), a) == tau1(tau1(tau1(t, a + 1), a), a + 1))
            ++local.braid;
          else fail("tau1 braid alpha=" + std::to_string(a));
        }
        for (int b = 1; b + 1 < n; ++b) {
          if (tau2(tau2(tau2(t, b), b + 1), b) == tau2(tau2(tau2(t, b + 1), b), b + 1))
            ++local.braid;
          else fail("tau2 braid beta=" + std::to_string(b));
        }
        for (int a = 1; a < m; ++a)
          for (int a2 = a + 2; a2 < m; ++a2) {
            if (tau1(tau1(t, a), a2) == tau1(tau1(t, a2), a)) ++local.braid;
            else fail("tau1 distant commutation");
          }
        for (int b = 1; b < n; ++b)
          for (int b2 = b + 2; b2 < n; ++b2) {
            if (tau2(tau2(t, b), b2) == tau2(tau2(t, b2), b)) ++local.braid;
            else fail("tau2 distant commutation");
          }
        // cross commutation between the two families
        for (int a = 1; a < m; ++a)
          for (int b = 1; b < n; ++b) {
            if (tau2(tau1(t, a), b) == tau1(tau2(t, b), a)) ++local.cross;
            else fail("cross commutation alpha=" + std::to_string(a) + " beta=" + std::to_string(b));
          }
        // entry-sum invariance
        BigRational s = entry_sum(t);
        for (int a = 1; a < m; ++a) {
          if (entry_sum(tau1(t, a)) == s) ++local.sum_invariance;
          else fail("tau1 entry sum alpha=" + std::to_string(a));
        }
        for (int b = 1; b < n; ++b) {
          if (entry_sum(tau2(t, b)) == s) ++local.sum_invariance;
          else fail("tau2 entry sum beta=" + std::to_string(b));
        }
        // product tuples: tau1 fixes column products and transposes the
        // adjacent row products; tau2 does the same with roles swapped
        auto rp = row_products(t);
        auto cp = column_products(t);
        for (int a = 1; a < m; ++a) {
          CrystalPoint u = tau1(t, a);
          auto rp2 = rp;
          std::swap(rp2[a - 1], rp2[a]);
          if (column_products(u) == cp && row_products(u) == rp2) ++local.column_products;
          else fail("tau1 product tuples alpha=" + std::to_string(a));
        }
        for (int b = 1; b < n; ++b) {
          CrystalPoint u = tau2(t, b);
          auto cp2 = cp;
          std::swap(cp2[b - 1], cp2[b]);
          if (row_products(u) == rp && column_products(u) == cp2) ++local.column_products;
          else fail("tau2 product tuples beta=" + std::to_string(b));
        }
        // jacobian sign on every adjacent row pair
        for (int a = 1; a < m; ++a) {
          std::vector<std::vector<BigRational>> pair = {numeric_row(t, a - 1), numeric_row(t, a)};
          if (jacobian_sign(CrystalPoint::numeric(pair)) == BigRational(-1)) ++local.jacobian;
          else fail("jacobian sign alpha=" + std::to_string(a));
        }
      } catch (const pole_error&) {
        continue; // resample
      }
      rep.involution += local.involution;
      rep.braid += local.braid;
      rep.cross += local.cross;
      rep.sum_invariance += local.sum_invariance;
      rep.column_products += local.column_products;
      rep.jacobian += local.jacobian;
      for (auto& f : local.failures) rep.failures.push_back(std::move(f));
      break;
    }
  }
  return rep;
}

} // namespace gammalift
