#include "gammalift/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gammalift {

long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      r -= r / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

namespace {

std::vector<long> prime_factors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// poly division helpers on dense ascending-coefficient vectors
void trim(std::vector<BigRational>& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

std::vector<BigRational> poly_divide_exact(std::vector<BigRational> num, const std::vector<BigRational>& den) {
  trim(num);
  std::vector<BigRational> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, BigRational(0));
  while (num.size() >= den.size() && !num.empty()) {
    size_t shift = num.size() - den.size();
    BigRational c = num.back() / den.back();
    q[shift] = c;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    trim(num);
  }
  if (!num.empty()) throw std::logic_error("cyclotomic: inexact polynomial division");
  return q;
}

} // namespace

const std::vector<BigRational>& CyclotomicNumber::cyclotomic_polynomial(long N) {
  static std::map<long, std::vector<BigRational>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;

  // x^N - 1 divided by the product of Phi_d over proper divisors d of N.
  std::vector<BigRational> num(N + 1, BigRational(0));
  num[0] = BigRational(-1);
  num[N] = BigRational(1);
  std::vector<BigRational> den(1, BigRational(1));
  for (long d = 1; d < N; ++d) {
    if (N % d != 0) continue;
    // recursive lookup without re-locking: compute directly into cache
    const std::vector<BigRational>* phid;
    auto jt = cache.find(d);
    if (jt != cache.end()) phid = &jt->second;
    else {
      // compute Phi_d by the same recursion (divisors of d < N are handled first)
      std::vector<BigRational> numd(d + 1, BigRational(0));
      numd[0] = BigRational(-1);
      numd[d] = BigRational(1);
      std::vector<BigRational> dend(1, BigRational(1));
      for (long e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        auto kt = cache.find(e);
        if (kt == cache.end()) throw std::logic_error("cyclotomic: cache ordering");
        std::vector<BigRational> prod(dend.size() + kt->second.size() - 1, BigRational(0));
        for (size_t i = 0; i < dend.size(); ++i)
          for (size_t j = 0; j < kt->second.size(); ++j) prod[i + j] += dend[i] * kt->second[j];
        dend = std::move(prod);
      }
      cache[d] = poly_divide_exact(numd, dend);
      phid = &cache[d];
    }
    std::vector<BigRational> prod(den.size() + phid->size() - 1, BigRational(0));
    for (size_t i = 0; i < den.size(); ++i)
      for (size_t j = 0; j < phid->size(); ++j) prod[i + j] += den[i] * (*phid)[j];
    den = std::move(prod);
  }
  cache[N] = poly_divide_exact(num, den);
  return cache[N];
}

void CyclotomicNumber::reduce(std::vector<BigRational>& poly) const {
  const auto& phi = cyclotomic_polynomial(n_);
  size_t deg = phi.size() - 1; // = euler_phi(n_)
  trim(poly);
  while (poly.size() > deg) {
    size_t shift = poly.size() - phi.size();
    BigRational c = poly.back(); // phi is monic
    for (size_t i = 0; i < phi.size(); ++i) poly[shift + i] -= c * phi[i];
    trim(poly);
  }
  poly.resize(deg, BigRational(0));
  if (deg == 0) poly.resize(1, BigRational(0)); // n_ == 1 keeps one slot
}

CyclotomicNumber CyclotomicNumber::root_of_unity(long N, long k) {
  if (N < 1) throw std::invalid_argument("cyclotomic: conductor must be positive");
  k %= N;
  if (k < 0) k += N;
  CyclotomicNumber z;
  z.n_ = N;
  std::vector<BigRational> poly(static_cast<size_t>(k) + 1, BigRational(0));
  poly[k] = BigRational(1);
  z.reduce(poly);
  z.coeffs_ = std::move(poly);
  z.minimize();
  return z;
}

CyclotomicNumber CyclotomicNumber::from_power_sums(long N, std::vector<BigRational> coeffs) {
  if (N < 1) throw std::invalid_argument("cyclotomic: conductor must be positive");
  CyclotomicNumber z;
  z.n_ = N;
  z.reduce(coeffs);
  z.coeffs_ = std::move(coeffs);
  z.minimize();
  return z;
}

bool CyclotomicNumber::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return c.is_zero(); });
}

BigRational CyclotomicNumber::rational_value() const {
  if (n_ != 1) throw std::domain_error("cyclotomic: not rational");
  return coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CyclotomicNumber CyclotomicNumber::scaled(const BigRational& c) const {
  CyclotomicNumber r = *this;
  for (auto& x : r.coeffs_) x *= c;
  if (c.is_zero()) { r.n_ = 1; r.coeffs_.assign(1, BigRational(0)); }
  return r;
}

CyclotomicNumber CyclotomicNumber::lifted(long M) const {
  if (M % n_ != 0) throw std::logic_error("cyclotomic: bad lift");
  if (M == n_) return *this;
  CyclotomicNumber r;
  r.n_ = M;
  long step = M / n_;
  std::vector<BigRational> poly(static_cast<size_t>(step) * (coeffs_.size() - 1) + 1, BigRational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) poly[i * step] += coeffs_[i];
  r.reduce(poly);
  r.coeffs_ = std::move(poly);
  return r;
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  long M = std::lcm(a.n_, b.n_);
  CyclotomicNumber x = a.lifted(M), y = b.lifted(M);
  for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
  x.minimize();
  return x;
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  long M = std::lcm(a.n_, b.n_);
  CyclotomicNumber x = a.lifted(M), y = b.lifted(M);
  for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
  x.minimize();
  return x;
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  // rationals are canonicalized to conductor 1, so scaling is exact here
  if (a.n_ == 1) return b.scaled(a.coeffs_[0]);
  if (b.n_ == 1) return a.scaled(b.coeffs_[0]);
  long M = std::lcm(a.n_, b.n_);
  CyclotomicNumber x = a.lifted(M), y = b.lifted(M);
  std::vector<BigRational> prod(x.coeffs_.size() + y.coeffs_.size() - 1, BigRational(0));
  for (size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < y.coeffs_.size(); ++j) {
      if (y.coeffs_[j].is_zero()) continue;
      prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  x.reduce(prod);
  x.coeffs_ = std::move(prod);
  x.minimize();
  return x;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
}

CyclotomicNumber CyclotomicNumber::galois(long a) const {
  long aa = a % n_;
  if (aa < 0) aa += n_;
  if (n_ == 1) return *this;
  if (std::gcd(aa, n_) != 1) throw std::invalid_argument("cyclotomic: galois exponent not coprime");
  CyclotomicNumber r;
  r.n_ = n_;
  std::vector<BigRational> poly(static_cast<size_t>(n_), BigRational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    poly[(i * aa) % n_] += coeffs_[i];
  }
  reduce(poly);
  r.coeffs_ = std::move(poly);
  r.minimize();
  return r;
}

std::complex<double> CyclotomicNumber::embed() const {
  std::complex<double> acc(0.0, 0.0);
  const double tau = 6.28318530717958647692;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    double ang = tau * static_cast<double>(i) / static_cast<double>(n_);
    acc += coeffs_[i].to_double() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

void CyclotomicNumber::minimize() {
  bool changed = true;
  while (changed && n_ > 1) {
    changed = false;
    for (long p : prime_factors(n_)) {
      long M = n_ / p;
      long phiM = euler_phi(M);
      long phiN = euler_phi(n_);
      if (phiM != phiN) {
        // Descent is possible only if the value is fixed by Gal(Q(zeta_N)/Q(zeta_M)),
        // i.e. by every zeta_N -> zeta_N^a with a = 1 mod M. Cheap filter before solving.
        bool fixed = true;
        for (long a = 1 + M; a < n_ && fixed; a += M) {
          if (std::gcd(a, n_) != 1) continue;
          std::vector<BigRational> poly(static_cast<size_t>(n_), BigRational(0));
          for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            poly[(i * a) % n_] += coeffs_[i];
          }
          reduce(poly);
          for (long i = 0; i < phiN; ++i)
            if (poly[i] != coeffs_[i]) { fixed = false; break; }
        }
        if (!fixed) continue;
      }
      // Columns: representation of zeta_M^j = zeta_N^{(N/M) j} in the zeta_N basis.
      std::vector<std::vector<BigRational>> A(phiN, std::vector<BigRational>(phiM, BigRational(0)));
      for (long j = 0; j < phiM; ++j) {
        std::vector<BigRational> col(static_cast<size_t>(j) * (n_ / M) + 1, BigRational(0));
        col[j * (n_ / M)] = BigRational(1);
        reduce(col);
        for (long i = 0; i < phiN; ++i) A[i][j] = col[i];
      }
      // Solve A u = coeffs_ by Gaussian elimination.
      std::vector<std::vector<BigRational>> aug(phiN, std::vector<BigRational>(phiM + 1));
      for (long i = 0; i < phiN; ++i) {
        for (long j = 0; j < phiM; ++j) aug[i][j] = A[i][j];
        aug[i][phiM] = coeffs_[i];
      }
      long row = 0;
      std::vector<long> pivot_col(phiN, -1);
      for (long col = 0; col < phiM && row < phiN; ++col) {
        long pr = -1;
        for (long r = row; r < phiN; ++r)
          if (!aug[r][col].is_zero()) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(aug[row], aug[pr]);
        BigRational inv = BigRational(1) / aug[row][col];
        for (long j = col; j <= phiM; ++j) aug[row][j] *= inv;
        for (long r = 0; r < phiN; ++r) {
          if (r == row || aug[r][col].is_zero()) continue;
          BigRational f = aug[r][col];
          for (long j = col; j <= phiM; ++j) aug[r][j] -= f * aug[row][j];
        }
        pivot_col[row] = col;
        ++row;
      }
      bool solvable = true;
      for (long r = row; r < phiN; ++r)
        if (!aug[r][phiM].is_zero()) { solvable = false; break; }
      if (!solvable) continue;
      std::vector<BigRational> u(phiM, BigRational(0));
      for (long r = 0; r < row; ++r)
        if (pivot_col[r] >= 0) u[pivot_col[r]] = aug[r][phiM];
      n_ = M;
      coeffs_ = std::move(u);
      if (coeffs_.empty()) coeffs_.assign(1, BigRational(0));
      changed = true;
      break;
    }
  }
}

std::string CyclotomicNumber::str() const {
  if (n_ == 1) return coeffs_[0].str();
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    BigRational c = coeffs_[i];
    if (first) {
      if (c.sign() < 0) { os << "-"; c = -c; }
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    }
    first = false;
    if (i == 0) os << c.str();
    else {
      if (c != BigRational(1)) os << c.str() << "*";
      os << "z" << n_;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) return "0";
  return os.str();
}

} // namespace gammalift
