#include "gammalift/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gammalift {

namespace {

using Poly = std::vector<int>; // ascending coefficients mod p, no trailing zeros enforced by callers

int mod_inverse(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  if (nr < 0) nr += p;
  while (nr != 0) {
    long q = r / nr;
    long tmp = t - q * nt; t = nt; nt = tmp;
    tmp = r - q * nr; r = nr; nr = tmp;
  }
  if (r != 1) throw std::domain_error("finite_field: not invertible");
  return static_cast<int>(t < 0 ? t + p : t);
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, long p) {
  Poly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = static_cast<int>((prod[i + j] + static_cast<long>(a[i]) * b[j]) % p);
  }
  // reduce mod (monic) mod
  size_t k = mod.size() - 1;
  for (size_t d = prod.size(); d-- > k;) {
    int c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (size_t i = 0; i < k; ++i)
      prod[d - k + i] = static_cast<int>(((prod[d - k + i] - static_cast<long>(c) * mod[i]) % p + p) % p);
  }
  prod.resize(k, 0);
  return prod;
}

Poly poly_pow_mod(Poly base, long e, const Poly& mod, long p) {
  Poly r(mod.size() - 1, 0);
  r[0] = 1;
  while (e > 0) {
    if (e & 1) r = poly_mul_mod(r, base, mod, p);
    base = poly_mul_mod(base, base, mod, p);
    e >>= 1;
  }
  return r;
}

Poly poly_mod(Poly a, const Poly& m, long p) {
  // general reduction of a by monic-scalable m
  while (true) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.size() < m.size()) break;
    long inv = mod_inverse(m.back(), p);
    long c = (a.back() * inv) % p;
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i)
      a[shift + i] = static_cast<int>(((a[shift + i] - c * m[i]) % p + p) % p);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, long p) {
  while (true) {
    while (!b.empty() && b.back() == 0) b.pop_back();
    if (b.empty()) return a;
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
}

std::vector<long> prime_divisors(long n) {
  std::vector<long> ps;
  for (long q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      ps.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

bool is_irreducible(const Poly& f, long p) {
  int k = static_cast<int>(f.size()) - 1;
  if (k == 1) return true;
  Poly x = {0, 1};
  // x^(p^k) == x mod f, and x^(p^(k/ell)) - x coprime to f for primes ell | k
  Poly t = x;
  for (int i = 0; i < k; ++i) t = poly_pow_mod(t, p, f, p);
  Poly xr(k, 0);
  xr[1] = 1;
  if (t != xr) return false;
  for (long ell : prime_divisors(k)) {
    Poly u = x;
    for (int i = 0; i < k / ell; ++i) u = poly_pow_mod(u, p, f, p);
    // gcd(u - x, f) must be constant
    Poly diff = u;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = static_cast<int>(((diff[1] - 1) % p + p) % p);
    Poly g = poly_gcd(f, diff, p);
    while (!g.empty() && g.back() == 0) g.pop_back();
    if (g.size() > 1) return false;
  }
  return true;
}

} // namespace

FiniteField::FiniteField(long p, int k) : p_(p), k_(k) {
  if (p < 2 || k < 1) throw std::invalid_argument("finite_field: bad parameters");
  size_ = 1;
  for (int i = 0; i < k; ++i) {
    size_ *= p;
    if (size_ > 1000000) throw std::domain_error("finite_field: size exceeds desk scale (10^6)");
  }
  if (k == 1) {
    modulus_ = {0, 1}; // x (any monic linear works; arithmetic is plain mod p)
  } else {
    // least (c_0, ..., c_{k-1}) lexicographically with x^k + sum c_i x^i irreducible
    long combos = 1;
    for (int i = 0; i < k; ++i) combos *= p;
    bool found = false;
    for (long code = 0; code < combos && !found; ++code) {
      Poly f(k + 1, 0);
      long c = code;
      // code digits little-endian: digit i is c_{k-1-i} so that c_0 varies slowest
      for (int i = k - 1; i >= 0; --i) {
        f[i] = static_cast<int>(c % p);
        c /= p;
      }
      f[k] = 1;
      if (f[0] == 0) continue; // reducible: x divides
      if (is_irreducible(f, p)) {
        modulus_ = f;
        found = true;
      }
    }
    if (!found) throw std::logic_error("finite_field: no irreducible polynomial found");
  }
  // generator: least index of full order
  std::vector<long> ells = prime_divisors(size_ - 1);
  gen_index_ = -1;
  for (long idx = 1; idx < size_; ++idx) {
    FiniteFieldElement x = from_index(idx);
    bool full = true;
    for (long ell : ells) {
      if (x.pow((size_ - 1) / ell) == one()) { full = false; break; }
    }
    if (full) { gen_index_ = idx; break; }
  }
  if (gen_index_ < 0) throw std::logic_error("finite_field: no generator found");
}

const FiniteField& FiniteField::get(long p, int k) {
  static std::map<std::pair<long, int>, std::unique_ptr<FiniteField>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, k);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::unique_ptr<FiniteField>(new FiniteField(p, k))).first;
  return *it->second;
}

FiniteFieldElement FiniteField::zero() const { return {this, std::vector<int>(k_, 0)}; }

FiniteFieldElement FiniteField::one() const {
  std::vector<int> c(k_, 0);
  c[0] = 1;
  return {this, c};
}

FiniteFieldElement FiniteField::from_prime(long a) const {
  std::vector<int> c(k_, 0);
  long r = a % p_;
  if (r < 0) r += p_;
  c[0] = static_cast<int>(r);
  return {this, c};
}

FiniteFieldElement FiniteField::from_index(long idx) const {
  if (idx < 0 || idx >= size_) throw std::out_of_range("finite_field: index");
  std::vector<int> c(k_, 0);
  for (int i = 0; i < k_; ++i) {
    c[i] = static_cast<int>(idx % p_);
    idx /= p_;
  }
  return {this, c};
}

long FiniteFieldElement::index() const {
  long idx = 0;
  for (size_t i = coords_.size(); i-- > 0;) idx = idx * field_->p() + coords_[i];
  return idx;
}

bool FiniteFieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

FiniteFieldElement FiniteFieldElement::operator-() const {
  std::vector<int> c = coords_;
  long p = field_->p();
  for (auto& x : c) x = static_cast<int>((p - x) % p);
  return {field_, c};
}

FiniteFieldElement operator+(const FiniteFieldElement& a, const FiniteFieldElement& b) {
  if (a.field_ != b.field_) throw std::invalid_argument("finite_field: mixed fields");
  std::vector<int> c = a.coords_;
  long p = a.field_->p();
  for (size_t i = 0; i < c.size(); ++i) c[i] = static_cast<int>((c[i] + b.coords_[i]) % p);
  return {a.field_, c};
}

FiniteFieldElement operator-(const FiniteFieldElement& a, const FiniteFieldElement& b) {
  return a + (-b);
}

FiniteFieldElement operator*(const FiniteFieldElement& a, const FiniteFieldElement& b) {
  if (a.field_ != b.field_) throw std::invalid_argument("finite_field: mixed fields");
  return {a.field_, a.field_->mul_coords(a.coords_, b.coords_)};
}

FiniteFieldElement operator/(const FiniteFieldElement& a, const FiniteFieldElement& b) {
  return a * b.inverse();
}

bool operator==(const FiniteFieldElement& a, const FiniteFieldElement& b) {
  return a.field_ == b.field_ && a.coords_ == b.coords_;
}

std::vector<int> FiniteField::mul_coords(const std::vector<int>& a, const std::vector<int>& b) const {
  if (k_ == 1) return {static_cast<int>((static_cast<long>(a[0]) * b[0]) % p_)};
  return poly_mul_mod(a, b, modulus_, p_);
}

FiniteFieldElement FiniteFieldElement::pow(long e) const {
  long n = field_->size() - 1;
  if (is_zero()) {
    if (e <= 0) throw std::domain_error("finite_field: 0^nonpositive");
    return *this;
  }
  e %= n;
  if (e < 0) e += n;
  FiniteFieldElement r = field_->one(), base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

FiniteFieldElement FiniteFieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("finite_field: inverse of zero");
  return pow(field_->size() - 2);
}

FiniteFieldElement FiniteFieldElement::frobenius(long times) const {
  FiniteFieldElement r = *this;
  for (long i = 0; i < times; ++i) r = r.pow(field_->p());
  return r;
}

void FiniteField::build_log_table() const {
  log_table_.assign(size_, -1);
  FiniteFieldElement g = generator(), x = one();
  for (long e = 0; e < size_ - 1; ++e) {
    log_table_[x.index()] = e;
    x = x * g;
  }
}

long FiniteField::discrete_log(const FiniteFieldElement& x) const {
  if (x.is_zero()) throw std::domain_error("finite_field: log of zero");
  if (log_table_.empty()) build_log_table();
  return log_table_[x.index()];
}

FiniteFieldElement FiniteField::trace_to(const FiniteFieldElement& x, int sub_degree) const {
  if (k_ % sub_degree != 0) throw std::invalid_argument("finite_field: trace to non-subfield");
  FiniteFieldElement acc = zero(), t = x;
  for (int i = 0; i < k_ / sub_degree; ++i) {
    acc = acc + t;
    t = t.frobenius(sub_degree);
  }
  return acc;
}

long FiniteField::trace_to_prime(const FiniteFieldElement& x) const {
  FiniteFieldElement t = trace_to(x, 1);
  for (size_t i = 1; i < t.coords().size(); ++i)
    if (t.coords()[i] != 0) throw std::logic_error("finite_field: trace not in prime field");
  return t.coords()[0];
}

std::string FiniteFieldElement::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ",";
    os << coords_[i];
  }
  os << "]";
  return os.str();
}

} // namespace gammalift
