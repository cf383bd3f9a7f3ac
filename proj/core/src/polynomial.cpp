#include "gammalift/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gammalift {

namespace {

void check_same(const MultivariatePolynomial& a, const MultivariatePolynomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomial: variable count mismatch");
}

mpz_class coeff_num(const BigRational& r) { return r.raw().get_num(); }
mpz_class coeff_den(const BigRational& r) { return r.raw().get_den(); }

} // namespace

MultivariatePolynomial MultivariatePolynomial::constant(int nvars, const BigRational& c) {
  MultivariatePolynomial p(nvars);
  p.set(Monomial(nvars, 0), c);
  return p;
}

MultivariatePolynomial MultivariatePolynomial::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::out_of_range("polynomial: variable index");
  MultivariatePolynomial p(nvars);
  Monomial m(nvars, 0);
  m[index] = 1;
  p.set(m, BigRational(1));
  return p;
}

bool MultivariatePolynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Monomial& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

BigRational MultivariatePolynomial::constant_value() const {
  if (terms_.empty()) return BigRational(0);
  if (!is_constant()) throw std::domain_error("polynomial: not constant");
  return terms_.begin()->second;
}

void MultivariatePolynomial::set(const Monomial& m, const BigRational& c) {
  if (static_cast<int>(m.size()) != nvars_) throw std::invalid_argument("polynomial: monomial arity");
  if (c.is_zero()) terms_.erase(m);
  else terms_[m] = c;
}

MultivariatePolynomial MultivariatePolynomial::operator-() const {
  MultivariatePolynomial r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

MultivariatePolynomial& MultivariatePolynomial::operator+=(const MultivariatePolynomial& o) {
  check_same(*this, o);
  for (const auto& [m, c] : o.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) terms_[m] = c;
    else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

MultivariatePolynomial& MultivariatePolynomial::operator-=(const MultivariatePolynomial& o) {
  check_same(*this, o);
  for (const auto& [m, c] : o.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) terms_[m] = -c;
    else {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

MultivariatePolynomial operator*(const MultivariatePolynomial& a, const MultivariatePolynomial& b) {
  check_same(a, b);
  MultivariatePolynomial r(a.nvars_);
  Monomial m(a.nvars_, 0);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
      auto it = r.terms_.find(m);
      if (it == r.terms_.end()) {
        BigRational c = ca * cb;
        if (!c.is_zero()) r.terms_.emplace(m, c);
      } else {
        it->second += ca * cb;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  }
  return r;
}

MultivariatePolynomial MultivariatePolynomial::scaled(const BigRational& c) const {
  MultivariatePolynomial r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
  return r;
}

const Monomial& MultivariatePolynomial::leading_monomial() const {
  if (terms_.empty()) throw std::domain_error("polynomial: leading term of zero");
  return terms_.rbegin()->first;
}

const BigRational& MultivariatePolynomial::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("polynomial: leading term of zero");
  return terms_.rbegin()->second;
}

int MultivariatePolynomial::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

int MultivariatePolynomial::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (int e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

BigRational MultivariatePolynomial::eval(const std::vector<BigRational>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("polynomial: eval arity");
  BigRational acc(0);
  for (const auto& [m, c] : terms_) {
    BigRational t = c;
    for (int i = 0; i < nvars_; ++i)
      if (m[i] != 0) t *= point[i].pow(m[i]);
    acc += t;
  }
  return acc;
}

MultivariatePolynomial MultivariatePolynomial::derivative(int var) const {
  MultivariatePolynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    r.terms_[d] = c * BigRational(m[var]);
  }
  return r;
}

std::optional<MultivariatePolynomial> MultivariatePolynomial::divide_exact(const MultivariatePolynomial& o) const {
  check_same(*this, o);
  if (o.is_zero()) throw std::domain_error("polynomial: division by zero");
  MultivariatePolynomial rem = *this;
  MultivariatePolynomial quot(nvars_);
  const Monomial& lmo = o.leading_monomial();
  const BigRational& lco = o.leading_coeff();
  while (!rem.is_zero()) {
    const Monomial& lmr = rem.leading_monomial();
    Monomial q(nvars_);
    bool divisible = true;
    for (int i = 0; i < nvars_; ++i) {
      q[i] = lmr[i] - lmo[i];
      if (q[i] < 0) { divisible = false; break; }
    }
    if (!divisible) return std::nullopt;
    BigRational qc = rem.leading_coeff() / lco;
    MultivariatePolynomial qt(nvars_);
    qt.terms_[q] = qc;
    quot += qt;
    rem -= qt * o;
  }
  return quot;
}

namespace {

// Primitive integer form: p = content * result, content > 0, result has integer
// coefficients with gcd 1 and positive lex-leading coefficient (sign goes to content).
MultivariatePolynomial primitive_q(const MultivariatePolynomial& p) {
  if (p.is_zero()) return p;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), coeff_num(c).get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), coeff_den(c).get_mpz_t());
  }
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  MultivariatePolynomial r = p.scaled(BigRational(mpq_class(scale)));
  if (r.leading_coeff().sign() < 0) r = r.scaled(BigRational(-1));
  return r;
}

Monomial monomial_gcd(const MultivariatePolynomial& p) {
  Monomial g;
  for (const auto& [m, c] : p.terms()) {
    if (g.empty()) g = m;
    else
      for (size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], m[i]);
  }
  return g;
}

MultivariatePolynomial shift_down(const MultivariatePolynomial& p, const Monomial& g) {
  MultivariatePolynomial r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    Monomial s = m;
    for (size_t i = 0; i < s.size(); ++i) s[i] -= g[i];
    r.set(s, c);
  }
  return r;
}

// Coefficient of x_var^k, as a polynomial with exponent 0 in var.
MultivariatePolynomial coeff_in(const MultivariatePolynomial& p, int var, int k) {
  MultivariatePolynomial r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (m[var] != k) continue;
    Monomial s = m;
    s[var] = 0;
    r.set(s, c);
  }
  return r;
}

MultivariatePolynomial times_var_pow(const MultivariatePolynomial& p, int var, int k) {
  MultivariatePolynomial r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    Monomial s = m;
    s[var] += k;
    r.set(s, c);
  }
  return r;
}

MultivariatePolynomial gcd_impl(MultivariatePolynomial a, MultivariatePolynomial b);

// gcd of the x_var-coefficients of p.
MultivariatePolynomial content_in(const MultivariatePolynomial& p, int var) {
  MultivariatePolynomial g(p.nvars());
  for (int k = 0; k <= p.degree_in(var); ++k) {
    MultivariatePolynomial c = coeff_in(p, var, k);
    if (c.is_zero()) continue;
    g = g.is_zero() ? primitive_q(c) : gcd_impl(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

MultivariatePolynomial gcd_impl(MultivariatePolynomial a, MultivariatePolynomial b) {
  if (a.is_zero()) return primitive_q(b);
  if (b.is_zero()) return primitive_q(a);
  int n = a.nvars();

  // Pull out the common monomial factor first.
  Monomial ga = monomial_gcd(a), gb = monomial_gcd(b), gm(n, 0);
  for (int i = 0; i < n; ++i) gm[i] = std::min(ga[i], gb[i]);
  a = shift_down(a, ga);
  b = shift_down(b, gb);
  a = primitive_q(a);
  b = primitive_q(b);

  MultivariatePolynomial common(n);
  if (a == b) {
    common = a;
  } else {
    int var = -1;
    for (int i = n - 1; i >= 0; --i)
      if (a.degree_in(i) > 0 || b.degree_in(i) > 0) { var = i; break; }
    if (var < 0) {
      common = MultivariatePolynomial::constant(n, BigRational(1));
    } else if (a.degree_in(var) == 0 || b.degree_in(var) == 0) {
      // One side is free of the main variable: gcd divides that side's content.
      MultivariatePolynomial ca = content_in(a, var), cb = content_in(b, var);
      common = gcd_impl(ca, cb);
    } else {
      MultivariatePolynomial ca = content_in(a, var), cb = content_in(b, var);
      MultivariatePolynomial cg = gcd_impl(ca, cb);
      MultivariatePolynomial pa = *a.divide_exact(ca), pb = *b.divide_exact(cb);
      // Primitive pseudo-remainder sequence in x_var.
      MultivariatePolynomial r0 = pa, r1 = pb;
      if (r0.degree_in(var) < r1.degree_in(var)) std::swap(r0, r1);
      while (!r1.is_zero()) {
        // prem(r0, r1) in x_var.
        MultivariatePolynomial rem = r0;
        int d1 = r1.degree_in(var);
        MultivariatePolynomial lc1 = coeff_in(r1, var, d1);
        while (!rem.is_zero() && rem.degree_in(var) >= d1) {
          int dr = rem.degree_in(var);
          MultivariatePolynomial lcr = coeff_in(rem, var, dr);
          rem = rem * lc1 - times_var_pow(lcr, var, dr - d1) * r1;
        }
        r0 = r1;
        r1 = rem.is_zero() ? rem : *rem.divide_exact(content_in(rem, var));
        r1 = primitive_q(r1);
      }
      MultivariatePolynomial pp = *r0.divide_exact(content_in(r0, var));
      common = cg * primitive_q(pp);
    }
  }
  common = primitive_q(common);
  // Re-apply the common monomial factor.
  MultivariatePolynomial shifted(n);
  for (const auto& [m, c] : common.terms()) {
    Monomial s = m;
    for (int i = 0; i < n; ++i) s[i] += gm[i];
    shifted.set(s, c);
  }
  return shifted;
}

} // namespace

MultivariatePolynomial MultivariatePolynomial::gcd(const MultivariatePolynomial& a, const MultivariatePolynomial& b) {
  check_same(a, b);
  return gcd_impl(a, b);
}

std::string MultivariatePolynomial::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print in descending lex order.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    BigRational a = c;
    if (first) {
      if (a.sign() < 0) { os << "-"; a = -a; }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    first = false;
    bool unit = (a == BigRational(1));
    bool any_var = false;
    std::ostringstream vars;
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (any_var) vars << "*";
      any_var = true;
      if (static_cast<size_t>(i) < names.size()) vars << names[i];
      else vars << "x" << i;
      if (m[i] != 1) vars << "^" << m[i];
    }
    if (!any_var) os << a.str();
    else {
      if (!unit) os << a.str() << "*";
      os << vars.str();
    }
  }
  return os.str();
}

} // namespace gammalift
