#include "gammalift/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace gammalift {

BigRational::BigRational(long num, long den) {
  if (den == 0) throw std::domain_error("BigRational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.v_ == 0) throw std::domain_error("BigRational: division by zero");
  v_ /= o.v_;
  return *this;
}

BigRational BigRational::parse(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("BigRational: bad literal '" + s + "'");
  q.canonicalize();
  return BigRational(q);
}

BigRational BigRational::pow(long e) const {
  if (e == 0) return BigRational(1);
  bool inv = e < 0;
  unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  if (inv && v_ == 0) throw std::domain_error("BigRational: 0^negative");
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), k);
  mpq_class r(inv ? den : num, inv ? num : den);
  r.canonicalize();
  return BigRational(r);
}

long BigRational::to_long() const {
  if (!is_integer()) throw std::domain_error("BigRational: not an integer");
  if (!v_.get_num().fits_slong_p()) throw std::overflow_error("BigRational: out of long range");
  return v_.get_num().get_si();
}

std::string BigRational::str() const {
  return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) {
  return os << r.str();
}

} // namespace gammalift
