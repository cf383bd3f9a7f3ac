#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gammalift/rational.hpp"
#include "gammalift/polynomial.hpp"
#include "gammalift/ratfun.hpp"
#include "gammalift/cyclotomic.hpp"
#include "gammalift/finite_field.hpp"

#include <complex>
#include <random>

using namespace gammalift;

using P = MultivariatePolynomial;

static BigRational rand_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  return BigRational(num(rng), den(rng));
}

TEST_CASE("rational normalization and parsing") {
  CHECK(BigRational(2, 4) == BigRational(1, 2));
  CHECK(BigRational(3, -6) == BigRational(-1, 2));
  CHECK(BigRational::parse("7") == BigRational(7));
  CHECK(BigRational::parse("-3/9") == BigRational(-1, 3));
  CHECK(BigRational(-1, 3).str() == "-1/3");
  CHECK(BigRational(4, 2).str() == "2");
  CHECK_THROWS(BigRational(1, 0));
  CHECK_THROWS(BigRational(1, 2).to_long());
  CHECK(BigRational(-14, 2).to_long() == -7);
}

TEST_CASE("rational field axioms on random triples") {
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 120; ++i) {
    BigRational a = rand_rational(rng), b = rand_rational(rng), c = rand_rational(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - b) + b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(a.pow(3) == a * a * a);
    if (!a.is_zero()) {
      CHECK(a.pow(-2) * a * a == BigRational(1));
      CHECK(a.pow(0) == BigRational(1));
    }
  }
}

TEST_CASE("polynomial arithmetic and leading terms") {
  P x = P::variable(2, 0), y = P::variable(2, 1);
  P s = x + y;
  CHECK(s * s == x * x + (x * y).scaled(BigRational(2)) + y * y);
  P f = (x * x * y) + (x * y * y * y);
  CHECK(f.leading_monomial() == Monomial({2, 1}));
  CHECK(f.degree_in(1) == 3);
  CHECK(f.total_degree() == 4);
  CHECK(f.eval({BigRational(2), BigRational(3)}) == BigRational(12 + 54));
  CHECK(f.derivative(0) == (x * y).scaled(BigRational(2)) + y * y * y);
}

TEST_CASE("polynomial evaluation is a ring homomorphism") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> expd(0, 3), nterms(1, 4);
  auto rand_poly = [&]() {
    P f(2);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
      Monomial m = {expd(rng), expd(rng)};
      P term = P::constant(2, rand_rational(rng));
      for (int i = 0; i < m[0]; ++i) term *= P::variable(2, 0);
      for (int i = 0; i < m[1]; ++i) term *= P::variable(2, 1);
      f += term;
    }
    return f;
  };
  for (int i = 0; i < 40; ++i) {
    P f = rand_poly(), g = rand_poly();
    std::vector<BigRational> pt = {rand_rational(rng), rand_rational(rng)};
    CHECK((f * g).eval(pt) == f.eval(pt) * g.eval(pt));
    CHECK((f + g).eval(pt) == f.eval(pt) + g.eval(pt));
    CHECK((f * g).derivative(0) == f.derivative(0) * g + f * g.derivative(0));
  }
}

TEST_CASE("polynomial exact division and gcd") {
  P x = P::variable(2, 0), y = P::variable(2, 1);
  P diff = x * x - y * y;
  auto q = diff.divide_exact(x - y);
  REQUIRE(q.has_value());
  CHECK(*q == x + y);
  CHECK(!(x * x + y * y).divide_exact(x - y).has_value());

  P sq = x * x + (x * y).scaled(BigRational(2)) + y * y;
  P three_y = y.scaled(BigRational(3));
  CHECK(P::gcd(diff * (x + three_y), sq) == x + y);

  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> expd(0, 2);
  auto rand_poly = [&]() {
    P f(2);
    for (int t = 0; t < 3; ++t) {
      Monomial m = {expd(rng), expd(rng)};
      P term = P::constant(2, rand_rational(rng));
      for (int i = 0; i < m[0]; ++i) term *= x;
      for (int i = 0; i < m[1]; ++i) term *= y;
      f += term;
    }
    return f;
  };
  for (int i = 0; i < 15; ++i) {
    P a = rand_poly(), b = rand_poly(), c = rand_poly();
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    P g = P::gcd(a * c, b * c);
    CHECK((a * c).divide_exact(g).has_value());
    CHECK((b * c).divide_exact(g).has_value());
    // the primitive part of c divides the gcd
    P pc = P::gcd(c, c);
    auto q2 = c.divide_exact(pc);
    REQUIRE(q2.has_value());
    CHECK(q2->is_constant());
    CHECK(g.divide_exact(pc).has_value() == (P::gcd(g, pc) == pc));
    CHECK(g.divide_exact(pc).has_value());
  }
}

TEST_CASE("rational function reduction and poles") {
  P x1 = P::variable(1, 0);
  P one = P::constant(1, BigRational(1));
  RationalFunction r(x1 * x1 - one, x1 - one);
  CHECK(r == RationalFunction(x1 + one));
  CHECK(r.eval({BigRational(1)}) == BigRational(2));

  RationalFunction h(one, x1.scaled(BigRational(2)) - P::constant(1, BigRational(2)));
  CHECK(h.den() == x1 - one);
  CHECK(h.num() == P::constant(1, BigRational(1, 2)));

  RationalFunction pole(x1, x1 - one);
  CHECK_THROWS_AS(pole.eval({BigRational(1)}), pole_error);
  CHECK(pole.eval({BigRational(3)}) == BigRational(3, 2));

  P x = P::variable(2, 0), y = P::variable(2, 1);
  RationalFunction fx(P::constant(2, BigRational(1)), x);
  RationalFunction fy(P::constant(2, BigRational(1)), y);
  CHECK(fx + fy == RationalFunction(x + y, x * y));

  RationalFunction inv_x(P::constant(1, BigRational(1)), x1);
  CHECK(inv_x.derivative(0) == RationalFunction(-one, x1 * x1));
}

TEST_CASE("cyclotomic canonical form and conductor minimization") {
  auto z6 = CyclotomicNumber::root_of_unity(6, 1);
  CHECK(z6.conductor() == 3);
  auto z3 = CyclotomicNumber::root_of_unity(3, 1);
  CHECK(z6 == CyclotomicNumber(1) + z3);

  auto z4 = CyclotomicNumber::root_of_unity(4, 1);
  CHECK(z4 * z4 == CyclotomicNumber(-1));
  CHECK((z4 * z4).is_rational());

  auto z8 = CyclotomicNumber::root_of_unity(8, 1);
  CHECK(z8 * z8 == z4);

  CHECK((CyclotomicNumber(1) + z3 + z3 * z3).is_zero());

  auto phi12 = CyclotomicNumber::cyclotomic_polynomial(12);
  std::vector<BigRational> expected = {BigRational(1), BigRational(0), BigRational(-1),
                                       BigRational(0), BigRational(1)};
  CHECK(phi12 == expected);
  std::vector<BigRational> phi1 = {BigRational(-1), BigRational(1)};
  CHECK(CyclotomicNumber::cyclotomic_polynomial(1) == phi1);

  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(97) == 96);
}

TEST_CASE("cyclotomic product rule across conductors") {
  for (long m = 1; m <= 12; ++m) {
    for (long n = 1; n <= 12; ++n) {
      long L = std::lcm(m, n);
      long a = m > 1 ? 1 : 0, b = n > 1 ? n - 1 : 0;
      auto lhs = CyclotomicNumber::root_of_unity(m, a) * CyclotomicNumber::root_of_unity(n, b);
      auto rhs = CyclotomicNumber::root_of_unity(L, (a * (L / m) + b * (L / n)) % L);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("cyclotomic galois action and gauss sums") {
  auto z5 = CyclotomicNumber::root_of_unity(5, 1);
  CHECK(z5.galois(2) == CyclotomicNumber::root_of_unity(5, 2));
  CHECK(z5.conjugate() == CyclotomicNumber::root_of_unity(5, 4));

  // quadratic character mod 5: squares 1,4 get +1, nonsquares 2,3 get -1
  CyclotomicNumber g;
  int chi5[5] = {0, 1, -1, -1, 1};
  for (long t = 1; t < 5; ++t)
    g += CyclotomicNumber::root_of_unity(5, t).scaled(BigRational(chi5[t]));
  CHECK(g * g == CyclotomicNumber(5));

  // order-6 character mod 7 via the generator 3: |gauss|^2 = 7
  CyclotomicNumber h;
  long pw = 1;
  for (long j = 0; j < 6; ++j) {
    h += CyclotomicNumber::root_of_unity(6, j) * CyclotomicNumber::root_of_unity(7, pw);
    pw = (pw * 3) % 7;
  }
  CHECK(h * h.conjugate() == CyclotomicNumber(7));

  auto z7 = CyclotomicNumber::root_of_unity(7, 1);
  std::complex<double> want = std::polar(1.0, 2.0 * 3.14159265358979323846 / 7.0);
  CHECK(std::abs(z7.embed() - want) < 1e-12);
  CHECK(std::abs(std::abs(h.embed()) - std::sqrt(7.0)) < 1e-12);
}

TEST_CASE("finite field construction is deterministic") {
  const FiniteField& f4 = FiniteField::get(2, 2);
  CHECK(f4.modulus() == std::vector<int>({1, 1, 1}));
  const FiniteField& f9 = FiniteField::get(3, 2);
  CHECK(f9.modulus() == std::vector<int>({1, 0, 1}));
  CHECK(f9.generator().coords() == std::vector<int>({1, 1}));
  CHECK(f9.generator().index() == 4);
  CHECK_THROWS(FiniteField::get(2, 21));
  for (long idx = 0; idx < f9.size(); ++idx)
    CHECK(f9.from_index(idx).index() == idx);
}

TEST_CASE("finite field axioms, exhaustive on small fields") {
  const FiniteField& f8 = FiniteField::get(2, 3);
  for (long i = 0; i < 8; ++i)
    for (long j = 0; j < 8; ++j) {
      auto a = f8.from_index(i), b = f8.from_index(j);
      CHECK(a * b == b * a);
      CHECK(a + b == b + a);
      for (long k = 0; k < 8; ++k) {
        auto c = f8.from_index(k);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
      }
    }
  const FiniteField& f27 = FiniteField::get(3, 3);
  for (long i = 1; i < 27; ++i) {
    auto y = f27.from_index(i);
    CHECK(y * y.inverse() == f27.one());
    CHECK(y.pow(26) == f27.one());
  }
  CHECK_THROWS(f27.zero().inverse());
  CHECK_THROWS(f8.one() + f27.one());
}

TEST_CASE("frobenius, trace, discrete log") {
  const FiniteField& f9 = FiniteField::get(3, 2);
  for (long a = 0; a < 3; ++a)
    CHECK(f9.from_prime(a).frobenius() == f9.from_prime(a));
  for (long i = 0; i < 9; ++i) {
    auto y = f9.from_index(i);
    CHECK(y.frobenius(2) == y);
  }
  CHECK(f9.trace_to_prime(f9.one()) == 2);

  const FiniteField& f81 = FiniteField::get(3, 4);
  for (long i = 0; i < 81; ++i) {
    auto y = f81.from_index(i);
    CHECK(f81.trace_to_prime(y.frobenius()) == f81.trace_to_prime(y));
    // transitivity through the degree-2 subfield
    auto mid = f81.trace_to(y, 2);
    CHECK(f81.trace_to(y, 1) == mid + mid.frobenius(1));
  }

  const FiniteField& f25 = FiniteField::get(5, 2);
  auto g = f25.generator();
  auto x = f25.one();
  for (long e = 0; e < 24; ++e) {
    CHECK(f25.discrete_log(x) == e);
    x = x * g;
  }
  CHECK(x == f25.one());
}

TEST_CASE("additive character sums vanish") {
  const FiniteField& f9 = FiniteField::get(3, 2);
  CyclotomicNumber total;
  for (long i = 0; i < 9; ++i)
    total += CyclotomicNumber::root_of_unity(3, f9.trace_to_prime(f9.from_index(i)));
  CHECK(total.is_zero());

  CyclotomicNumber units;
  for (long i = 1; i < 9; ++i)
    units += CyclotomicNumber::root_of_unity(3, f9.trace_to_prime(f9.from_index(i)));
  CHECK(units == CyclotomicNumber(-1));
}
