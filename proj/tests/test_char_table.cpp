#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gammalift/char_table.hpp"

#include <vector>

using namespace gammalift;

static CyclotomicNumber zeta(long N, long k) { return CyclotomicNumber::root_of_unity(N, k); }

TEST_CASE("gl2 table shape") {
  for (long q : {3, 5, 7, 9}) {
    auto T = gl2_character_table(q);
    long expect_classes = q * q - 1;
    CHECK(static_cast<long>(T.classes.size()) == expect_classes);
    CHECK(static_cast<long>(T.irreps.size()) == expect_classes);
    CHECK(T.group_order == (q * q - 1) * (q * q - q));
    CHECK(T.sum_dim_squares() == T.group_order);
    long total = 0;
    for (const auto& c : T.classes) total += c.size;
    CHECK(total == T.group_order);
    // dimensions come in the four classical families
    long lin = 0, st = 0, pr = 0, cu = 0;
    for (const auto& r : T.irreps) {
      if (r.kind == IrrepKind::Linear) { CHECK(r.dim == 1); ++lin; }
      if (r.kind == IrrepKind::SteinbergTwist) { CHECK(r.dim == q); ++st; }
      if (r.kind == IrrepKind::PrincipalSeries) { CHECK(r.dim == q + 1); ++pr; }
      if (r.kind == IrrepKind::Cuspidal) { CHECK(r.dim == q - 1); ++cu; }
    }
    CHECK(lin == q - 1);
    CHECK(st == q - 1);
    CHECK(pr == (q - 1) * (q - 2) / 2);
    CHECK(cu == (q * q - q) / 2);
  }
  CHECK_THROWS_AS(gl2_character_table(2), std::domain_error);
  CHECK_THROWS_AS(gl2_character_table(4), std::domain_error);
  CHECK_THROWS_AS(gl2_character_table(8), std::domain_error);
  CHECK_THROWS_AS(gl2_character_table(11), std::domain_error);
}

TEST_CASE("gl2 q=3 pinned rows") {
  auto T = gl2_character_table(3);
  // class order: z(0) z(1) u(0) u(1) s(0,1) ell(1) ell(2) ell(5)
  REQUIRE(T.classes.size() == 8);
  CHECK(T.classes[0].label == "z(0)");
  CHECK(T.classes[1].label == "z(1)");
  CHECK(T.classes[2].label == "u(0)");
  CHECK(T.classes[4].label == "s(0,1)");
  CHECK(T.classes[5].label == "ell(1)");
  CHECK(T.classes[6].label == "ell(2)");
  CHECK(T.classes[7].label == "ell(5)");
  std::vector<long> sizes = {1, 1, 8, 8, 12, 6, 6, 6};
  for (int c = 0; c < 8; ++c) CHECK(T.classes[c].size == sizes[c]);

  auto row = [&](IrrepKind k, std::vector<long> p) {
    int i = T.irrep_index(k, p);
    REQUIRE(i >= 0);
    return T.values[i];
  };
  auto expect = [&](const std::vector<CyclotomicNumber>& got, std::vector<CyclotomicNumber> want) {
    REQUIRE(got.size() == want.size());
    for (size_t c = 0; c < got.size(); ++c) CHECK(got[c] == want[c]);
  };

  CyclotomicNumber one(1), zero(0);
  expect(row(IrrepKind::Linear, {0}), {one, one, one, one, one, one, one, one});
  // det-sign character
  expect(row(IrrepKind::Linear, {1}), {one, one, one, one, -one, -one, one, -one});
  // Steinberg
  expect(row(IrrepKind::SteinbergTwist, {0}),
         {CyclotomicNumber(3), CyclotomicNumber(3), zero, zero, one, -one, -one, -one});
  // the unique principal series
  expect(row(IrrepKind::PrincipalSeries, {0, 1}),
         {CyclotomicNumber(4), CyclotomicNumber(-4), one, -one, zero, zero, zero, zero});
  // cuspidal of order-8 parameter
  CyclotomicNumber s = zeta(8, 1) + zeta(8, 3); // i sqrt(2)
  expect(row(IrrepKind::Cuspidal, {1}),
         {CyclotomicNumber(2), CyclotomicNumber(-2), -one, one, zero, -s, zero, s});
}

TEST_CASE("index lookup canonicalizes parameters") {
  auto T = gl2_character_table(3);
  CHECK(T.irrep_index(IrrepKind::Cuspidal, {3}) == T.irrep_index(IrrepKind::Cuspidal, {1}));
  CHECK(T.irrep_index(IrrepKind::Cuspidal, {6}) == T.irrep_index(IrrepKind::Cuspidal, {2}));
  CHECK(T.class_index(ClassKind::Elliptic, {6}) == T.class_index(ClassKind::Elliptic, {2}));
  CHECK(T.irrep_index(IrrepKind::PrincipalSeries, {1, 0}) ==
        T.irrep_index(IrrepKind::PrincipalSeries, {0, 1}));
  CHECK(T.irrep_index(IrrepKind::Linear, {-1}) == T.irrep_index(IrrepKind::Linear, {1}));
  CHECK(T.class_index(ClassKind::Elliptic, {4}) == -1); // eigenvalue in F_q
  CHECK(T.irrep_index(IrrepKind::PrincipalSeries, {1, 1}) == -1);
}

TEST_CASE("orthogonality is exact") {
  for (long q : {3, 5, 7, 9}) {
    auto rep = verify_orthogonality(gl2_character_table(q));
    CHECK(rep.ok());
    long nc = q * q - 1;
    CHECK(rep.row_checks == nc * (nc + 1) / 2);
    CHECK(rep.column_checks == nc * (nc + 1) / 2);
  }
  auto rep1 = verify_orthogonality(gl1_character_table(7));
  CHECK(rep1.ok());
}

TEST_CASE("gl1 group gamma equals torus gamma") {
  for (long q : {3, 5, 7}) {
    auto T = gl1_character_table(q);
    FiniteTorus torus(q, {1});
    AdditiveCharacter psi(q);
    for (long e = 0; e < q - 1; ++e) {
      auto a = group_gamma(T, T.irrep_index(IrrepKind::Linear, {e}), psi);
      auto b = torus_gamma(torus, FiniteTorusCharacter(torus, {e}), psi);
      CHECK(a == b);
      CHECK(a.q_half_power == -1);
    }
  }
}

TEST_CASE("gl2 gamma matches torus gamma on regular series") {
  // a principal series instance and a cuspidal instance of the main
  // torus-to-group comparison, ahead of the full sweep
  auto T = gl2_character_table(3);
  AdditiveCharacter psi(3);

  FiniteTorus split(3, {1, 1}, 2);
  auto gt = torus_gamma(split, FiniteTorusCharacter(split, {0, 1}), psi);
  auto gg = group_gamma(T, T.irrep_index(IrrepKind::PrincipalSeries, {0, 1}), psi);
  CHECK(gg.q_half_power == -4);
  CHECK(gg == gt);

  FiniteTorus cox(3, {2});
  auto ct = torus_gamma(cox, FiniteTorusCharacter(cox, {1}), psi);
  auto cg = group_gamma(T, T.irrep_index(IrrepKind::Cuspidal, {1}), psi);
  CHECK(cg == ct);
}

TEST_CASE("gamma of trivial and Steinberg by direct summation") {
  // gamma(trivial) = (1/9) sum_g psi(tr g) = 1/3 at q = 3 (hand count: the
  // class sum is 15 zeta_3^2 + 15 zeta_3 + 18 = 3); the trivial representation
  // appears in the degenerate series of both tori, so both torus gammas must
  // agree with it, fixing the sign convention of the whole comparison
  auto T = gl2_character_table(3);
  AdditiveCharacter psi(3);
  auto gU0 = group_gamma(T, T.irrep_index(IrrepKind::Linear, {0}), psi);
  auto gV0 = group_gamma(T, T.irrep_index(IrrepKind::SteinbergTwist, {0}), psi);
  CHECK(gU0 == GammaValue{3, CyclotomicNumber(3), -4});
  CHECK(gV0 == GammaValue{3, CyclotomicNumber(3), -4});

  FiniteTorus split(3, {1, 1}, 2), cox(3, {2});
  auto ts = torus_gamma(split, FiniteTorusCharacter(split, {0, 0}), psi);
  auto tc = torus_gamma(cox, FiniteTorusCharacter(cox, {0}), psi);
  CHECK(gU0 == ts);
  CHECK(gU0 == tc);
  CHECK(gV0 == tc);
}

TEST_CASE("central function closed form and round trip") {
  auto T = gl2_character_table(3);
  AdditiveCharacter psi(3);
  std::vector<GammaValue> gam;
  for (size_t i = 0; i < T.irreps.size(); ++i)
    gam.push_back(group_gamma(T, static_cast<int>(i), psi));

  auto phi = central_function_from_gamma(T, gam);
  CHECK(phi.q_half_power == -4);
  // the standard-weight central function is psi(trace) q^{-n^2/2}
  for (size_t c = 0; c < T.classes.size(); ++c)
    CHECK(phi.values[c] == zeta(3, psi.exponent_at(T.classes[c].trace)));

  for (size_t i = 0; i < T.irreps.size(); ++i)
    CHECK(gamma_from_central_function(T, phi, static_cast<int>(i)) == gam[i]);

  // gamma identically 1 inverts to the delta at the identity class
  std::vector<GammaValue> ones(T.irreps.size(), GammaValue{3, CyclotomicNumber(1), 0});
  auto delta = central_function_from_gamma(T, ones);
  CHECK(delta.q_half_power == 0);
  for (size_t c = 0; c < T.classes.size(); ++c)
    CHECK(delta.values[c] == CyclotomicNumber(c == 0 ? 1 : 0));

  // rank 1: Phi(g) = -q^{-1/2} psi(g)
  auto T1 = gl1_character_table(5);
  AdditiveCharacter psi5(5);
  std::vector<GammaValue> gam1;
  for (size_t i = 0; i < T1.irreps.size(); ++i)
    gam1.push_back(group_gamma(T1, static_cast<int>(i), psi5));
  auto phi1 = central_function_from_gamma(T1, gam1);
  CHECK(phi1.q_half_power == -1);
  for (size_t c = 0; c < T1.classes.size(); ++c)
    CHECK(phi1.values[c] == -zeta(5, psi5.exponent_at(T1.classes[c].trace)));
}

TEST_CASE("table error paths") {
  auto T = gl2_character_table(3);
  CHECK_THROWS_AS(group_gamma(T, -1, AdditiveCharacter(3)), std::invalid_argument);
  CHECK_THROWS_AS(group_gamma(T, 99, AdditiveCharacter(3)), std::invalid_argument);
  CHECK_THROWS_AS(group_gamma(T, 0, AdditiveCharacter(5)), std::invalid_argument);
  std::vector<GammaValue> bad(T.irreps.size(), GammaValue{3, CyclotomicNumber(1), 0});
  bad[3].q_half_power = 1;
  CHECK_THROWS_AS(central_function_from_gamma(T, bad), std::invalid_argument);
  bad.pop_back();
  CHECK_THROWS_AS(central_function_from_gamma(T, bad), std::invalid_argument);
}
