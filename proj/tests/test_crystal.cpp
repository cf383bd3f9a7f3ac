#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gammalift/crystal.hpp"

using namespace gammalift;

static CrystalPoint pt(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<BigRational>> entries;
  for (auto& r : rows) {
    std::vector<BigRational> row;
    for (long v : r) row.push_back(BigRational(v));
    entries.push_back(row);
  }
  return CrystalPoint::numeric(entries);
}

TEST_CASE("delta values and term counts") {
  auto t = pt({{1, 2}, {3, 4}});
  CHECK(delta_k(t, 1).num == BigRational(1));
  CHECK(delta_k(t, 2).num == BigRational(5)); // t11 + t22

  auto s = CrystalPoint::symbolic(2, 2);
  auto d2 = delta_k(s, 2).fn;
  CHECK(d2 == s.fn(0, 0) + s.fn(1, 1));

  auto s4 = CrystalPoint::symbolic(2, 4);
  for (int k = 1; k <= 4; ++k) {
    auto d = delta_k(s4, k).fn;
    CHECK(d.den() == MultivariatePolynomial::constant(8, BigRational(1)));
    CHECK(d.num().terms().size() == static_cast<size_t>(k));
  }
}

TEST_CASE("eta values") {
  auto t = pt({{1, 2}, {3, 4}});
  CHECK(eta(t).num == BigRational(-2));

  auto equal_rows = pt({{1, 2, 3}, {3, 2, 1}});
  CHECK(eta(equal_rows).num == BigRational(0));

  auto s = CrystalPoint::symbolic(2, 2);
  RationalFunction t11 = s.fn(0, 0), t12 = s.fn(0, 1), t21 = s.fn(1, 0), t22 = s.fn(1, 1);
  CHECK(eta(s).fn == (t11 * t12 - t21 * t22) / (t11 + t22));
}

TEST_CASE("two-row involution, numeric instances") {
  auto t = pt({{1, 2}, {3, 4}});
  CHECK(tau_tworow(t) == pt({{3, 4}, {1, 2}}));
  CHECK(tau_tworow(tau_tworow(t)) == t);

  // equal row products force eta = 0 and the identity map
  auto fixed = pt({{1, 2, 3}, {3, 2, 1}});
  CHECK(tau_tworow(fixed) == fixed);

  auto u = pt({{5, 7, 11}, {2, 3, 13}});
  auto v = tau_tworow(u);
  CHECK(tau_tworow(v) == u);
  CHECK(entry_sum(v) == entry_sum(u));
  CHECK(column_products(v) == column_products(u));
  auto rp = row_products(u);
  std::swap(rp[0], rp[1]);
  CHECK(row_products(v) == rp);
}

TEST_CASE("two-by-two symbolic closed form") {
  auto s = CrystalPoint::symbolic(2, 2);
  RationalFunction t11 = s.fn(0, 0), t12 = s.fn(0, 1), t21 = s.fn(1, 0), t22 = s.fn(1, 1);
  auto im = tau_tworow(s);
  RationalFunction d1 = t11 + t22, d2 = t12 + t21;
  CHECK(im.fn(0, 0) == t21 * d1 / d2);
  CHECK(im.fn(0, 1) == t22 * d2 / d1);
  CHECK(im.fn(1, 0) == t11 * d2 / d1);
  CHECK(im.fn(1, 1) == t12 * d1 / d2);
}

TEST_CASE("tau1 and tau2 on larger shapes") {
  auto t = pt({{2, 3, 5}, {7, 11, 13}, {17, 19, 23}});
  auto a = tau1(t, 2);
  CHECK(column_products(a) == column_products(t));
  auto rp = row_products(t);
  std::swap(rp[1], rp[2]);
  CHECK(row_products(a) == rp);
  CHECK(tau1(tau1(t, 2), 2) == t);

  auto b = tau2(t, 1);
  CHECK(row_products(b) == row_products(t));
  auto cp = column_products(t);
  std::swap(cp[0], cp[1]);
  CHECK(column_products(b) == cp);
  CHECK(entry_sum(b) == entry_sum(t));
  CHECK(tau2(tau2(t, 1), 1) == t);

  CHECK(tau2(t, 1) == transpose(tau1(transpose(t), 1)));
  auto two_row = pt({{1, 2}, {3, 4}});
  CHECK(tau1(two_row, 1) == tau_tworow(two_row));
}

TEST_CASE("jacobian sign") {
  auto t = pt({{1, 2}, {3, 4}});
  CHECK(jacobian_sign(t) == BigRational(-1));

  auto u = pt({{5, 7, 11}, {2, 3, 13}});
  CHECK(jacobian_sign(u) == BigRational(-1));
  // chain rule on the involution
  CHECK(jacobian_sign(u) * jacobian_sign(tau_tworow(u)) == BigRational(1));
}

TEST_CASE("randomized relation certification") {
  auto r22 = verify_weyl_action(2, 2, 25, 7);
  CHECK(r22.all_passed());
  CHECK(r22.involution == 25 * 2);
  CHECK(r22.cross == 25);
  CHECK(r22.braid == 0);
  CHECK(r22.jacobian == 25);

  auto r23 = verify_weyl_action(2, 3, 25, 11);
  CHECK(r23.all_passed());
  CHECK(r23.involution == 25 * 3);
  CHECK(r23.braid == 25);     // tau2 braid only
  CHECK(r23.cross == 25 * 2);

  auto r32 = verify_weyl_action(3, 2, 25, 13);
  CHECK(r32.all_passed());

  auto r33 = verify_weyl_action(3, 3, 25, 5);
  CHECK(r33.all_passed());
  CHECK(r33.involution == 25 * 4);
  CHECK(r33.braid == 25 * 2);
  CHECK(r33.cross == 25 * 4);
  CHECK(r33.sum_invariance == 25 * 4);
  CHECK(r33.column_products == 25 * 4);
  CHECK(r33.jacobian == 25 * 2);
}
