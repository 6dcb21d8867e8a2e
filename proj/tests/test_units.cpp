#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "thue/resolvent.hpp"
#include "thue/units.hpp"

using namespace thue;

namespace {

Real l2(const Vec3& v) { return vec_norm(v); }

Real small_tol(unsigned prec) {
  return Real::of(1L, 64).mul_2si(4 - static_cast<long>(prec) / 2);
}

}  // namespace

TEST_CASE("norms in Z[theta] for x^3 - 3x + 1") {
  CubicOrder order({1, 0, -3, 1}, 256);
  CHECK(order.norm({0, 1, 0}) == -1);    // theta
  CHECK(order.norm({-2, 0, 1}) == -1);   // theta^2 - 2
  CHECK(order.norm({2, 0, 0}) == 8);
  CHECK(order.norm({1, 0, 0}) == 1);
  CHECK_THROWS_AS((void)CubicOrder({2, 0, -3, 1}, 256), Error);  // non-monic rejected
}

TEST_CASE("companion-matrix norm agrees with the Sylvester resultant") {
  std::mt19937_64 rng(0xabcdef99);
  CubicOrder o81({1, 0, -3, 1}, 128);
  CubicOrder o49({1, 1, -2, -1}, 128);
  for (int i = 0; i < 300; ++i) {
    long e0 = static_cast<long>(rng() % 21) - 10;
    long e1 = static_cast<long>(rng() % 21) - 10;
    long e2 = static_cast<long>(rng() % 21) - 10;
    for (const CubicOrder* o : {&o81, &o49}) {
      const BinaryCubicForm& f = o->form();
      Int res = resultant_cubic_quadratic(f.a, f.b, f.c, f.d, e2, e1, e0);
      CHECK(res == o->norm({e0, e1, e2}));
    }
  }
}

TEST_CASE("ring operations: multiplication, powers, inverses of units") {
  CubicOrder order({1, 0, -3, 1}, 128);
  OrderElement th{0, 1, 0};
  OrderElement th2 = order.mul(th, th);
  CHECK(th2 == OrderElement{0, 0, 1});
  OrderElement inv = order.inverse(th);
  CHECK(order.mul(th, inv) == OrderElement{1, 0, 0});
  CHECK(order.power(th, 3) == order.mul(th2, th));
  CHECK(order.power(th, -2) == order.mul(inv, inv));
  CHECK_THROWS_AS((void)order.inverse(OrderElement{2, 0, 0}), Error);
}

TEST_CASE("log embedding examples") {
  CubicOrder order({1, 0, -3, 1}, 256);
  Real tol = small_tol(256);

  Vec3 one = order.log_embed({1, 0, 0});
  for (int i = 0; i < 3; ++i) CHECK(one[i].is_zero());

  Vec3 th = order.log_embed({0, 1, 0});  // unit: components sum to 0
  CHECK((th[0] + th[1] + th[2]).abs() <= tol);

  Vec3 two = order.log_embed({2, 0, 0});
  Real log2(256);
  mpfr_log_ui(log2.raw(), 2, MPFR_RNDN);
  for (int i = 0; i < 3; ++i) CHECK((two[i] - log2).abs() <= tol);
  Real log8(256);
  mpfr_log_ui(log8.raw(), 8, MPFR_RNDN);
  CHECK((two[0] + two[1] + two[2] - log8).abs() <= tol);

  CHECK_THROWS_AS((void)order.log_embed({0, 0, 0}), ZeroElement);
}

TEST_CASE("absolute logarithmic heights") {
  CubicOrder order({1, 0, -3, 1}, 256);
  Real tol = small_tol(256);
  CHECK(order.abs_log_height({1, 0, 0}).is_zero());
  Real log2(512);
  mpfr_log_ui(log2.raw(), 2, MPFR_RNDN);
  CHECK((order.abs_log_height({2, 0, 0}) - log2).abs() <= tol);
  CHECK_THROWS_AS((void)order.abs_log_height({0, 0, 0}), ZeroElement);

  // unit inequality: max(3h, |log|lambda||) <= ||tau(lambda)||
  for (const auto& u : search_units(order, 3)) {
    Vec3 v = order.log_embed(u);
    Real h3 = order.abs_log_height(u) * Real::of(3L, 256);
    Real n = l2(v);
    CHECK(h3 <= n + tol);
    CHECK(v[0].abs() <= n + tol);
  }
}

TEST_CASE("unit search examples") {
  CubicOrder o81({1, 0, -3, 1}, 128);
  auto u81 = search_units(o81, 3);
  CHECK(std::find(u81.begin(), u81.end(), OrderElement{0, 1, 0}) != u81.end());
  CHECK(std::find(u81.begin(), u81.end(), OrderElement{-2, 0, 1}) != u81.end());
  CHECK(std::is_sorted(u81.begin(), u81.end()));
  for (const auto& u : u81) {
    Int n = o81.norm(u);
    CHECK((n == 1 || n == -1));
    // cross-check with the exact resultant
    const BinaryCubicForm& f = o81.form();
    CHECK(resultant_cubic_quadratic(f.a, f.b, f.c, f.d, u.e2, u.e1, u.e0) == n);
  }

  CubicOrder o49({1, 1, -2, -1}, 128);
  CHECK_FALSE(search_units(o49, 3).empty());
  CHECK_THROWS_AS((void)search_units(o49, 0), EmptySearch);
}

TEST_CASE("lattice construction: rank errors and reduced-basis conditions") {
  CubicOrder order({1, 0, -3, 1}, 256);
  OrderElement th{0, 1, 0};
  CHECK_THROWS_AS((void)build_lattice(order, {th, order.mul(th, th)}), RankDeficient);
  CHECK_THROWS_AS((void)build_lattice(order, {th, OrderElement{2, 0, 0}}), Error);

  auto units = search_units(order, 5);
  UnitLattice lat = build_lattice(order, units);
  CHECK(lat.covolume.sgn() > 0);
  CHECK(lat.covolume.to_double() == doctest::Approx(1.4710090147498508).epsilon(1e-12));

  Real tol = small_tol(256);
  Real n1 = l2(lat.b1), n2 = l2(lat.b2);
  CHECK(n1 <= n2 + tol);
  // angle between pi/3 and 2pi/3: |cos| <= 1/2
  Real dot = lat.b1[0] * lat.b2[0] + lat.b1[1] * lat.b2[1] + lat.b1[2] * lat.b2[2];
  CHECK(dot.abs() <= n1 * n2 * Real::from_decimal("0.5000001", 64));
  // ||b1|| ||b2|| <= (2/sqrt3) covolume
  Real two_over_s3(256);
  mpfr_sqrt_ui(two_over_s3.raw(), 3, MPFR_RNDN);
  two_over_s3 = Real::of(2L, 256) / two_over_s3;
  CHECK(n1 * n2 <= two_over_s3 * lat.covolume + tol);
  // basis vectors live in the trace-zero plane
  CHECK((lat.b1[0] + lat.b1[1] + lat.b1[2]).abs() <= tol);
  CHECK((lat.b2[0] + lat.b2[1] + lat.b2[2]).abs() <= tol);

  // condition (i): b1 is no longer than any unit log-vector; condition (ii):
  // b2 is no longer than any vector independent of b1
  for (const auto& u : units) {
    Vec3 v = order.log_embed(u);
    Real nv = l2(v);
    if (nv <= tol) continue;
    CHECK(n1 <= nv + tol);
    LogDecomposition d = decompose_log(v, lat);
    if (d.n != 0) CHECK(n2 <= nv + tol);
  }

  // Louboutin-style cap for the corpus
  CHECK(lat.covolume <= covolume_upper_bound(81, 256));
  CubicOrder o49({1, 1, -2, -1}, 256);
  UnitLattice lat49 = build_lattice(o49, search_units(o49, 3));
  CHECK(lat49.covolume.to_double() == doctest::Approx(0.9101142065112492).epsilon(1e-12));
  CHECK(lat49.covolume <= covolume_upper_bound(49, 256));
}

TEST_CASE("decompose_log examples and round trip") {
  CubicOrder order({1, 0, -3, 1}, 256);
  UnitLattice lat = build_lattice(order, search_units(order, 5));
  Real tol = small_tol(256);

  LogDecomposition d1 = decompose_log(lat.b1, lat);
  CHECK(d1.m == 1);
  CHECK(d1.n == 0);
  CHECK(l2(d1.residual) <= tol);

  Vec3 zero{Real::of(0L, 256), Real::of(0L, 256), Real::of(0L, 256)};
  LogDecomposition d0 = decompose_log(zero, lat);
  CHECK(d0.m == 0);
  CHECK(d0.n == 0);

  // lambda2^2 * lambda3^{-1} decomposes as (2, -1)
  OrderElement prod = order.mul(order.power(lat.b1_element, 2), order.inverse(lat.b2_element));
  LogDecomposition d2 = decompose_log(order.log_embed(prod), lat);
  CHECK(d2.m == 2);
  CHECK(d2.n == -1);
  CHECK(l2(d2.residual) <= tol);

  // residual bound (||b1|| + ||b2||)/2 and reconstruction for random (m, n)
  std::mt19937_64 rng(0x5ca1ab1e);
  Real cap = (l2(lat.b1) + l2(lat.b2)).mul_2si(-1) + tol;
  for (int i = 0; i < 50; ++i) {
    long m = static_cast<long>(rng() % 7) - 3;
    long n = static_cast<long>(rng() % 7) - 3;
    Vec3 target;
    for (int k = 0; k < 3; ++k)
      target[k] = Real::of(m, 256) * lat.b1[k] + Real::of(n, 256) * lat.b2[k];
    LogDecomposition d = decompose_log(target, lat);
    CHECK(d.m == m);
    CHECK(d.n == n);
    CHECK(l2(d.residual) <= cap);
  }
}

TEST_CASE("coefficient bound for solution decompositions") {
  // every solution's u-vector differs from the minimal one by a lattice
  // vector whose coefficients obey m |b1|_1, n |b2|_1 <= 3(||u|| + ||u0||)
  BinaryCubicForm f{1, 0, -3, 1};
  CubicOrder order(f, 256);
  UnitLattice lat = build_lattice(order, search_units(order, 5));
  ResolventData res = build_resolvent(f, 256);
  const std::vector<std::pair<long long, long long>> sols = {
      {1, 0}, {0, 1}, {-1, -1}, {1, 3}, {2, -1}, {-3, -2}};

  // all u-vectors in the fixed base-pair chart
  struct Entry {
    Vec3 v;
    Real norm;
    long long x, y;
  };
  std::vector<Entry> entries;
  for (auto [x, y] : sols) {
    PointEvaluation ev = eval_point_in_class(res, x, y, 0);
    unsigned p = ev.u1.prec();
    Vec3 v;
    for (int i = 0; i < 3; ++i) {
      Real t(p);
      mpfr_log(t.raw(), (i == 0 ? ev.u1 : i == 1 ? ev.u2 : ev.u3).abs().get(), MPFR_RNDN);
      v[i] = t;
    }
    entries.push_back({v, vec_norm(v), x, y});
  }
  // minimal-norm solution, lexicographic tie-break on (x, y)
  size_t i0 = 0;
  for (size_t i = 1; i < entries.size(); ++i) {
    Real diff = entries[i].norm - entries[i0].norm;
    if (diff < -small_tol(400)) {
      i0 = i;
    } else if (diff.abs() <= small_tol(400)) {
      if (std::make_pair(entries[i].x, entries[i].y) <
          std::make_pair(entries[i0].x, entries[i0].y))
        i0 = i;
    }
  }
  Real slack = Real::from_decimal("1e-6", 64);
  Real b1l1 = vec_l1(lat.b1), b2l1 = vec_l1(lat.b2);
  Real tol = small_tol(256);
  for (size_t i = 0; i < entries.size(); ++i) {
    Vec3 target;
    for (int k = 0; k < 3; ++k) target[k] = entries[i].v[k] - entries[i0].v[k];
    LogDecomposition d = decompose_log(target, lat);
    CHECK(l2(d.residual) <= tol);  // differences of solution u-vectors are lattice points
    Real cap = Real::of(3L, 256) * (entries[i].norm + entries[i0].norm) + slack;
    CHECK(Real::of(std::abs(d.m), 256) * b1l1 <= cap);
    CHECK(Real::of(std::abs(d.n), 256) * b2l1 <= cap);
  }
}

TEST_CASE("lambda1 ratio and its height cap") {
  RootTriple roots = cubic_real_roots(1, 0, -3, 1, 256);
  Real l1 = lambda1_ratio(roots);
  CHECK(l1.sgn() > 0);
  // for this field the ratio coincides with the largest root
  CHECK(l1.to_double() == doctest::Approx(1.5320888862379561).epsilon(1e-12));

  Real u0 = Real::from_decimal("0.75", 256);
  Real cap = lambda1_height_bound(u0, 81);
  // (3 * 0.75 + log 81) / 6
  Real expect(256);
  mpfr_log_ui(expect.raw(), 81, MPFR_RNDN);
  expect = (Real::from_decimal("2.25", 256) + expect) / Real::of(6L, 256);
  CHECK((cap - expect).abs() <= Real::from_decimal("1e-60", 64));
}
