#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "thue/numerics.hpp"

using namespace thue;

namespace {

// independent root oracle: double bisection on sign changes
std::vector<double> bisect_roots(double a, double b, double c, double d) {
  auto f = [&](double x) { return ((a * x + b) * x + c) * x + d; };
  std::vector<double> roots;
  double lo = -1000, step = 1e-3;
  double prev = f(lo);
  for (double x = lo + step; x <= 1000; x += step) {
    double cur = f(x);
    if (prev == 0.0) roots.push_back(x - step);
    if (prev * cur < 0) {
      double l = x - step, h = x;
      for (int i = 0; i < 80; ++i) {
        double m = (l + h) / 2;
        (f(l) * f(m) <= 0 ? h : l) = m;
      }
      roots.push_back((l + h) / 2);
    }
    prev = cur;
  }
  return roots;
}

}  // namespace

TEST_CASE("certified roots of x^3 - 3x + 1 match the bisection oracle") {
  RootTriple rt = cubic_real_roots(1, 0, -3, 1, 128);
  auto oracle = bisect_roots(1, 0, -3, 1);
  REQUIRE(oracle.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(rt.roots[i].to_double() ==
          doctest::Approx(oracle[static_cast<size_t>(i)]).epsilon(1e-7));
  }
  // frozen oracle decimals
  CHECK(rt.roots[0].to_double() == doctest::Approx(-1.8793852415718166).epsilon(1e-9));
  CHECK(rt.roots[1].to_double() == doctest::Approx(0.3472963553338607).epsilon(1e-9));
  CHECK(rt.roots[2].to_double() == doctest::Approx(1.5320888862379561).epsilon(1e-9));
  // half-width contract
  for (int i = 0; i < 3; ++i) {
    Real cap = Real::of(1L, 128).mul_2si(-64);
    Real scale = rt.roots[i].abs() < Real::of(1L, 128) ? Real::of(1L, 128)
                                                       : rt.roots[i].abs();
    CHECK(rt.half_widths[i] <= cap * scale);
  }
}

TEST_CASE("reducible cubic x^3 - x: error only when irreducibility is checked") {
  // positive discriminant, so NonPositiveDiscriminant must not fire
  CHECK_THROWS_AS((void)cubic_real_roots(1, 0, -1, 0, 64, true), ReduciblePolynomial);
  RootTriple rt = cubic_real_roots(1, 0, -1, 0, 64, false);
  CHECK(rt.roots[0].to_double() == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(rt.roots[1].to_double() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(rt.roots[2].to_double() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Viete check: product of roots of x^3 + x^2 - 2x - 1 is 1") {
  RootTriple rt = cubic_real_roots(1, 1, -2, -1, 128);
  Interval prod = rt.interval(0) * rt.interval(1) * rt.interval(2);
  CHECK(prod.contains(Real::of(1L, 128)));
}

TEST_CASE("root isolation error paths") {
  CHECK_THROWS_AS((void)cubic_real_roots(0, 1, -2, 1, 128), DegenerateLeadingCoefficient);
  CHECK_THROWS_AS((void)cubic_real_roots(1, 0, 3, 1, 128), NonPositiveDiscriminant);
}

TEST_CASE("eval_to_error examples") {
  Real err6 = Real::from_decimal("1e-6", 128);
  Real v = eval_to_error(
      [](unsigned p) {
        return Interval::exact(2L, p).sqrt() *
               (Interval::exact(1L, p).mul_2si(-1)).asinh();
      },
      err6);
  CHECK(v.to_double() == doctest::Approx(0.6805362893736004).epsilon(1e-9));

  Real err30 = Real::from_decimal("1e-30", 256);
  Real z = eval_to_error([](unsigned p) { return Interval::exact(1L, p).log(); }, err30);
  CHECK(z.is_zero());

  Real err20 = Real::from_decimal("1e-20", 256);
  Real seven = eval_to_error(
      [](unsigned p) { return Interval::exact(7L, p).log().exp(); }, err20);
  Real diff = (seven - Real::of(7L, 256)).abs();
  CHECK(diff <= err20);
}

TEST_CASE("eval_to_error error conditions survive escalation") {
  Real err = Real::from_decimal("1e-6", 64);
  CHECK_THROWS_AS(
      (void)eval_to_error(
          [](unsigned p) { return Interval::exact(1L, p) / Interval::exact(0L, p); }, err),
      DivisionNearZero);
  CHECK_THROWS_AS(
      (void)eval_to_error([](unsigned p) { return Interval::exact(0L, p).log(); }, err),
      LogOfNonPositive);
}

TEST_CASE("500 random monic positive-discriminant cubics: interval contains a root") {
  std::mt19937_64 rng(0xfeedbeef);
  auto coeff = [&]() { return static_cast<long>(rng() % 201) - 100; };
  int done = 0;
  while (done < 500) {
    Int b = coeff(), c = coeff(), d = coeff();
    if (cubic_poly_discriminant(1, b, c, d) <= 0) continue;
    if (cubic_has_rational_root(1, b, c, d)) continue;
    RootTriple rt = cubic_real_roots(1, b, c, d, 128);
    for (int i = 0; i < 3; ++i) {
      Interval x = rt.interval(i);
      Interval val = x.pow_int(3) + Interval::exact(b, 128) * x.sqr() +
                     Interval::exact(c, 128) * x + Interval::exact(d, 128);
      CHECK(val.contains_zero());
    }
    // ascending and disjoint
    CHECK(rt.interval(0).hi() < rt.interval(1).lo());
    CHECK(rt.interval(1).hi() < rt.interval(2).lo());
    ++done;
  }
}

TEST_CASE("root extraction is deterministic") {
  RootTriple a = cubic_real_roots(1, 1, -4, 1, 256);
  RootTriple b = cubic_real_roots(1, 1, -4, 1, 256);
  for (int i = 0; i < 3; ++i) {
    CHECK(a.roots[i] == b.roots[i]);
    CHECK(a.half_widths[i] == b.half_widths[i]);
    CHECK(a.roots[i].str(40) == b.roots[i].str(40));
  }
}

TEST_CASE("eval_to_error is monotone in abs_err against a 4x-precision reference") {
  auto expr = [](unsigned p) {
    return Interval::exact(2L, p).sqrt() * (Interval::exact(1L, p).mul_2si(-1)).asinh() +
           Interval::exact(7L, p).log();
  };
  Real ref = eval_to_error(expr, Real::of(1L, 1024).mul_2si(-500), 1024);
  Real loose = eval_to_error(expr, Real::from_decimal("1e-6", 256));
  Real tight = eval_to_error(expr, Real::from_decimal("1e-12", 256));
  Real slack = Real::of(1L, 256).mul_2si(-200);
  CHECK((tight - ref).abs() <= (loose - ref).abs() + slack);
}

TEST_CASE("interval arithmetic basics stay outward-rounded") {
  Interval third = Interval::exact(1L, 64) / Interval::exact(3L, 64);
  CHECK(third.lo() < third.hi());
  Interval one = third * Interval::exact(3L, 64);
  CHECK(one.contains(Real::of(1L, 64)));
  Interval neg = Interval::exact(-2L, 64);
  CHECK(neg.sqr().contains(Real::of(4L, 64)));
  CHECK_THROWS_AS((void)Interval::exact(-1L, 64).sqrt(), SqrtOfNegative);
}
