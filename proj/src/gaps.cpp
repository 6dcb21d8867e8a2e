#include "thue/gaps.hpp"

#include <algorithm>

namespace thue {

namespace {

Real sqrt_ui(unsigned long v, unsigned prec) {
  Real r(prec);
  mpfr_sqrt_ui(r.raw(), v, MPFR_RNDN);
  return r;
}

Real log_int(const Int& v, unsigned prec) {
  Real r = Real::of(v, prec);
  mpfr_log(r.raw(), r.get(), MPFR_RNDN);
  return r;
}

Real exp_r(const Real& v) {
  Real r(v.prec());
  mpfr_exp(r.raw(), v.get(), MPFR_RNDN);
  return r;
}

}  // namespace

Real gap_tolerance(unsigned prec_bits) {
  return Real::of(1L, 64).mul_2si(8 - static_cast<long>(clamp_prec(prec_bits)) / 2);
}

std::pair<bool, std::optional<std::pair<long long, long long>>> hessian_floor_check(
    const BinaryCubicForm& f,
    const std::vector<std::pair<long long, long long>>& solutions) {
  Int D = discriminant(f);
  QuadraticForm h = hessian(f);
  std::vector<std::pair<long long, long long>> violators;
  for (const auto& [x, y] : solutions) {
    Int hv = evaluate(h, Int(static_cast<long>(x)), Int(static_cast<long>(y)));
    // H < (1/2) sqrt(3D)  <=>  H < 0 or 4 H^2 < 3 D
    if (hv < 0 || 4 * hv * hv < 3 * D) violators.emplace_back(x, y);
  }
  std::sort(violators.begin(), violators.end());
  if (violators.empty()) return {true, std::nullopt};
  if (violators.size() == 1) return {true, violators.front()};
  return {false, violators.front()};
}

Real pq_gap(const PointEvaluation& e1, const PointEvaluation& e2, const Int& D) {
  (void)D;
  if (e1.x == e2.x && e1.y == e2.y) throw SamePoint("identical points");
  if (e1.x == -e2.x && e1.y == -e2.y)
    throw SamePoint("points are negatives of each other");
  return (e1.p * e2.q - e2.p * e1.q).abs();
}

Real gap_growth_rhs(const Real& t, const Int& D) {
  unsigned p = std::max(t.prec(), kDefaultPrecBits);
  Real s6 = sqrt_ui(6, p);
  Real s2 = sqrt_ui(2, p);
  Real inner = Real::of(2L, p) + Real::of(1L, p) / s2;
  Real log_inner(p);
  mpfr_log(log_inner.raw(), inner.get(), MPFR_RNDN);
  return t.mul_2si(1) + s6 * log_int(D, p) / Real::of(6L, p) - s6 * log_inner;
}

bool gap_growth_check(const Real& t, const Real& t_next, const Int& D) {
  return t_next >= gap_growth_rhs(t, D) - gap_tolerance(t.prec());
}

Real gap_theorem_lower(const Real& t, const Real& t_prime, const Real& vol) {
  unsigned p = std::max({t.prec(), t_prime.prec(), vol.prec(), kDefaultPrecBits});
  Real s6 = sqrt_ui(6, p);
  Real s5 = sqrt_ui(5, p);
  Real s2 = sqrt_ui(2, p);
  Real numer = s2 * vol * exp_r((s6 * t).mul_2si(-1));
  Real denom = Real::of(1L, p) + exp_r(-(s6 * (t_prime - t)) / s5);
  return numer / denom;
}

DiscBounds disc_from_t(const Real& t) {
  if (t.sgn() <= 0 && !t.is_zero())
    throw NegativeArgument("t must be positive");
  unsigned p = std::max(t.prec(), kDefaultPrecBits);
  Real s6 = sqrt_ui(6, p);
  Real e = exp_r((s6 * t).mul_2si(1));
  DiscBounds b{Real::of(64L, p) * e, e.mul_2si(-1), t >= Real::of(5L, p)};
  return b;
}

Real triangle_area2(const PointEvaluation& a, const PointEvaluation& b,
                    const PointEvaluation& c) {
  return ((b.t - a.t) * (c.s - a.s) - (c.t - a.t) * (b.s - a.s)).abs();
}

GapReport build_gap_report(const std::string& form_label, int related_index,
                           std::vector<PointEvaluation> points, const Int& D,
                           const std::optional<Real>& covolume, unsigned prec_bits) {
  std::sort(points.begin(), points.end(),
            [](const PointEvaluation& a, const PointEvaluation& b) { return a.t < b.t; });
  for (size_t i = 0; i + 1 < points.size(); ++i)
    if (points[i].t == points[i + 1].t)
      throw TieUnresolvable("two distinct class members with identical t");
  GapReport rep;
  rep.form_label = form_label;
  rep.related_index = related_index;
  rep.points = points;

  Real tol = gap_tolerance(prec_bits);
  unsigned p = clamp_prec(prec_bits);
  Real sqrt3d(p);
  {
    Real t = Real::of(3 * D, p);
    mpfr_sqrt(sqrt3d.raw(), t.get(), MPFR_RNDN);
  }

  auto tag = [&](size_t i) { return std::to_string(i); };

  const auto& pts = rep.points;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) {
      Real v = pq_gap(pts[i], pts[j], D);
      Real margin = v - sqrt3d;
      rep.checks.push_back(
          {"pq_gap[" + tag(i) + "," + tag(j) + "]", margin >= -tol, margin});
    }

  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    Real margin = pts[i + 1].t - gap_growth_rhs(pts[i].t, D);
    rep.checks.push_back(
        {"gap_growth[" + tag(i) + "," + tag(i + 1) + "]", margin >= -tol, margin});
  }

  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      for (size_t k = j + 1; k < pts.size(); ++k) {
        Real a2 = triangle_area2(pts[i], pts[j], pts[k]);
        rep.checks.push_back({"triangle_nondegenerate[" + tag(i) + "," + tag(j) + "," +
                                  tag(k) + "]",
                              a2.sgn() > 0, a2});
        if (covolume) {
          Real m1 = a2 - *covolume;
          rep.checks.push_back({"triangle_area_vs_covolume[" + tag(i) + "," + tag(j) +
                                    "," + tag(k) + "]",
                                m1 >= -tol, m1});
          Real lower = gap_theorem_lower(pts[i].t, pts[j].t, *covolume);
          Real m2 = pts[k].t - lower;
          rep.checks.push_back({"gap_theorem_lower[" + tag(i) + "," + tag(j) + "," +
                                    tag(k) + "]",
                                m2 >= -tol, m2});
        }
      }

  for (size_t i = 0; i < pts.size(); ++i) {
    DiscBounds b = disc_from_t(pts[i].t);
    Real dv = Real::of(D, p);
    Real margin = b.general - dv;
    rep.checks.push_back({"disc_general_bound[" + tag(i) + "]", margin >= -tol, margin});
    if (b.refined_valid) {
      Real m2 = b.refined - dv;
      rep.checks.push_back({"disc_refined_bound[" + tag(i) + "]", m2 >= -tol, m2});
    }
  }

  return rep;
}

}  // namespace thue
