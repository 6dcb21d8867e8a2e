#include "thue/resolvent.hpp"

#include <optional>

namespace thue {

CInterval c_div(const CInterval& a, const CInterval& b) {
  Interval n = b.abs2();
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

CInterval c_pow3(const CInterval& a) { return a * a * a; }

namespace {

struct Ctx {
  unsigned w;
  std::array<Interval, 3> th;
  Interval ia;      // exact a
  Interval d16;     // D^{1/6}
  Interval d16inv;  // D^{-1/6}
  Interval s2, s3, s6;

  Ctx(const BinaryCubicForm& f, const Int& D, const RootTriple& roots, unsigned w_)
      : w(w_),
        th{roots.interval(0), roots.interval(1), roots.interval(2)},
        ia(Interval::exact(f.a, w_)),
        d16(Interval::exact(D, w_).root_n(6)),
        d16inv(Interval::exact(1L, w_) / d16),
        s2(Interval::exact(2L, w_).sqrt()),
        s3(Interval::exact(3L, w_).sqrt()),
        s6(Interval::exact(6L, w_).sqrt()) {}
};

Ctx make_ctx(const BinaryCubicForm& f, const Int& D, unsigned w) {
  RootTriple roots = cubic_real_roots(f.a, f.b, f.c, f.d, w);
  return Ctx(f, D, roots, w);
}

// |(theta_{j+1} - theta_{j+2}) (x - theta_j y)|, the magnitude deciding which
// resolvent pair the point is related to.
Interval class_weight(const Ctx& c, long long x, long long y, int j) {
  Interval X = Interval::exact(static_cast<long>(x), c.w);
  Interval Y = Interval::exact(static_cast<long>(y), c.w);
  int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
  return ((c.th[static_cast<size_t>(j1)] - c.th[static_cast<size_t>(j2)]) *
          (X - c.th[static_cast<size_t>(j)] * Y))
      .abs();
}

std::optional<int> classify_j(const Ctx& c, long long x, long long y) {
  std::array<Interval, 3> L{class_weight(c, x, y, 0), class_weight(c, x, y, 1),
                            class_weight(c, x, y, 2)};
  for (int j = 0; j < 3; ++j) {
    bool strict = true;
    for (int o = 0; o < 3; ++o)
      if (o != j && !L[static_cast<size_t>(j)].certainly_lt(L[static_cast<size_t>(o)]))
        strict = false;
    if (strict) return j;
  }
  return std::nullopt;
}

struct PointIntervals {
  Interval u1, u2, u3, p, q, t, s;
};

PointIntervals eval_intervals(const Ctx& c, long long x, long long y, int j) {
  Interval X = Interval::exact(static_cast<long>(x), c.w);
  Interval Y = Interval::exact(static_cast<long>(y), c.w);
  const Interval& t0 = c.th[static_cast<size_t>(j)];
  const Interval& t1 = c.th[static_cast<size_t>((j + 1) % 3)];
  const Interval& t2 = c.th[static_cast<size_t>((j + 2) % 3)];

  PointIntervals r{
      c.d16inv * c.ia * (t0 - t2) * (X - t1 * Y),
      c.d16inv * c.ia * (t1 - t0) * (X - t2 * Y),
      c.d16inv * c.ia * (t2 - t1) * (X - t0 * Y),
      Interval::exact(0L, c.w),
      Interval::exact(0L, c.w),
      Interval::exact(0L, c.w),
      Interval::exact(0L, c.w)};

  r.p = c.d16 * (r.u1 - r.u2) / c.s2;
  r.q = -(c.s6 * c.d16 * r.u3).mul_2si(-1);
  r.t = -(c.s6 * r.u3.abs().log()).mul_2si(-1);
  r.s = (r.u1.abs().log() - r.u2.abs().log()) / c.s2;
  return r;
}

}  // namespace

ResolventData::ResolventData(const BinaryCubicForm& f, unsigned prec_bits)
    : form_(f), disc_(discriminant(f)), prec_(clamp_prec(prec_bits)) {
  if (disc_ <= 0)
    throw NonPositiveDiscriminant("discriminant " + disc_.get_str() + " <= 0");
  if (!irreducible_over_q(f)) throw ReducibleForm("form has a rational linear factor");

  work_prec_ = clamp_prec(2 * prec_ + 64);
  roots_ = cubic_real_roots(f.a, f.b, f.c, f.d, work_prec_);
  Ctx c(form_, disc_, roots_, work_prec_);

  // Base pair from the assignment (a th0, a th2, a th1): this orientation
  // satisfies xi^3 - eta^3 = 3 sqrt(-3D) F with the principal branch.
  Interval half = Interval::exact(1L, work_prec_).mul_2si(-1);
  Interval s3h = c.s3.mul_2si(-1);

  const Interval &t0 = c.th[0], &t1 = c.th[1], &t2 = c.th[2];
  // left-root side: rho1 = a t0, rho1' = a t2, rho1'' = a t1
  xi1_ = CInterval{c.ia * (t0 - (t2 + t1) * half), c.ia * s3h * (t2 - t1)};
  eta1_ = xi1_.conj();
  // right roots are the complementary products a * ti * tj
  Interval p12 = t1 * t2, p01 = t0 * t1, p02 = t0 * t2;
  xi2_ = CInterval{c.ia * (p12 - (p01 + p02) * half), c.ia * s3h * (p01 - p02)};
  eta2_ = xi2_.conj();

  // Build-time certification of the Lagrange identities at (1,0) and (0,1):
  // |xi|^2 = H, 2 Re(xi^3) = G and 2 Im(xi^3) = 3 sqrt(3D) F.
  QuadraticForm h = hessian(f);
  BinaryCubicForm g = g_covariant(f);
  Interval sq3d = (Interval::exact(3 * disc_, work_prec_)).sqrt();
  auto check = [&](const Interval& v, const char* what) {
    if (!v.contains_zero())
      throw Error("Internal", std::string("resolvent identity failed: ") + what);
  };
  CInterval x13 = c_pow3(xi1_), x23 = c_pow3(xi2_);
  check(xi1_.abs2() - Interval::exact(h.A, work_prec_), "|xi1|^2 = A");
  check(xi2_.abs2() - Interval::exact(h.C, work_prec_), "|xi2|^2 = C");
  check(x13.re.mul_2si(1) - Interval::exact(g.a, work_prec_), "2Re xi1^3 = G(1,0)");
  check(x23.re.mul_2si(1) - Interval::exact(g.d, work_prec_), "2Re xi2^3 = G(0,1)");
  check(x13.im.mul_2si(1) - sq3d * Interval::exact(3 * f.a, work_prec_),
        "2Im xi1^3 = 3 sqrt(3D) a");
  check(x23.im.mul_2si(1) - sq3d * Interval::exact(3 * f.d, work_prec_),
        "2Im xi2^3 = 3 sqrt(3D) d");
}

ResolventData build_resolvent(const BinaryCubicForm& f, unsigned prec_bits) {
  return ResolventData(f, prec_bits);
}

CInterval ResolventData::xi_at(long long x, long long y) const {
  Interval X = Interval::exact(static_cast<long>(x), work_prec_);
  Interval Y = Interval::exact(static_cast<long>(y), work_prec_);
  return {xi1_.re * X + xi2_.re * Y, xi1_.im * X + xi2_.im * Y};
}

CInterval ResolventData::eta_at(long long x, long long y) const {
  return xi_at(x, y).conj();
}

namespace {

// Shared escalation driver: runs fn at increasing working precision until it
// produces a value, mapping precision exhaustion to the right error.
template <class Fn>
auto with_escalation(const BinaryCubicForm& f, const Int& D, const RootTriple& base,
                     unsigned base_w, Fn&& fn) {
  unsigned w = base_w;
  bool first = true;
  for (;;) {
    bool last = w >= kMaxPrecBits;
    try {
      Ctx c = first ? Ctx(f, D, base, base_w) : make_ctx(f, D, w);
      auto r = fn(c, last);
      if (r) return *r;
    } catch (const Indeterminate&) {
      if (last) throw;
    }
    if (last) throw PrecisionExhausted("resolvent evaluation at " +
                                       std::to_string(kMaxPrecBits) + " bits");
    first = false;
    w = w * 2 <= kMaxPrecBits ? w * 2 : kMaxPrecBits;
  }
}

}  // namespace

PointEvaluation eval_point_in_class(const ResolventData& r, long long x, long long y,
                                    int j) {
  if (x == 0 && y == 0) throw OriginPoint("(0,0) has no evaluation");
  Real tol = Real::of(1L, 64).mul_2si(-static_cast<long>(r.prec_bits()));
  return with_escalation(
      r.form(), r.disc(), r.roots(), r.work_prec(),
      [&](const Ctx& c, bool) -> std::optional<PointEvaluation> {
        PointIntervals pi = eval_intervals(c, x, y, j);
        for (const Interval* v : {&pi.u1, &pi.u2, &pi.u3, &pi.p, &pi.q, &pi.t, &pi.s})
          if (!(v->rad() <= tol)) return std::nullopt;
        PointEvaluation out;
        out.x = x;
        out.y = y;
        out.u1 = pi.u1.mid();
        out.u2 = pi.u2.mid();
        out.u3 = pi.u3.mid();
        out.p = pi.p.mid();
        out.q = pi.q.mid();
        out.t = pi.t.mid();
        out.s = pi.s.mid();
        out.related_index = ResolventData::k_of_j(j);
        return out;
      });
}

int classify_related(const ResolventData& r, long long x, long long y) {
  if (x == 0 && y == 0) throw OriginPoint("(0,0) is not classifiable");
  int j = with_escalation(r.form(), r.disc(), r.roots(), r.work_prec(),
                          [&](const Ctx& c, bool last) -> std::optional<int> {
                            auto j0 = classify_j(c, x, y);
                            if (j0) return j0;
                            if (last)
                              throw TieUnresolvable(
                                  "class weights still overlap at max precision");
                            return std::nullopt;
                          });
  return ResolventData::k_of_j(j);
}

PointEvaluation eval_point(const ResolventData& r, long long x, long long y) {
  int k = classify_related(r, x, y);
  return eval_point_in_class(r, x, y, ResolventData::j_of_k(k));
}

Interval g_interval(const Interval& t) {
  unsigned w = t.prec();
  Interval s6 = Interval::exact(6L, w).sqrt();
  Interval s2 = Interval::exact(2L, w).sqrt();
  Interval arg = (-(s6 * t).mul_2si(-1)).exp().mul_2si(-1);
  return s2 * arg.asinh();
}

Real g_function(const Real& t) {
  if (t.sgn() < 0) throw NegativeArgument("g is defined for t >= 0");
  unsigned p = std::max(t.prec(), static_cast<unsigned>(kMinPrecBits));
  Real abs_err = Real::of(1L, 64).mul_2si(-static_cast<long>(p) + 4);
  return eval_to_error([&](unsigned w) { return g_interval(Interval::exact(t, w)); },
                       abs_err, std::max(p, 128u));
}

Interval hessian_coordinate_bound(const Interval& t, const Interval& s, const Int& D,
                                  unsigned prec_bits, bool literal_exponent) {
  unsigned w = clamp_prec(prec_bits);
  Interval s2 = Interval::exact(2L, w).sqrt();
  Interval s6 = Interval::exact(6L, w).sqrt();
  Interval d13 = Interval::exact(D, w).root_n(3);
  Interval two = Interval::exact(2L, w);

  Interval e1 = (t.mul_2si(1) / s6).exp();
  Interval es = (s.mul_2si(1) / s2).exp();
  Interval cosh_term = (es + Interval::exact(1L, w) / es + two).mul_2si(-1);
  Interval decay = literal_exponent
                       ? (-(t * Interval::exact(4L, w)) / Interval::exact(6L, w)).exp()
                       : (-(t * Interval::exact(4L, w)) / s6).exp();
  Interval three_half = Interval::exact(3L, w).mul_2si(-1);
  return (d13 * (e1 * cosh_term + three_half * decay)).mul_2si(-1);
}

}  // namespace thue
