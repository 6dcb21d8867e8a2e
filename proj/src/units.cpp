#include "thue/units.hpp"

#include <algorithm>
#include <optional>

namespace thue {

namespace {

Int det3(const std::array<std::array<Int, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

CubicOrder::CubicOrder(const BinaryCubicForm& f, unsigned prec_bits)
    : f_(f), prec_(clamp_prec(prec_bits)) {
  if (f.a == -1) f_ = {1, -f.b, -f.c, -f.d};  // same roots, monic generator
  if (f_.a != 1)
    throw Error("NonMonicOrder", "Z[theta] requires a monic generator polynomial");
  if (!irreducible_over_q(f_)) throw ReducibleForm("generator polynomial is reducible");
  Int D = discriminant(f_);
  if (D <= 0) throw NonPositiveDiscriminant("discriminant " + D.get_str() + " <= 0");
  work_prec_ = clamp_prec(2 * prec_ + 64);
  roots_ = cubic_real_roots(f_.a, f_.b, f_.c, f_.d, work_prec_);
}

Int CubicOrder::norm(const OrderElement& e) const {
  const Int &b = f_.b, &c = f_.c, &d = f_.d;
  // representation matrix of e in the basis {1, theta, theta^2}
  std::array<std::array<Int, 3>, 3> m{{
      {e.e0, -d * e.e2, -d * e.e1 + b * d * e.e2},
      {e.e1, e.e0 - c * e.e2, -c * e.e1 + (b * c - d) * e.e2},
      {e.e2, e.e1 - b * e.e2, e.e0 - b * e.e1 + (b * b - c) * e.e2},
  }};
  return det3(m);
}

OrderElement CubicOrder::mul(const OrderElement& x, const OrderElement& y) const {
  const Int &b = f_.b, &c = f_.c, &d = f_.d;
  // convolution, then reduction by theta^3 = -b theta^2 - c theta - d and
  // theta^4 = -b theta^3 - c theta^2 - d theta
  Int c0 = x.e0 * y.e0;
  Int c1 = x.e0 * y.e1 + x.e1 * y.e0;
  Int c2 = x.e0 * y.e2 + x.e1 * y.e1 + x.e2 * y.e0;
  Int c3 = x.e1 * y.e2 + x.e2 * y.e1;
  Int c4 = x.e2 * y.e2;
  c3 += -b * c4;
  c2 += -c * c4;
  c1 += -d * c4;
  c2 += -b * c3;
  c1 += -c * c3;
  c0 += -d * c3;
  return {c0, c1, c2};
}

OrderElement CubicOrder::inverse(const OrderElement& e) const {
  Int n = norm(e);
  if (n != 1 && n != -1)
    throw Error("NotAUnit", "inverse requires norm +-1, got " + n.get_str());
  const Int &b = f_.b, &c = f_.c, &d = f_.d;
  std::array<std::array<Int, 3>, 3> m{{
      {e.e0, -d * e.e2, -d * e.e1 + b * d * e.e2},
      {e.e1, e.e0 - c * e.e2, -c * e.e1 + (b * c - d) * e.e2},
      {e.e2, e.e1 - b * e.e2, e.e0 - b * e.e1 + (b * b - c) * e.e2},
  }};
  // first column of the inverse: adjugate / det applied to (1,0,0)
  Int i0 = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) * n;
  Int i1 = -(m[1][0] * m[2][2] - m[1][2] * m[2][0]) * n;
  Int i2 = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) * n;
  return {i0, i1, i2};
}

OrderElement CubicOrder::power(const OrderElement& e, long n) const {
  OrderElement base = n < 0 ? inverse(e) : e;
  unsigned long k = static_cast<unsigned long>(n < 0 ? -n : n);
  OrderElement acc{1, 0, 0};
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

namespace {

std::array<Interval, 3> embeddings(const RootTriple& roots, const OrderElement& e,
                                   unsigned w) {
  std::array<Interval, 3> out{Interval::exact(0L, w), Interval::exact(0L, w),
                              Interval::exact(0L, w)};
  Interval c0 = Interval::exact(e.e0, w);
  Interval c1 = Interval::exact(e.e1, w);
  Interval c2 = Interval::exact(e.e2, w);
  for (int i = 0; i < 3; ++i) {
    Interval th = roots.interval(i);
    out[static_cast<size_t>(i)] = c0 + c1 * th + c2 * th.sqr();
  }
  return out;
}

}  // namespace

Vec3 CubicOrder::log_embed(const OrderElement& e) const {
  if (e.is_zero()) throw ZeroElement("log embedding of 0");
  unsigned w = work_prec_;
  for (;;) {
    bool last = w >= kMaxPrecBits;
    try {
      RootTriple rt = w == work_prec_ ? roots_ : cubic_real_roots(f_.a, f_.b, f_.c, f_.d, w);
      auto em = embeddings(rt, e, w);
      Vec3 out{Real(w), Real(w), Real(w)};
      for (int i = 0; i < 3; ++i)
        out[static_cast<size_t>(i)] = em[static_cast<size_t>(i)].abs().log().mid();
      return out;
    } catch (const Indeterminate&) {
      if (last) throw;
    }
    w = w * 2 <= kMaxPrecBits ? w * 2 : kMaxPrecBits;
  }
}

Real CubicOrder::abs_log_height(const OrderElement& e) const {
  if (e.is_zero()) throw ZeroElement("height of 0");
  Int n(::abs(norm(e)));
  Vec3 lv = log_embed(e);
  Real total = lv[0].abs() + lv[1].abs() + lv[2].abs();
  if (n != 1) {
    Interval ln = Interval::exact(n, work_prec_).log();
    total = total + ln.mid();
  }
  return total / Real::of(6L, work_prec_);
}

std::vector<OrderElement> search_units(const CubicOrder& order, long coeff_bound) {
  std::vector<OrderElement> found;
  for (long e0 = -coeff_bound; e0 <= coeff_bound; ++e0)
    for (long e1 = -coeff_bound; e1 <= coeff_bound; ++e1)
      for (long e2 = -coeff_bound; e2 <= coeff_bound; ++e2) {
        OrderElement e{e0, e1, e2};
        if (e.is_zero() || e.is_pm_one()) continue;
        Int n = order.norm(e);
        if (n == 1 || n == -1) found.push_back(e);
      }
  if (found.empty())
    throw EmptySearch("no units with |coeffs| <= " + std::to_string(coeff_bound));
  std::sort(found.begin(), found.end());
  return found;
}

Real vec_norm(const Vec3& v) {
  unsigned p = std::max({v[0].prec(), v[1].prec(), v[2].prec()});
  Real s = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  Real r(p);
  mpfr_sqrt(r.raw(), s.get(), MPFR_RNDN);
  return r;
}

Real vec_l1(const Vec3& v) { return v[0].abs() + v[1].abs() + v[2].abs(); }

namespace {

// 2D coordinates in the trace-zero plane w.r.t. the orthonormal pair
// alpha = (1,-1,0)/sqrt2, beta = (1,1,-2)/sqrt6.
struct P2 {
  Real x, y;

  Real norm2() const { return x * x + y * y; }
};

P2 project(const Vec3& v) {
  unsigned p = std::max({v[0].prec(), v[1].prec(), v[2].prec()});
  Real s2(p), s6(p);
  mpfr_sqrt_ui(s2.raw(), 2, MPFR_RNDN);
  mpfr_sqrt_ui(s6.raw(), 6, MPFR_RNDN);
  return {(v[0] - v[1]) / s2, (v[0] + v[1] - v[2].mul_2si(1)) / s6};
}

long round_to_long(const Real& x) {
  Real r(x.prec());
  mpfr_rint(r.raw(), x.get(), MPFR_RNDN);
  return mpfr_get_si(r.get(), MPFR_RNDN);
}

// working vector during lattice construction: 2D projection plus exact
// integer exponents over the generator list
struct WorkVec {
  P2 p;
  std::vector<Int> coeffs;
};

}  // namespace

UnitLattice build_lattice(const CubicOrder& order, const std::vector<OrderElement>& units) {
  if (units.empty()) throw RankDeficient("no units given");
  for (const auto& u : units) {
    Int n = order.norm(u);
    if (n != 1 && n != -1)
      throw Error("NotAUnit", "generator has norm " + n.get_str());
  }
  unsigned w = order.work_prec();
  Real tol = Real::of(1L, w).mul_2si(-static_cast<long>(order.prec_bits()) / 2);

  std::vector<Vec3> logs;
  logs.reserve(units.size());
  for (const auto& u : units) logs.push_back(order.log_embed(u));

  std::vector<WorkVec> pool;
  for (size_t i = 0; i < units.size(); ++i) {
    WorkVec v{project(logs[i]), std::vector<Int>(units.size(), Int(0))};
    v.coeffs[i] = 1;
    if (vec_norm(logs[i]) > tol) pool.push_back(std::move(v));
  }
  if (pool.empty()) throw RankDeficient("all log vectors vanish");

  auto norm2 = [](const WorkVec& v) { return v.p.norm2(); };
  auto sub_mult = [](WorkVec& v, long k, const WorkVec& b) {
    if (k == 0) return;
    Real kr = Real::of(k, v.p.x.prec());
    v.p.x = v.p.x - kr * b.p.x;
    v.p.y = v.p.y - kr * b.p.y;
    for (size_t i = 0; i < v.coeffs.size(); ++i) v.coeffs[i] -= k * b.coeffs[i];
  };

  // Greedy pass reduction: repeatedly reduce the pool against its two
  // shortest independent members until nothing shrinks. All bookkeeping is
  // exact in the generator exponents.
  Real tol2 = tol * tol;
  for (bool changed = true; changed;) {
    changed = false;
    std::sort(pool.begin(), pool.end(), [&](const WorkVec& a, const WorkVec& b) {
      Real na = a.p.norm2(), nb = b.p.norm2();
      if (na < nb) return true;
      if (nb < na) return false;
      return a.coeffs < b.coeffs;
    });
    // drop vanished vectors (multiplicative dependencies found)
    while (!pool.empty() && norm2(pool.front()) <= tol2)
      pool.erase(pool.begin());
    if (pool.empty()) throw RankDeficient("all log vectors vanish");

    const WorkVec b1 = pool[0];
    Real n1 = norm2(b1);
    std::optional<size_t> second;
    for (size_t i = 1; i < pool.size() && !second; ++i) {
      Real cross = pool[i].p.x * b1.p.y - pool[i].p.y * b1.p.x;
      if (cross.abs() * cross.abs() > tol2 * n1) second = i;
    }
    if (!second) {
      // rank 1 so far: reduce everything along b1
      for (size_t i = 1; i < pool.size(); ++i) {
        long k = round_to_long((pool[i].p.x * b1.p.x + pool[i].p.y * b1.p.y) / n1);
        if (k != 0) {
          sub_mult(pool[i], k, b1);
          changed = true;
        }
      }
      if (!changed) break;
      continue;
    }
    const WorkVec b2 = pool[*second];
    // Babai-round every other vector against (b1, b2)
    Real g11 = norm2(b1), g22 = norm2(b2);
    Real g12 = b1.p.x * b2.p.x + b1.p.y * b2.p.y;
    Real det = g11 * g22 - g12 * g12;
    for (size_t i = 0; i < pool.size(); ++i) {
      if (i == 0 || i == *second) continue;
      Real r1 = pool[i].p.x * b1.p.x + pool[i].p.y * b1.p.y;
      Real r2 = pool[i].p.x * b2.p.x + pool[i].p.y * b2.p.y;
      long k1 = round_to_long((r1 * g22 - r2 * g12) / det);
      long k2 = round_to_long((r2 * g11 - r1 * g12) / det);
      if (k1 != 0 || k2 != 0) {
        sub_mult(pool[i], k1, b1);
        sub_mult(pool[i], k2, b2);
        changed = true;
      }
    }
    // Gauss step on the leading pair
    {
      WorkVec& v2 = pool[*second];
      long k = round_to_long(g12 / g11);
      if (k != 0) {
        sub_mult(v2, k, b1);
        changed = true;
      }
    }
  }

  // surviving nonzero vectors: shortest is b1, shortest independent is b2
  std::vector<WorkVec> basis;
  for (const auto& v : pool) {
    if (norm2(v) <= tol2) continue;
    if (basis.empty()) {
      basis.push_back(v);
      continue;
    }
    Real cross = v.p.x * basis[0].p.y - v.p.y * basis[0].p.x;
    if (cross.abs() * cross.abs() > tol2 * norm2(basis[0])) {
      basis.push_back(v);
      break;
    }
  }
  if (basis.size() < 2)
    throw RankDeficient("log vectors span rank < 2 (multiplicatively dependent units)");

  // final Lagrange-Gauss reduction of the pair
  WorkVec b1 = basis[0], b2 = basis[1];
  for (;;) {
    if (norm2(b2) < norm2(b1)) std::swap(b1, b2);
    long k = round_to_long((b1.p.x * b2.p.x + b1.p.y * b2.p.y) / norm2(b1));
    if (k == 0) break;
    sub_mult(b2, k, b1);
  }

  // closure sweep: every surviving generator must decompose over (b1, b2)
  {
    Real g11 = norm2(b1), g22 = norm2(b2);
    Real g12 = b1.p.x * b2.p.x + b1.p.y * b2.p.y;
    Real det = g11 * g22 - g12 * g12;
    for (const auto& v : pool) {
      Real r1 = v.p.x * b1.p.x + v.p.y * b1.p.y;
      Real r2 = v.p.x * b2.p.x + v.p.y * b2.p.y;
      long k1 = round_to_long((r1 * g22 - r2 * g12) / det);
      long k2 = round_to_long((r2 * g11 - r1 * g12) / det);
      Real kx = Real::of(k1, w), ky = Real::of(k2, w);
      Real rx = v.p.x - kx * b1.p.x - ky * b2.p.x;
      Real ry = v.p.y - kx * b1.p.y - ky * b2.p.y;
      if (rx * rx + ry * ry > tol2)
        throw Error("Internal", "unit lattice closure failed");
    }
  }

  // materialize the basis elements and re-derive certified log-vectors
  auto element_of = [&](const WorkVec& v) {
    OrderElement e{1, 0, 0};
    for (size_t i = 0; i < units.size(); ++i) {
      if (v.coeffs[i] == 0) continue;
      long k = static_cast<long>(v.coeffs[i].get_si());
      e = order.mul(e, order.power(units[i], k));
    }
    return e;
  };

  UnitLattice lat;
  lat.generators = units;
  lat.prec_bits = order.prec_bits();
  lat.b1_element = element_of(b1);
  lat.b2_element = element_of(b2);
  lat.b1 = order.log_embed(lat.b1_element);
  lat.b2 = order.log_embed(lat.b2_element);
  P2 p1 = project(lat.b1), p2 = project(lat.b2);
  lat.covolume = (p1.x * p2.y - p1.y * p2.x).abs();
  return lat;
}

LogDecomposition decompose_log(const Vec3& target, const UnitLattice& lattice) {
  P2 t = project(target);
  P2 b1 = project(lattice.b1), b2 = project(lattice.b2);
  Real g11 = b1.norm2(), g22 = b2.norm2();
  Real g12 = b1.x * b2.x + b1.y * b2.y;
  Real det = g11 * g22 - g12 * g12;
  Real r1 = t.x * b1.x + t.y * b1.y;
  Real r2 = t.x * b2.x + t.y * b2.y;
  Real a = (r1 * g22 - r2 * g12) / det;
  Real b = (r2 * g11 - r1 * g12) / det;

  long a0 = round_to_long(a), b0 = round_to_long(b);
  LogDecomposition best;
  bool first = true;
  Real best_n2 = Real::of(0L, 64);
  for (long da = -1; da <= 1; ++da)
    for (long db = -1; db <= 1; ++db) {
      long m = a0 + da, n = b0 + db;
      Real rm = Real::of(m, t.x.prec()), rn = Real::of(n, t.x.prec());
      Real rx = t.x - rm * b1.x - rn * b2.x;
      Real ry = t.y - rm * b1.y - rn * b2.y;
      Real n2 = rx * rx + ry * ry;
      if (first || n2 < best_n2) {
        first = false;
        best_n2 = n2;
        best.m = m;
        best.n = n;
      }
    }
  Real rm = Real::of(best.m, target[0].prec()), rn = Real::of(best.n, target[0].prec());
  for (int i = 0; i < 3; ++i) {
    size_t k = static_cast<size_t>(i);
    best.residual[k] = target[k] - rm * lattice.b1[k] - rn * lattice.b2[k];
  }
  return best;
}

Int resultant_cubic_quadratic(const Int& a3, const Int& a2, const Int& a1, const Int& a0,
                              const Int& b2, const Int& b1, const Int& b0) {
  const Int z(0);
  std::array<std::array<Int, 5>, 5> m{{
      {a3, a2, a1, a0, z},
      {z, a3, a2, a1, a0},
      {b2, b1, b0, z, z},
      {z, b2, b1, b0, z},
      {z, z, b2, b1, b0},
  }};
  // cofactor expansion along the first column (5x5, exact)
  auto det4 = [](std::array<std::array<Int, 4>, 4> n) {
    Int s(0);
    for (int i = 0; i < 4; ++i) {
      std::array<std::array<Int, 3>, 3> sub;
      int r = 0;
      for (int j = 0; j < 4; ++j) {
        if (j == i) continue;
        sub[static_cast<size_t>(r)] = {n[static_cast<size_t>(j)][1],
                                       n[static_cast<size_t>(j)][2],
                                       n[static_cast<size_t>(j)][3]};
        ++r;
      }
      Int d = det3(sub);
      s += ((i % 2 == 0) ? 1 : -1) * n[static_cast<size_t>(i)][0] * d;
    }
    return s;
  };
  Int s(0);
  for (int i = 0; i < 5; ++i) {
    std::array<std::array<Int, 4>, 4> sub;
    int r = 0;
    for (int j = 0; j < 5; ++j) {
      if (j == i) continue;
      sub[static_cast<size_t>(r)] = {m[static_cast<size_t>(j)][1], m[static_cast<size_t>(j)][2],
                                     m[static_cast<size_t>(j)][3], m[static_cast<size_t>(j)][4]};
      ++r;
    }
    Int d = det4(sub);
    s += ((i % 2 == 0) ? 1 : -1) * m[static_cast<size_t>(i)][0] * d;
  }
  return s;
}

Real lambda1_ratio(const RootTriple& roots) {
  Interval num = roots.interval(0) - roots.interval(2);
  Interval den = roots.interval(1) - roots.interval(0);
  return (num / den).abs().mid();
}

Real lambda1_height_bound(const Real& u0_norm, const Int& D) {
  unsigned p = std::max(u0_norm.prec(), kDefaultPrecBits);
  Interval b = (Interval::exact(3L, p) * Interval::exact(u0_norm, p) +
                Interval::exact(D, p).log()) /
               Interval::exact(6L, p);
  return b.mid();
}

Real covolume_upper_bound(const Int& D, unsigned prec_bits) {
  unsigned w = clamp_prec(prec_bits);
  Interval d = Interval::exact(D, w);
  Interval s3 = Interval::exact(3L, w).sqrt();
  Interval l = d.log();
  return (s3.mul_2si(-3) * d.sqrt() * l * l).mid();
}

}  // namespace thue
