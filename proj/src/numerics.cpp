#include "thue/numerics.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace thue {

unsigned clamp_prec(unsigned prec_bits) {
  return std::max(kMinPrecBits, std::min(prec_bits, kMaxPrecBits));
}

// ---------------------------------------------------------------------------
// Real

Real::Real(unsigned prec_bits) {
  mpfr_init2(x_, clamp_prec(prec_bits));
  mpfr_set_zero(x_, 1);
}

Real::Real(const Real& o) {
  mpfr_init2(x_, mpfr_get_prec(o.x_));
  mpfr_set(x_, o.x_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(x_, mpfr_get_prec(o.x_));
  mpfr_swap(x_, o.x_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  if (this != &o) mpfr_swap(x_, o.x_);
  return *this;
}

Real::~Real() { mpfr_clear(x_); }

Real Real::of(long v, unsigned prec_bits) {
  Real r(prec_bits);
  mpfr_set_si(r.x_, v, MPFR_RNDN);
  return r;
}

Real Real::of(const Int& v, unsigned prec_bits) {
  Real r(prec_bits);
  mpfr_set_z(r.x_, v.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real Real::of_double(double v, unsigned prec_bits) {
  Real r(prec_bits);
  mpfr_set_d(r.x_, v, MPFR_RNDN);
  return r;
}

Real Real::from_decimal(const std::string& s, unsigned prec_bits, mpfr_rnd_t rnd) {
  Real r(prec_bits);
  if (mpfr_set_str(r.x_, s.c_str(), 10, rnd) != 0)
    throw Error("BadDecimal", "cannot parse \"" + s + "\"");
  return r;
}

std::pair<Int, long> Real::to_dyadic() const {
  if (mpfr_zero_p(x_)) return {Int(0), 0};
  Int m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x_);
  return {m, static_cast<long>(e)};
}

std::string Real::str(int digits) const {
  if (digits < 2) digits = 2;
  char fmt[32];
  std::snprintf(fmt, sizeof fmt, "%%.%dRe", digits - 1);
  char* out = nullptr;
  mpfr_asprintf(&out, fmt, x_);
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

namespace {
unsigned join_prec(const Real& a, const Real& b) { return std::max(a.prec(), b.prec()); }

Real bin_op(const Real& a, const Real& b,
            int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t), mpfr_rnd_t rnd) {
  Real r(join_prec(a, b));
  op(r.raw(), a.get(), b.get(), rnd);
  return r;
}
}  // namespace

Real operator+(const Real& a, const Real& b) { return bin_op(a, b, mpfr_add, MPFR_RNDN); }
Real operator-(const Real& a, const Real& b) { return bin_op(a, b, mpfr_sub, MPFR_RNDN); }
Real operator*(const Real& a, const Real& b) { return bin_op(a, b, mpfr_mul, MPFR_RNDN); }
Real operator/(const Real& a, const Real& b) { return bin_op(a, b, mpfr_div, MPFR_RNDN); }

Real operator-(const Real& a) {
  Real r(a.prec());
  mpfr_neg(r.raw(), a.get(), MPFR_RNDN);
  return r;
}

Real Real::abs() const {
  Real r(prec());
  mpfr_abs(r.raw(), x_, MPFR_RNDN);
  return r;
}

Real Real::mul_2si(long e) const {
  Real r(prec());
  mpfr_mul_2si(r.raw(), x_, e, MPFR_RNDN);
  return r;
}

// ---------------------------------------------------------------------------
// Interval

Interval::Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (mpfr_nan_p(lo_.get()) || mpfr_nan_p(hi_.get()) || lo_ > hi_)
    throw Error("BadInterval", "endpoints out of order");
}

Interval Interval::exact(long v, unsigned prec_bits) {
  return exact(Real::of(v, prec_bits));
}

Interval Interval::exact(const Real& v, unsigned prec_bits) {
  Real lo(prec_bits), hi(prec_bits);
  mpfr_set(lo.raw(), v.get(), MPFR_RNDD);
  mpfr_set(hi.raw(), v.get(), MPFR_RNDU);
  return Interval(lo, hi);
}

Interval Interval::exact(const Int& v, unsigned prec_bits) {
  Real lo(prec_bits), hi(prec_bits);
  mpfr_set_z(lo.raw(), v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi.raw(), v.get_mpz_t(), MPFR_RNDU);
  return Interval(lo, hi);
}

Interval Interval::from_decimal(const std::string& s, unsigned prec_bits) {
  return Interval(Real::from_decimal(s, prec_bits, MPFR_RNDD),
                  Real::from_decimal(s, prec_bits, MPFR_RNDU));
}

Interval Interval::centered(const Real& mid, const Real& rad) {
  unsigned p = join_prec(mid, rad);
  Real lo(p), hi(p);
  mpfr_sub(lo.raw(), mid.get(), rad.get(), MPFR_RNDD);
  mpfr_add(hi.raw(), mid.get(), rad.get(), MPFR_RNDU);
  return Interval(lo, hi);
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  return Interval(a.lo_ < b.lo_ ? a.lo_ : b.lo_, a.hi_ > b.hi_ ? a.hi_ : b.hi_);
}

Real Interval::mid() const {
  Real r(prec());
  mpfr_add(r.raw(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(r.raw(), r.raw(), 1, MPFR_RNDN);
  return r;
}

Real Interval::rad() const {
  Real m = mid();
  Real r1(prec()), r2(prec());
  mpfr_sub(r1.raw(), m.get(), lo_.get(), MPFR_RNDU);
  mpfr_sub(r2.raw(), hi_.get(), m.get(), MPFR_RNDU);
  return r1 > r2 ? r1 : r2;
}

Real Interval::width() const {
  Real r(prec());
  mpfr_sub(r.raw(), hi_.get(), lo_.get(), MPFR_RNDU);
  return r;
}

int Interval::sign() const {
  if (lo_.sgn() > 0) return 1;
  if (hi_.sgn() < 0) return -1;
  return 0;
}

Interval operator+(const Interval& a, const Interval& b) {
  unsigned p = std::max(a.prec(), b.prec());
  Real lo(p), hi(p);
  mpfr_add(lo.raw(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(hi.raw(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return Interval(lo, hi);
}

Interval operator-(const Interval& a, const Interval& b) {
  unsigned p = std::max(a.prec(), b.prec());
  Real lo(p), hi(p);
  mpfr_sub(lo.raw(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(hi.raw(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  return Interval(lo, hi);
}

Interval operator*(const Interval& a, const Interval& b) {
  unsigned p = std::max(a.prec(), b.prec());
  Real lo(p), hi(p), t(p);
  const mpfr_srcptr as[2] = {a.lo_.get(), a.hi_.get()};
  const mpfr_srcptr bs[2] = {b.lo_.get(), b.hi_.get()};
  bool first = true;
  for (auto x : as)
    for (auto y : bs) {
      mpfr_mul(t.raw(), x, y, MPFR_RNDD);
      if (first || t < lo) mpfr_set(lo.raw(), t.get(), MPFR_RNDD);
      mpfr_mul(t.raw(), x, y, MPFR_RNDU);
      if (first || t > hi) mpfr_set(hi.raw(), t.get(), MPFR_RNDU);
      first = false;
    }
  return Interval(lo, hi);
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DivisionNearZero("divisor interval straddles zero");
  unsigned p = std::max(a.prec(), b.prec());
  Real lo(p), hi(p), t(p);
  const mpfr_srcptr as[2] = {a.lo_.get(), a.hi_.get()};
  const mpfr_srcptr bs[2] = {b.lo_.get(), b.hi_.get()};
  bool first = true;
  for (auto x : as)
    for (auto y : bs) {
      mpfr_div(t.raw(), x, y, MPFR_RNDD);
      if (first || t < lo) mpfr_set(lo.raw(), t.get(), MPFR_RNDD);
      mpfr_div(t.raw(), x, y, MPFR_RNDU);
      if (first || t > hi) mpfr_set(hi.raw(), t.get(), MPFR_RNDU);
      first = false;
    }
  return Interval(lo, hi);
}

Interval operator-(const Interval& a) {
  Real lo(a.prec()), hi(a.prec());
  mpfr_neg(lo.raw(), a.hi_.get(), MPFR_RNDD);
  mpfr_neg(hi.raw(), a.lo_.get(), MPFR_RNDU);
  return Interval(lo, hi);
}

Interval Interval::abs() const {
  if (lo_.sgn() >= 0) return *this;
  if (hi_.sgn() <= 0) return -*this;
  Real z = Real::of(0L, prec());
  Real nlo = (-*this).hi_;
  return Interval(z, nlo > hi_ ? nlo : hi_);
}

Interval Interval::sqr() const {
  Interval m = abs();
  Real lo(prec()), hi(prec());
  mpfr_sqr(lo.raw(), m.lo_.get(), MPFR_RNDD);
  mpfr_sqr(hi.raw(), m.hi_.get(), MPFR_RNDU);
  return Interval(lo, hi);
}

namespace {
Interval monotone(const Interval& a, int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
  Real lo(a.prec()), hi(a.prec());
  fn(lo.raw(), a.lo().get(), MPFR_RNDD);
  fn(hi.raw(), a.hi().get(), MPFR_RNDU);
  return Interval(lo, hi);
}
}  // namespace

Interval Interval::sqrt() const {
  if (lo_.sgn() < 0) throw SqrtOfNegative("argument not certainly nonnegative");
  return monotone(*this, mpfr_sqrt);
}

Interval Interval::exp() const { return monotone(*this, mpfr_exp); }

Interval Interval::log() const {
  if (lo_.sgn() <= 0) throw LogOfNonPositive("argument not certainly positive");
  return monotone(*this, mpfr_log);
}

Interval Interval::sinh() const { return monotone(*this, mpfr_sinh); }
Interval Interval::asinh() const { return monotone(*this, mpfr_asinh); }

Interval Interval::pow_int(unsigned n) const {
  if (n == 0) return Interval::exact(1L, prec());
  if (n % 2 == 0) return sqr().pow_int(n / 2);
  if (n == 1) return *this;
  return *this * sqr().pow_int((n - 1) / 2);
}

Interval Interval::root_n(unsigned n) const {
  if (lo_.sgn() < 0) throw SqrtOfNegative("argument not certainly nonnegative");
  Real lo(prec()), hi(prec());
  mpfr_rootn_ui(lo.raw(), lo_.get(), n, MPFR_RNDD);
  mpfr_rootn_ui(hi.raw(), hi_.get(), n, MPFR_RNDU);
  return Interval(lo, hi);
}

Interval Interval::mul_2si(long e) const {
  Real lo(prec()), hi(prec());
  mpfr_mul_2si(lo.raw(), lo_.get(), e, MPFR_RNDD);
  mpfr_mul_2si(hi.raw(), hi_.get(), e, MPFR_RNDU);
  return Interval(lo, hi);
}

// ---------------------------------------------------------------------------
// Cubic root isolation

Int cubic_poly_discriminant(const Int& a, const Int& b, const Int& c, const Int& d) {
  return 18 * a * b * c * d + b * b * c * c - 27 * a * a * d * d - 4 * a * c * c * c -
         4 * b * b * b * d;
}

namespace {

std::vector<Int> divisors_of(const Int& n0) {
  Int n(::abs(n0));
  std::vector<Int> divs;
  for (Int i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      divs.push_back(i);
      Int q = n / i;
      if (q != i) divs.push_back(q);
    }
  }
  return divs;
}

}  // namespace

bool cubic_has_rational_root(const Int& a, const Int& b, const Int& c, const Int& d) {
  if (d == 0) return true;  // root 0
  for (const Int& p : divisors_of(d)) {
    for (const Int& q : divisors_of(a)) {
      Int v = a * p * p * p + b * p * p * q + c * p * q * q + d * q * q * q;
      if (v == 0) return true;
      v = -a * p * p * p + b * p * p * q - c * p * q * q + d * q * q * q;
      if (v == 0) return true;
    }
  }
  return false;
}

namespace {

// value = num / 2^k
struct Dyadic {
  Int num;
  unsigned long k = 0;
};

void align(Dyadic& a, Dyadic& b) {
  if (a.k < b.k) {
    a.num <<= (b.k - a.k);
    a.k = b.k;
  } else if (b.k < a.k) {
    b.num <<= (a.k - b.k);
    b.k = a.k;
  }
}

Dyadic dy_mid(Dyadic a, Dyadic b) {
  align(a, b);
  return Dyadic{a.num + b.num, a.k + 1};
}

int dy_cmp(Dyadic a, Dyadic b) {
  align(a, b);
  return cmp(a.num, b.num);
}

Dyadic dy_sub(Dyadic a, Dyadic b) {
  align(a, b);
  return Dyadic{a.num - b.num, a.k};
}

Dyadic dy_add(Dyadic a, Dyadic b) {
  align(a, b);
  return Dyadic{a.num + b.num, a.k};
}

// |x| <= 2^-t
bool dy_le_pow2(const Dyadic& x, long t) {
  Int m(::abs(x.num));
  long k = static_cast<long>(x.k);
  if (k - t < 0) return m == 0;
  return m <= (Int(1) << static_cast<unsigned long>(k - t));
}

Real dy_to_real(const Dyadic& x, unsigned prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_set_z(r.raw(), x.num.get_mpz_t(), rnd);
  mpfr_div_2ui(r.raw(), r.raw(), x.k, rnd);
  return r;
}

Dyadic dy_from_real(const Real& x) {
  auto [m, e] = x.to_dyadic();
  if (e >= 0) return Dyadic{m << static_cast<unsigned long>(e), 0};
  return Dyadic{m, static_cast<unsigned long>(-e)};
}

// Dense integer polynomial, c[i] the coefficient of x^i.
struct ZPoly {
  std::vector<Int> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }

  // Exact sign at a dyadic point: p(n/2^k) * 2^(deg*k) is an integer.
  int sign_at(const Dyadic& x) const {
    Int acc = c.back();
    Int shift = Int(1) << x.k;
    Int pw(1);
    for (int i = degree() - 1; i >= 0; --i) {
      pw *= shift;
      acc = acc * x.num + c[static_cast<size_t>(i)] * pw;
    }
    return sgn(acc);
  }

  ZPoly derivative() const {
    ZPoly d;
    for (size_t i = 1; i < c.size(); ++i) d.c.push_back(static_cast<long>(i) * c[i]);
    return d;
  }

  Real eval_real(const Real& x) const {
    Real acc = Real::of(c.back(), x.prec());
    for (int i = degree() - 1; i >= 0; --i) {
      Real t(x.prec());
      mpfr_mul(t.raw(), acc.get(), x.get(), MPFR_RNDN);
      mpfr_add_z(t.raw(), t.get(), c[static_cast<size_t>(i)].get_mpz_t(), MPFR_RNDN);
      acc = t;
    }
    return acc;
  }
};

struct ExactRootFound {
  Dyadic at;
};

int checked_sign(const ZPoly& p, const Dyadic& x) {
  int s = p.sign_at(x);
  if (s == 0) throw ExactRootFound{x};
  return s;
}

// One isolated root: either an exact dyadic point or a sign-change bracket of
// `poly` (which has no other root in [lo, hi]).
struct IsolatedRoot {
  Dyadic lo, hi;
  bool is_point = false;
  ZPoly poly;

  Dyadic midpoint() const { return is_point ? lo : dy_mid(lo, hi); }
};

void bisect_until(IsolatedRoot& r, long target_k) {
  if (r.is_point) return;
  int slo = r.poly.sign_at(r.lo);
  while (!dy_le_pow2(dy_sub(r.hi, r.lo), target_k)) {
    Dyadic m = dy_mid(r.lo, r.hi);
    int sm = r.poly.sign_at(m);
    if (sm == 0) {
      r.lo = r.hi = m;
      r.is_point = true;
      return;
    }
    if (sm == slo)
      r.lo = m;
    else
      r.hi = m;
  }
}

// Newton polish with exact sign certification; pure bisection as fallback.
void refine_root(IsolatedRoot& r, long target_k) {
  if (r.is_point) return;
  bisect_until(r, std::min<long>(target_k, 48));
  if (r.is_point || dy_le_pow2(dy_sub(r.hi, r.lo), target_k)) return;

  ZPoly dp = r.poly.derivative();
  int slo = r.poly.sign_at(r.lo);
  unsigned w = 128;
  unsigned w_cap = static_cast<unsigned>(4 * target_k + 256);
  for (;;) {
    if (w > w_cap) {
      bisect_until(r, target_k);
      return;
    }
    Real x = dy_to_real(dy_mid(r.lo, r.hi), w, MPFR_RNDN);
    for (int it = 0; it < 8; ++it) {
      Real dv = dp.eval_real(x);
      if (dv.is_zero()) break;
      x = x - r.poly.eval_real(x) / dv;
    }
    Dyadic xd = dy_from_real(x);
    Dyadic h{Int(1), static_cast<unsigned long>(target_k + 1)};
    Dyadic lo2 = dy_sub(xd, h);
    Dyadic hi2 = dy_add(xd, h);
    if (dy_cmp(lo2, r.lo) > 0 && dy_cmp(hi2, r.hi) < 0) {
      int s1 = r.poly.sign_at(lo2);
      int s2 = r.poly.sign_at(hi2);
      if (s1 == 0 || s2 == 0) {
        r.lo = r.hi = (s1 == 0 ? lo2 : hi2);
        r.is_point = true;
        return;
      }
      if (s1 == slo && s2 != slo) {
        r.lo = lo2;
        r.hi = hi2;
        return;
      }
    }
    w *= 2;
  }
}

// All real roots lie strictly inside (-M, M).
Int cauchy_bound(const Int& a, const Int& b, const Int& c, const Int& d) {
  Int mb(::abs(b)), mc(::abs(c)), md(::abs(d)), ma(::abs(a));
  Int mx = std::max(std::max(mb, mc), md);
  Int M;
  mpz_cdiv_q(M.get_mpz_t(), mx.get_mpz_t(), ma.get_mpz_t());
  return M + 1;
}

// Tier 1: three sign-change brackets of the cubic, separated by exact dyadic
// points strictly between consecutive roots. Throws ExactRootFound when a
// probe lands on a root (handled by the deflation path).
std::vector<IsolatedRoot> isolate_separated(const ZPoly& p, const Int& a, const Int& b,
                                            const Int& M) {
  int sa = sgn(a);
  Dyadic mneg{-M, 0}, mpos{M, 0};

  // dyadic point v with p'(v)*a < 0: the vertex -b/(3a) of p' approximated to
  // within 2^-bits(6|a|) < sqrt(A)/(3|a|), half the radius of the sign well
  unsigned long kv = mpz_sizeinbase(Int(6 * ::abs(a)).get_mpz_t(), 2);
  Dyadic v;
  v.k = kv;
  {
    Int numer = (-b) << kv;
    Int den = 3 * a;
    mpz_fdiv_q(v.num.get_mpz_t(), numer.get_mpz_t(), den.get_mpz_t());
  }
  ZPoly dp = p.derivative();
  if (dp.sign_at(v) * sa >= 0)
    throw Error("Internal", "derivative probe missed its sign well");

  // Shrink a bracket of one critical point until some midpoint has the wanted
  // cubic sign; that midpoint then separates two consecutive roots.
  auto find_sep = [&](Dyadic lo, Dyadic hi, int want) {
    int sdlo = dp.sign_at(lo);
    for (;;) {
      Dyadic m = dy_mid(lo, hi);
      if (checked_sign(p, m) == want) return m;
      int sd = dp.sign_at(m);
      if (sd == sdlo)
        lo = m;
      else
        hi = m;
    }
  };

  int spv = checked_sign(p, v);
  Dyadic z1 = (spv == sa) ? v : find_sep(mneg, v, sa);
  Dyadic z2 = (spv == -sa) ? v : find_sep(v, mpos, -sa);

  return {IsolatedRoot{mneg, z1, false, p}, IsolatedRoot{z1, z2, false, p},
          IsolatedRoot{z2, mpos, false, p}};
}

// Tier 2: a probe found an exact dyadic root r = n/2^k. Deflate and isolate
// the roots of the remaining integer quadratic.
std::vector<IsolatedRoot> isolate_with_exact_root(const ZPoly& p, const Dyadic& r,
                                                  const Int& M, long target_k) {
  const Int& d = p.c[0];
  const Int& c = p.c[1];
  const Int& b = p.c[2];
  const Int& a = p.c[3];
  Int pw = Int(1) << r.k;
  Int A2 = a * pw * pw;
  Int B2 = (b * pw + a * r.num) * pw;
  Int C2 = c * pw * pw + b * r.num * pw + a * r.num * r.num;
  if (d * pw * pw * pw + c * r.num * pw * pw + b * r.num * r.num * pw +
          a * r.num * r.num * r.num !=
      0)
    throw Error("Internal", "deflation remainder nonzero");

  std::vector<IsolatedRoot> out;
  out.push_back(IsolatedRoot{r, r, true, p});

  Int disc2 = B2 * B2 - 4 * A2 * C2;
  if (disc2 <= 0) throw NonPositiveDiscriminant("repeated roots after deflation");

  ZPoly q{{C2, B2, A2}};
  if (mpz_perfect_square_p(disc2.get_mpz_t())) {
    Int s;
    mpz_sqrt(s.get_mpz_t(), disc2.get_mpz_t());
    for (int sc : {-1, 1}) {
      Int num = -B2 + sc * s;
      Int den = 2 * A2;
      // bracket width below both the target and the root separation 2/|den|
      unsigned long k = static_cast<unsigned long>(target_k + 2) +
                        mpz_sizeinbase(den.get_mpz_t(), 2);
      Int scaled = num << k;
      Dyadic lo{Int(), k}, hi{Int(), k};
      mpz_fdiv_q(lo.num.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
      if (lo.num * den == scaled || q.sign_at(lo) == 0) {
        out.push_back(IsolatedRoot{lo, lo, true, q});
        continue;
      }
      hi.num = lo.num + 1;
      if (q.sign_at(hi) == 0) {
        out.push_back(IsolatedRoot{hi, hi, true, q});
        continue;
      }
      out.push_back(IsolatedRoot{lo, hi, false, q});
    }
  } else {
    Dyadic mneg{-M, 0}, mpos{M, 0};
    unsigned long kv = mpz_sizeinbase(Int(4 * ::abs(A2)).get_mpz_t(), 2);
    Dyadic v;
    v.k = kv;
    Int numer = (-B2) << kv;
    Int den = 2 * A2;
    mpz_fdiv_q(v.num.get_mpz_t(), numer.get_mpz_t(), den.get_mpz_t());
    if (q.sign_at(v) * sgn(A2) >= 0)
      throw Error("Internal", "quadratic vertex probe missed its sign well");
    out.push_back(IsolatedRoot{mneg, v, false, q});
    out.push_back(IsolatedRoot{v, mpos, false, q});
  }
  return out;
}

}  // namespace

Interval RootTriple::interval(int i) const {
  return Interval::centered(roots[static_cast<size_t>(i)],
                            half_widths[static_cast<size_t>(i)]);
}

RootTriple cubic_real_roots(const Int& a, const Int& b, const Int& c, const Int& d,
                            unsigned prec_bits, bool check_irreducible) {
  if (a == 0) throw DegenerateLeadingCoefficient("leading coefficient is zero");
  Int D = cubic_poly_discriminant(a, b, c, d);
  if (D <= 0)
    throw NonPositiveDiscriminant("polynomial discriminant " + D.get_str() + " <= 0");
  if (check_irreducible && cubic_has_rational_root(a, b, c, d))
    throw ReduciblePolynomial("rational root found");

  unsigned prec = clamp_prec(prec_bits);
  long target_k = static_cast<long>(prec) / 2 + 2;
  ZPoly p{{d, c, b, a}};
  Int M = cauchy_bound(a, b, c, d);

  std::vector<IsolatedRoot> roots;
  try {
    roots = isolate_separated(p, a, b, M);
  } catch (const ExactRootFound& er) {
    roots = isolate_with_exact_root(p, er.at, M, target_k);
  }

  for (auto& r : roots) refine_root(r, target_k);

  // brackets may still touch at a shared separator or overlap an exact root;
  // shrink until pairwise strictly disjoint
  for (long extra = target_k + 8;; extra += 16) {
    std::sort(roots.begin(), roots.end(), [](const IsolatedRoot& x, const IsolatedRoot& y) {
      return dy_cmp(x.midpoint(), y.midpoint()) < 0;
    });
    if (dy_cmp(roots[0].hi, roots[1].lo) < 0 && dy_cmp(roots[1].hi, roots[2].lo) < 0) break;
    for (auto& r : roots) refine_root(r, extra);
  }

  RootTriple out;
  out.prec_bits = prec;
  for (size_t i = 0; i < 3; ++i) {
    Interval iv(dy_to_real(roots[i].lo, prec, MPFR_RNDD),
                dy_to_real(roots[i].hi, prec, MPFR_RNDU));
    out.roots[i] = iv.mid();
    out.half_widths[i] = roots[i].is_point && iv.width().is_zero() ? Real::of(0L, prec)
                                                                   : iv.rad();
  }
  return out;
}

}  // namespace thue
