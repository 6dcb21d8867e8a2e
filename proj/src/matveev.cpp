#include "thue/matveev.hpp"

namespace thue {

namespace {

Interval exp1(unsigned w) { return Interval::exact(1L, w).exp(); }

Interval factorial_i(int n, unsigned w) {
  Int f(1);
  for (int i = 2; i <= n; ++i) f *= i;
  return Interval::exact(f, w);
}

std::pair<Interval, Interval> constants_i(int n, int d, unsigned w) {
  Interval e = exp1(w);
  Interval ni = Interval::exact(static_cast<long>(n), w);
  Interval di = Interval::exact(static_cast<long>(d), w);

  Interval cn = Interval::exact(16L, w) / factorial_i(n, w);
  cn = cn * e.pow_int(static_cast<unsigned>(n));
  cn = cn * Interval::exact(2L * n + 2, w) * Interval::exact(static_cast<long>(n) + 2, w);
  cn = cn * Interval::exact(4L * n + 4, w).pow_int(static_cast<unsigned>(n + 1));
  cn = cn * (e * ni).mul_2si(-1);

  // C0 = (4.4 n + 7) + 5.5 log n + 2 log d + log(1 + log n)
  Interval c0 = Interval::exact(22L * n + 35, w) / Interval::exact(5L, w);
  c0 = c0 + (Interval::exact(11L, w) * ni.log()).mul_2si(-1);
  c0 = c0 + di.log().mul_2si(1);
  c0 = c0 + (Interval::exact(1L, w) + ni.log()).log();
  return {cn, c0};
}

Interval w0_i(const Interval& B, int d, unsigned w) {
  Interval e = exp1(w);
  Interval di = Interval::exact(static_cast<long>(d), w);
  Interval arg = Interval::exact(3L, w).mul_2si(-1) * e * B * di *
                 (Interval::exact(1L, w) + di.log());
  return arg.log();
}

}  // namespace

std::pair<Real, Real> matveev_constants(int n, int d, unsigned prec_bits) {
  if (n < 2 || d < 1) throw Error("BadMatveevInput", "need n >= 2 and d >= 1");
  unsigned w = clamp_prec(prec_bits);
  Real abs_err = Real::of(1L, 64).mul_2si(-static_cast<long>(w) / 2);
  Real cn = eval_to_error([&](unsigned p) { return constants_i(n, d, p).first; }, abs_err, w);
  Real c0 = eval_to_error([&](unsigned p) { return constants_i(n, d, p).second; }, abs_err, w);
  return {cn, c0};
}

Real matveev_lower_bound(const MatveevInput& in, unsigned prec_bits) {
  if (in.n < 2 || in.d < 1 || static_cast<int>(in.A.size()) != in.n)
    throw Error("BadMatveevInput", "need n >= 2, d >= 1, n values A_j");
  for (const Real& a : in.A)
    if (a.sgn() <= 0) throw Error("BadMatveevInput", "A_j must be positive");
  if (in.B < Real::of(1L, 64)) throw Error("BadMatveevInput", "B must be >= 1");

  unsigned w = clamp_prec(prec_bits);
  auto fn = [&](unsigned p) {
    auto [cn, c0] = constants_i(in.n, in.d, p);
    Interval w0 = w0_i(Interval::exact(in.B, p), in.d, p);
    Interval omega = Interval::exact(1L, p);
    for (const Real& a : in.A) omega = omega * Interval::exact(a, p);
    Interval d2 = Interval::exact(static_cast<long>(in.d), p).sqr();
    return -(cn * c0 * w0 * d2 * omega);
  };
  Real abs_err = Real::of(1L, 64).mul_2si(-static_cast<long>(w) / 4);
  return eval_to_error(fn, abs_err, w);
}

const char* branch_name(ThresholdBranch b) {
  switch (b) {
    case ThresholdBranch::theorem11_pass1: return "theorem11_pass1";
    case ThresholdBranch::theorem11_pass2: return "theorem11_pass2";
    case ThresholdBranch::theorem12_nonmonic: return "theorem12_nonmonic";
  }
  return "?";
}

Real b1_parameter(const Real& t_doubleprime) {
  unsigned p = std::max(t_doubleprime.prec(), kDefaultPrecBits);
  Real c = Real::from_decimal("1.0016", p);
  return Real::of(3L, p) * c * (t_doubleprime + t_doubleprime / Real::of(4L, p));
}

Real bisect_threshold(const std::function<bool(const Real&)>& holds, const Real& lo0,
                      const Real& hi0, const Real& tol, int* iterations) {
  Real lo = lo0, hi = hi0;
  if (!holds(lo) || holds(hi))
    throw NoCrossing("inequality does not flip inside the bracket");
  int iters = 0;
  while (hi - lo > tol) {
    Real mid = (lo + hi).mul_2si(-1);
    if (holds(mid))
      lo = mid;
    else
      hi = mid;
    ++iters;
  }
  if (iterations) *iterations = iters;
  return lo;
}

namespace {

struct BranchConstants {
  Interval combined;   // (2/sqrt6) C(3) C0(3,3) 9, or the text's 1.2276e11
  Interval inner;      // W0-factor * B1-factor * combined, or 1.1892e13
  Interval w0_factor;  // 1.5 e d log(ed)
  Interval efac;       // e/(e-1)
};

BranchConstants branch_constants(bool paper, unsigned p) {
  Interval e = exp1(p);
  BranchConstants bc{Interval::exact(0L, p), Interval::exact(0L, p),
                     Interval::exact(0L, p), Interval::exact(0L, p)};
  bc.efac = e / (e - Interval::exact(1L, p));
  Interval di = Interval::exact(3L, p);
  bc.w0_factor = Interval::exact(3L, p).mul_2si(-1) * e * di *
                 (Interval::exact(1L, p) + di.log());
  if (paper) {
    bc.combined = Interval::from_decimal("1.2276e11", p);
    bc.inner = Interval::from_decimal("1.1892e13", p);
  } else {
    auto [cn, c0] = constants_i(3, 3, p);
    Interval k = cn * c0 * Interval::exact(9L, p);
    bc.combined = k.mul_2si(1) / Interval::exact(6L, p).sqrt();
    Interval b1f = Interval::exact(3L, p) * Interval::from_decimal("1.0016", p) *
                   (Interval::exact(5L, p) / Interval::exact(4L, p));
    bc.inner = bc.w0_factor * b1f * bc.combined;
  }
  return bc;
}

// log of both sides of the branch inequality; comparing in the log domain
// keeps every magnitude around |t| instead of e^t.
Interval branch_log_difference(ThresholdBranch branch, bool paper, const Real& t,
                               unsigned p) {
  BranchConstants bc = branch_constants(paper, p);
  Interval ti = Interval::exact(t, p);
  Interval s6 = Interval::exact(6L, p).sqrt();
  Interval s5 = Interval::exact(5L, p).sqrt();
  Interval s3 = Interval::exact(3L, p).sqrt();
  Interval s2 = Interval::exact(2L, p).sqrt();
  Interval one = Interval::exact(1L, p);

  Interval ln_a1 = Interval::exact(0L, p), ln_a2 = Interval::exact(0L, p);
  bool with_efac = true;
  switch (branch) {
    case ThresholdBranch::theorem11_pass1:
      ln_a1 = (Interval::from_decimal("1.0016", p) *
               (Interval::exact(3L, p).mul_2si(-1) + s6) * ti)
                  .log();
      ln_a2 = (Interval::from_decimal("6.01", p) * ti).log();
      break;
    case ThresholdBranch::theorem11_pass2:
      ln_a1 = (Interval::exact(3L, p).mul_2si(-1) * ti +
               Interval::from_decimal("5.31e59", p).log().mul_2si(-1))
                  .log();
      ln_a2 = (Interval::from_decimal("6.01", p) * ti).log();
      with_efac = false;
      break;
    case ThresholdBranch::theorem12_nonmonic: {
      ln_a1 = (Interval::from_decimal("1.0016", p) *
               (Interval::exact(3L, p).mul_2si(-1) + s6) * ti)
                  .log();
      // A2 <= (1/4) e^{sqrt6 t/2} (2 sqrt6 t - log 2); the last factor is
      // nonpositive for tiny t where the bound is vacuous and the inequality
      // is treated as holding
      Interval factor = (s6 * ti).mul_2si(1) - Interval::exact(2L, p).log();
      if (factor.hi().sgn() <= 0) return one;
      ln_a2 = (s6 * ti).mul_2si(-1) - Interval::exact(4L, p).log() + factor.log();
      break;
    }
  }

  Interval ln_inner_arg = bc.inner.log() + ln_a1 + ln_a2;  // = ln(inner A1 A2)
  Interval log_lhs = bc.combined.log() + (Interval::exact(2L, p) / s3).log() + ln_a1 +
                     ln_inner_arg.log();
  if (with_efac) log_lhs = log_lhs + bc.efac.log();

  Interval log_rhs =
      s2.log() + (s6 * ti).mul_2si(-1) - (one + (-(s6 * ti) / s5).exp()).log();
  return log_lhs - log_rhs;
}

}  // namespace

ThresholdReport solve_t_threshold(ThresholdBranch branch, VolPolicy policy,
                                  const ThresholdConfig& cfg) {
  (void)policy;  // Vol(Lambda) cancels in every branch
  unsigned prec = clamp_prec(cfg.prec_bits);
  Real abs_err = Real::from_decimal("1e-5", prec);

  auto holds = [&](const Real& t) {
    Real diff = eval_to_error(
        [&](unsigned p) { return branch_log_difference(branch, cfg.paper_constants, t, p); },
        abs_err, prec);
    return diff.sgn() >= 0;
  };

  int iters = 0;
  Real lo = Real::from_decimal("0.1", prec);
  Real hi = Real::from_decimal("1e4", prec);
  Real tol = Real::from_decimal("1e-4", prec);
  Real t_star = bisect_threshold(holds, lo, hi, tol, &iters);

  ThresholdReport rep{branch, {}, t_star, Real(prec), iters, Real(prec), Real(prec)};
  {
    unsigned p = prec;
    Interval s6 = Interval::exact(6L, p).sqrt();
    Interval e2 = ((s6 * Interval::exact(t_star, p)).mul_2si(1)).exp();
    rep.d_star = e2.mul_2si(-1).mid();
    auto [cn, c0] = matveev_constants(3, 3, p);
    rep.constants.emplace("C_n", cn);
    rep.constants.emplace("C0", c0);
    BranchConstants bc = branch_constants(cfg.paper_constants, p);
    rep.constants.emplace("W0_factor", bc.w0_factor.mid());
    rep.constants.emplace("combined_coefficient", bc.combined.mid());
    rep.constants.emplace("inner_log_coefficient", bc.inner.mid());
    rep.constants.emplace("d_general_bound",
                          (Interval::exact(64L, p) * e2).mid());
  }
  switch (branch) {
    case ThresholdBranch::theorem11_pass1:
      rep.paper_t = Real::from_decimal("27.91", prec);
      rep.paper_d = Real::from_decimal("5.31e59", prec);
      break;
    case ThresholdBranch::theorem11_pass2:
      rep.paper_t = Real::from_decimal("27.5321", prec);
      rep.paper_d = Real::from_decimal("1.4e57", prec);
      break;
    case ThresholdBranch::theorem12_nonmonic:
      rep.paper_t = Real::from_decimal("28.38", prec);
      rep.paper_d = Real::from_decimal("9e58", prec);
      break;
  }
  return rep;
}

std::vector<ThresholdReport> thresholds_report(const ThresholdConfig& cfg) {
  return {solve_t_threshold(ThresholdBranch::theorem11_pass1, VolPolicy::cancel, cfg),
          solve_t_threshold(ThresholdBranch::theorem11_pass2, VolPolicy::cancel, cfg),
          solve_t_threshold(ThresholdBranch::theorem12_nonmonic, VolPolicy::cancel, cfg)};
}

}  // namespace thue
