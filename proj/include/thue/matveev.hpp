#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "thue/numerics.hpp"

namespace thue {

// Inputs of the lower bound for |b1 log a1 + ... + bn log an|.
struct MatveevInput {
  int n = 3;                       // number of logarithms
  int d = 3;                       // field degree
  std::vector<Real> A;             // A_j >= max(d h(a_j), |log a_j|)
  Real B = Real::of(1L, kMinPrecBits);  // B >= 1
};

// C(n) = (16/n!) e^n (2n+2)(n+2)(4n+4)^{n+1} (en/2)
// C0   = log(e^{4.4n+7} n^{5.5} d^2 log(en))
std::pair<Real, Real> matveev_constants(int n, int d, unsigned prec_bits);

// log|L| > -C(n) C0 W0 d^2 Omega with W0 = log(1.5 e B d log(ed)).
Real matveev_lower_bound(const MatveevInput& in, unsigned prec_bits);

enum class ThresholdBranch { theorem11_pass1, theorem11_pass2, theorem12_nonmonic };

// Vol(Lambda) appears linearly on both sides of every branch inequality and
// cancels; the enum records that there is no alternative policy in use.
enum class VolPolicy { cancel };

struct ThresholdConfig {
  unsigned prec_bits = kDefaultPrecBits;
  bool paper_constants = false;  // use the text's literal decimal constants
};

struct ThresholdReport {
  ThresholdBranch branch;
  std::map<std::string, Real> constants;
  Real t_star;
  Real d_star;      // refined discriminant bound (1/2) e^{2 sqrt6 t*}
  int iterations = 0;
  // the text's quoted values, for side-by-side reporting
  Real paper_t;
  Real paper_d;
};

const char* branch_name(ThresholdBranch b);

// Largest t in [0.1, 1e4] satisfying the branch inequality, by bisection to
// absolute tolerance 1e-4. Throws NoCrossing when the inequality does not
// flip inside the bracket.
ThresholdReport solve_t_threshold(ThresholdBranch branch, VolPolicy policy,
                                  const ThresholdConfig& cfg = {});

// All three branches with derived discriminant bounds attached.
std::vector<ThresholdReport> thresholds_report(const ThresholdConfig& cfg = {});

// B1 = 3 (1.0016) (t'' + t''/4)
Real b1_parameter(const Real& t_doubleprime);

// Exposed for tests: bisection on a monotone predicate over [lo, hi].
// Returns the crossing point; NoCrossing if the predicate has the same value
// at both ends.
Real bisect_threshold(const std::function<bool(const Real&)>& holds, const Real& lo,
                      const Real& hi, const Real& tol, int* iterations);

}  // namespace thue
