#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thue/resolvent.hpp"

namespace thue {

// One verified inequality with its signed margin (LHS - RHS >= 0 means holds,
// up to the reported tolerance).
struct CheckRecord {
  std::string name;
  bool holds = false;
  Real margin;
};

// Gap-principle record for one related class of one form.
struct GapReport {
  std::string form_label;
  int related_index = 0;
  std::vector<PointEvaluation> points;  // strictly ascending by t
  std::vector<CheckRecord> checks;
};

// Inequality tolerance 2^(8 - prec/2).
Real gap_tolerance(unsigned prec_bits);

// At most one solution of F = 1 may have H(x, y) < (1/2) sqrt(3D); checked in
// exact integer arithmetic (4 H^2 vs 3 D). Returns the exceptional point when
// one exists; more than one violation fails the check.
std::pair<bool, std::optional<std::pair<long long, long long>>> hessian_floor_check(
    const BinaryCubicForm& f, const std::vector<std::pair<long long, long long>>& solutions);

// |p q' - p' q| for two distinct evaluated points related to the same pair.
Real pq_gap(const PointEvaluation& e1, const PointEvaluation& e2, const Int& D);

// t_next >= 2 t + (sqrt6/6) log D - sqrt6 log(2 + 1/sqrt2)
Real gap_growth_rhs(const Real& t, const Int& D);
bool gap_growth_check(const Real& t, const Real& t_next, const Int& D);

// sqrt2 Vol exp(sqrt6 t / 2) / (1 + exp(-sqrt6 (t' - t) / sqrt5))
Real gap_theorem_lower(const Real& t, const Real& t_prime, const Real& vol);

struct DiscBounds {
  Real general;   // 64 e^{2 sqrt6 t}
  Real refined;   // (1/2) e^{2 sqrt6 t}
  bool refined_valid = false;  // refined bound applies for t >= 5
};
DiscBounds disc_from_t(const Real& t);

// Twice the area of the (t, s) triangle of three evaluations.
Real triangle_area2(const PointEvaluation& a, const PointEvaluation& b,
                    const PointEvaluation& c);

// Assembles the per-class check list: pq lower bounds and growth inequalities
// for all ordered pairs, triangle/area and the gap-principle lower bound for
// all ascending triples (when a covolume is available), and the discriminant
// bound D <= 64 e^{2 sqrt6 t} per point. Points must be sorted by t.
GapReport build_gap_report(const std::string& form_label, int related_index,
                           std::vector<PointEvaluation> points, const Int& D,
                           const std::optional<Real>& covolume, unsigned prec_bits);

}  // namespace thue
