#pragma once

#include <optional>

#include "thue/gaps.hpp"
#include "thue/resolvent.hpp"
#include "thue/units.hpp"

namespace thue {

// One +- class of integer solutions of |F| = 1, stored through the
// representative with y > 0 (or y = 0, x > 0). value is F at that
// representative; the class's F = +1 solution is the representative itself
// or its negation.
struct SolutionPoint {
  long long x = 0, y = 0;
  int value = 0;
  std::optional<PointEvaluation> evaluation;  // at the F = +1 representative
};

// All solution classes with max(|x|, |y|) <= box, exact integer evaluation,
// sorted lexicographically by (x, y).
std::vector<SolutionPoint> enumerate_solutions(const BinaryCubicForm& f, long box);

enum class Family { thomas_g1, f_m };

// thomas_g1: x^3 + n x^2 y - (n+3) x y^2 + y^3
// f_m:       x^3 - (m+1) x^2 y + m x y^2 + y^3
BinaryCubicForm family_form(Family fam, long param);

struct LatticeSummary {
  int generator_count = 0;
  OrderElement b1_element, b2_element;
  Vec3 b1, b2;
  Real covolume;
};

struct FormAnalysis {
  BinaryCubicForm form;
  BinaryCubicForm reduced;
  UnimodularMap to_reduced;
  Int disc;
  long box = 0;
  unsigned prec_bits = kDefaultPrecBits;

  std::vector<SolutionPoint> solutions;  // one entry per +- class
  int count = 0;                         // N_F = number of classes

  bool analyzed = false;  // geometric pipeline ran (positive discriminant)
  std::array<std::vector<int>, 3> classes;  // solution indices by related_index
  std::vector<GapReport> gap_reports;
  std::optional<LatticeSummary> lattice;
  bool hessian_floor_ok = true;
  std::optional<std::pair<long long, long long>> hessian_exception;
  int disc_bound_violations = 0;  // solutions with D > 64 e^{2 sqrt6 t} + tol
};

// Full per-form pipeline: reduction, enumeration, resolvent evaluation and
// relatedness partition, gap reports, unit lattice (for a monic generator).
// Negative-discriminant forms get enumeration and counts only. A non-null
// external_units list bypasses the box search.
FormAnalysis analyze_form(const BinaryCubicForm& f, long box, unsigned prec_bits,
                          long unit_coeff_bound = 10,
                          const std::vector<OrderElement>* external_units = nullptr);

}  // namespace thue
