#include "thue/solver.hpp"

#include <algorithm>

namespace thue {

namespace {

bool fits_fast_path(const BinaryCubicForm& f, long box) {
  Int bound = Int(1) << 40;
  Int bx(box);
  return ::abs(f.a) < bound && ::abs(f.b) < bound && ::abs(f.c) < bound &&
         ::abs(f.d) < bound && bx <= (Int(1) << 20);
}

}  // namespace

std::vector<SolutionPoint> enumerate_solutions(const BinaryCubicForm& f, long box) {
  if (box < 1) throw Error("BadBox", "box must be >= 1");
  std::vector<SolutionPoint> out;

  if (fits_fast_path(f, box)) {
    using I128 = __int128;
    I128 a = static_cast<long>(f.a.get_si()), b = static_cast<long>(f.b.get_si()),
         c = static_cast<long>(f.c.get_si()), d = static_cast<long>(f.d.get_si());
    for (long y = 0; y <= box; ++y) {
      I128 yy = y;
      for (long x = (y == 0 ? 1 : -box); x <= box; ++x) {
        I128 xx = x;
        I128 v = a * xx * xx * xx + b * xx * xx * yy + c * xx * yy * yy + d * yy * yy * yy;
        if (v == 1 || v == -1)
          out.push_back(SolutionPoint{x, y, static_cast<int>(v), std::nullopt});
      }
    }
  } else {
    for (long y = 0; y <= box; ++y) {
      Int yy(y);
      for (long x = (y == 0 ? 1 : -box); x <= box; ++x) {
        Int v = evaluate(f, Int(x), yy);
        if (v == 1 || v == -1)
          out.push_back(SolutionPoint{x, y, static_cast<int>(v.get_si()), std::nullopt});
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const SolutionPoint& a, const SolutionPoint& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });
  return out;
}

BinaryCubicForm family_form(Family fam, long param) {
  switch (fam) {
    case Family::thomas_g1:
      return {1, param, -(param + 3), 1};
    case Family::f_m:
      return {1, -(param + 1), param, 1};
  }
  throw Error("BadFamily", "unknown family");
}

FormAnalysis analyze_form(const BinaryCubicForm& f, long box, unsigned prec_bits,
                          long unit_coeff_bound,
                          const std::vector<OrderElement>* external_units) {
  if (!irreducible_over_q(f)) throw ReducibleForm("form has a rational linear factor");

  FormAnalysis an;
  an.form = f;
  an.disc = discriminant(f);
  an.box = box;
  an.prec_bits = clamp_prec(prec_bits);
  an.solutions = enumerate_solutions(f, box);
  an.count = static_cast<int>(an.solutions.size());

  if (an.disc < 0) {
    an.reduced = f;
    an.to_reduced = UnimodularMap::identity();
    return an;  // negative discriminant: counts only
  }

  auto [fred, gamma] = reduce(f);
  an.reduced = fred;
  an.to_reduced = gamma;
  an.analyzed = true;

  ResolventData res = build_resolvent(f, an.prec_bits);
  std::vector<std::pair<long long, long long>> plus_reps;
  for (size_t i = 0; i < an.solutions.size(); ++i) {
    SolutionPoint& sp = an.solutions[i];
    long long px = sp.value == 1 ? sp.x : -sp.x;
    long long py = sp.value == 1 ? sp.y : -sp.y;
    plus_reps.emplace_back(px, py);
    sp.evaluation = eval_point(res, px, py);
    an.classes[static_cast<size_t>(sp.evaluation->related_index)].push_back(
        static_cast<int>(i));
  }

  auto [floor_ok, exception] = hessian_floor_check(f, plus_reps);
  an.hessian_floor_ok = floor_ok;
  an.hessian_exception = exception;

  // unit lattice needs a monic generator polynomial for Z[theta] (leading
  // coefficient -1 is accepted: the negated form has the same roots)
  std::optional<Real> covol;
  const BinaryCubicForm* monic = nullptr;
  if (f.a == 1 || f.a == -1)
    monic = &f;
  else if (fred.a == 1 || fred.a == -1)
    monic = &fred;
  if (monic) {
    CubicOrder order(*monic, an.prec_bits);
    std::vector<OrderElement> units =
        external_units ? *external_units : search_units(order, unit_coeff_bound);
    UnitLattice lat = build_lattice(order, units);
    LatticeSummary ls;
    ls.generator_count = static_cast<int>(lat.generators.size());
    ls.b1_element = lat.b1_element;
    ls.b2_element = lat.b2_element;
    ls.b1 = lat.b1;
    ls.b2 = lat.b2;
    ls.covolume = lat.covolume;
    an.lattice = ls;
    covol = lat.covolume;
  }

  std::string label = f.a.get_str() + "," + f.b.get_str() + "," + f.c.get_str() + "," +
                      f.d.get_str();
  Real tol = gap_tolerance(an.prec_bits);
  Real dval = Real::of(an.disc, 2 * an.prec_bits);
  for (int k = 0; k < 3; ++k) {
    const auto& members = an.classes[static_cast<size_t>(k)];
    if (members.empty()) continue;
    std::vector<PointEvaluation> evs;
    for (int idx : members) evs.push_back(*an.solutions[static_cast<size_t>(idx)].evaluation);
    an.gap_reports.push_back(build_gap_report(label, k, std::move(evs), an.disc, covol,
                                              an.prec_bits));
  }

  for (const auto& sp : an.solutions) {
    DiscBounds b = disc_from_t(sp.evaluation->t);
    if (b.general + tol < dval) ++an.disc_bound_violations;
  }
  return an;
}

}  // namespace thue
