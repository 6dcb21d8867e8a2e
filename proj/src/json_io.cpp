#include "thue/json_io.hpp"

namespace thue {

int real_digits_for(unsigned prec_bits) {
  // full decimal content of the mantissa
  return static_cast<int>(static_cast<double>(clamp_prec(prec_bits)) * 0.30103) + 1;
}

std::string real_str(const Real& v, int digits) { return v.str(digits); }

Json to_json(const BinaryCubicForm& f) {
  return Json{{"a", f.a.get_str()}, {"b", f.b.get_str()}, {"c", f.c.get_str()},
              {"d", f.d.get_str()}};
}

Json to_json(const QuadraticForm& h) {
  return Json{{"A", h.A.get_str()}, {"B", h.B.get_str()}, {"C", h.C.get_str()}};
}

Json to_json(const UnimodularMap& g) {
  return Json{{"a1", g.a1.get_str()}, {"a2", g.a2.get_str()}, {"a3", g.a3.get_str()},
              {"a4", g.a4.get_str()}};
}

Json to_json(const PointEvaluation& ev, int digits) {
  return Json{{"x", std::to_string(ev.x)},
              {"y", std::to_string(ev.y)},
              {"related_index", std::to_string(ev.related_index)},
              {"u1", real_str(ev.u1, digits)},
              {"u2", real_str(ev.u2, digits)},
              {"u3", real_str(ev.u3, digits)},
              {"p", real_str(ev.p, digits)},
              {"q", real_str(ev.q, digits)},
              {"t", real_str(ev.t, digits)},
              {"s", real_str(ev.s, digits)}};
}

Json to_json(const SolutionPoint& sp, int digits) {
  Json j{{"x", std::to_string(sp.x)},
         {"y", std::to_string(sp.y)},
         {"value", std::to_string(sp.value)}};
  if (sp.evaluation) j["evaluation"] = to_json(*sp.evaluation, digits);
  return j;
}

Json to_json(const GapReport& rep, int digits) {
  Json pts = Json::array();
  for (const auto& p : rep.points) pts.push_back(to_json(p, digits));
  Json checks = Json::array();
  for (const auto& c : rep.checks)
    checks.push_back(Json{{"name", c.name},
                          {"holds", c.holds},
                          {"margin", real_str(c.margin, digits)}});
  return Json{{"form", rep.form_label},
              {"related_index", std::to_string(rep.related_index)},
              {"points", pts},
              {"checks", checks}};
}

namespace {
Json vec_json(const Vec3& v, int digits) {
  return Json::array({real_str(v[0], digits), real_str(v[1], digits),
                      real_str(v[2], digits)});
}

Json element_json(const OrderElement& e) {
  return Json::array({e.e0.get_str(), e.e1.get_str(), e.e2.get_str()});
}
}  // namespace

Json to_json(const LatticeSummary& ls, int digits) {
  return Json{{"generator_count", std::to_string(ls.generator_count)},
              {"b1_element", element_json(ls.b1_element)},
              {"b2_element", element_json(ls.b2_element)},
              {"b1", vec_json(ls.b1, digits)},
              {"b2", vec_json(ls.b2, digits)},
              {"covolume", real_str(ls.covolume, digits)}};
}

Json to_json(const FormAnalysis& an, int digits) {
  Json sols = Json::array();
  for (const auto& s : an.solutions) sols.push_back(to_json(s, digits));
  Json classes = Json::array();
  for (const auto& cl : an.classes) {
    Json c = Json::array();
    for (int i : cl) c.push_back(std::to_string(i));
    classes.push_back(c);
  }
  Json reps = Json::array();
  for (const auto& r : an.gap_reports) reps.push_back(to_json(r, digits));

  Json j{{"form", to_json(an.form)},
         {"discriminant", an.disc.get_str()},
         {"box", std::to_string(an.box)},
         {"prec_bits", std::to_string(an.prec_bits)},
         {"count", std::to_string(an.count)},
         {"note", "solution list complete within the search box only"},
         {"solutions", sols},
         {"analyzed", an.analyzed}};
  if (an.analyzed) {
    j["reduced"] = to_json(an.reduced);
    j["to_reduced"] = to_json(an.to_reduced);
    j["classes"] = classes;
    j["gap_reports"] = reps;
    j["hessian_floor_ok"] = an.hessian_floor_ok;
    if (an.hessian_exception)
      j["hessian_exception"] = Json::array({std::to_string(an.hessian_exception->first),
                                            std::to_string(an.hessian_exception->second)});
    j["disc_bound_violations"] = std::to_string(an.disc_bound_violations);
    if (an.lattice)
      j["unit_lattice"] = to_json(*an.lattice, digits);
    else
      j["unit_lattice"] = nullptr;
  }
  return j;
}

Json to_json(const ThresholdReport& rep, int digits) {
  Json consts;
  for (const auto& [k, v] : rep.constants) consts[k] = real_str(v, digits);
  Real ratio = rep.d_star / rep.paper_d;
  return Json{{"branch", branch_name(rep.branch)},
              {"t_star", real_str(rep.t_star, digits)},
              {"d_star", real_str(rep.d_star, digits)},
              {"paper_t", real_str(rep.paper_t, 6)},
              {"paper_d", real_str(rep.paper_d, 3)},
              {"d_ratio_computed_over_paper", real_str(ratio, digits)},
              {"iterations", std::to_string(rep.iterations)},
              {"constants", consts}};
}

BinaryCubicForm form_from_json(const Json& j) {
  auto get = [&](const char* k) {
    const auto& v = j.at(k);
    return Int(v.get<std::string>());
  };
  return {get("a"), get("b"), get("c"), get("d")};
}

std::vector<OrderElement> order_elements_from_json(const Json& j) {
  std::vector<OrderElement> out;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != 3)
      throw Error("BadUnitList", "expected [e0, e1, e2] integer triples");
    out.push_back(OrderElement{Int(row[0].get<std::string>()),
                               Int(row[1].get<std::string>()),
                               Int(row[2].get<std::string>())});
  }
  return out;
}

}  // namespace thue
