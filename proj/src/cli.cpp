#include "thue/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

#include "thue/corpus.hpp"
#include "thue/json_io.hpp"
#include "thue/matveev.hpp"

namespace thue::cli {

namespace {

BinaryCubicForm form_from_args(const std::vector<std::string>& coeffs) {
  return {Int(coeffs[0]), Int(coeffs[1]), Int(coeffs[2]), Int(coeffs[3])};
}

const std::string kIntegerPattern = "-?[0-9]+";

std::optional<std::vector<OrderElement>> load_units(const std::string& path) {
  if (path.empty()) return std::nullopt;
  std::ifstream in(path);
  Json j = Json::parse(in);
  std::vector<OrderElement> out;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != 3)
      throw Error("BadUnitList", "expected [e0, e1, e2] integer triples");
    auto as_int = [](const Json& v) {
      return v.is_string() ? Int(v.get<std::string>()) : Int(v.get<long>());
    };
    out.push_back(OrderElement{as_int(row[0]), as_int(row[1]), as_int(row[2])});
  }
  return out;
}

void emit(const Json& j, bool text, std::ostream& out) {
  if (text)
    out << j.dump(2) << "\n";
  else
    out << j.dump() << "\n";
}

unsigned env_default_prec() {
  if (const char* v = std::getenv("CUBIC_THUE_PREC_BITS")) {
    char* end = nullptr;
    long p = std::strtol(v, &end, 10);
    if (end && *end == '\0' && p >= 64 && p <= 16384) return static_cast<unsigned>(p);
  }
  return kDefaultPrecBits;
}

}  // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"cubic Thue equation toolkit: covariants, reduction, solutions, "
               "resolvent geometry, gap principles and Baker-bound thresholds"};
  app.require_subcommand(1);

  CliConfig cfg;
  cfg.prec_bits = env_default_prec();
  std::string output_mode = "json";
  app.add_option("--prec", cfg.prec_bits, "working precision in bits")
      ->check(CLI::Range(64, 16384))
      ->capture_default_str();
  app.add_option("--box", cfg.box, "enumeration box: max(|x|,|y|) <= box")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--unit-bound", cfg.unit_coeff_bound,
                 "coefficient bound of the unit box search")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--output", output_mode, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_flag("--paper-constants", cfg.paper_constants,
               "use the literal decimal constants of the source text in the "
               "threshold branches");
  std::string units_file;
  app.add_option("--units-file", units_file,
                 "JSON list of [e0,e1,e2] integer triples to use as units, "
                 "bypassing the box search")
      ->check(CLI::ExistingFile);

  std::vector<std::string> coeffs;
  auto add_form_cmd = [&](const char* name, const char* desc) {
    CLI::App* c = app.add_subcommand(name, desc);
    c->fallthrough();
    c->add_option("coeffs", coeffs, "form coefficients a b c d")
        ->expected(4)
        ->required()
        ->check(CLI::Validator(
            [](std::string& s) {
              for (size_t i = 0; i < s.size(); ++i) {
                bool dig = s[i] >= '0' && s[i] <= '9';
                if (!(dig || (i == 0 && s[i] == '-' && s.size() > 1)))
                  return std::string("not an integer: ") + s;
              }
              return std::string();
            },
            "INT"));
    return c;
  };

  CLI::App* cov = add_form_cmd("covariants", "discriminant, Hessian, G covariant, syzygy");
  CLI::App* red = add_form_cmd("reduce", "reduced form and unimodular map");
  CLI::App* sol = add_form_cmd("solve", "enumerate solution classes of |F| = 1");
  CLI::App* ana = add_form_cmd("analyze", "full geometric analysis of one form");
  CLI::App* gap = add_form_cmd("gaps", "gap-principle report suite");

  CLI::App* bounds = app.add_subcommand("bounds", "threshold reports");
  bounds->fallthrough();
  std::string branch = "all";
  bounds->add_option("--branch", branch, "branch selection")
      ->check(CLI::IsMember({"pass1", "pass2", "nonmonic", "all"}));

  CLI::App* fam = app.add_subcommand("family", "named form families");
  fam->fallthrough();
  std::string family_name;
  long family_param = 0;
  fam->add_option("name", family_name, "thomas | fm")->required()
      ->check(CLI::IsMember({"thomas", "fm"}));
  fam->add_option("param", family_param, "family parameter")->required();

  CLI::App* verify = app.add_subcommand("verify-corpus",
                                        "run the acceptance criteria over the corpus");
  verify->fallthrough();

  std::vector<const char*> cargs;
  cargs.push_back("thue");
  for (const auto& a : argv) cargs.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  bool text = output_mode == "text";
  int digits = real_digits_for(cfg.prec_bits);

  try {
    if (cov->parsed()) {
      BinaryCubicForm f = form_from_args(coeffs);
      Json j{{"form", to_json(f)},
             {"D", discriminant(f).get_str()},
             {"H", to_json(hessian(f))},
             {"G", to_json(g_covariant(f))},
             {"syzygy", syzygy_check(f)}};
      emit(j, text, out);
    } else if (red->parsed()) {
      BinaryCubicForm f = form_from_args(coeffs);
      auto [fr, g] = reduce(f);
      Json j{{"form", to_json(f)},
             {"reduced", to_json(fr)},
             {"map", to_json(g)},
             {"D", discriminant(f).get_str()},
             {"reduced_hessian", to_json(hessian(fr))}};
      emit(j, text, out);
    } else if (sol->parsed()) {
      BinaryCubicForm f = form_from_args(coeffs);
      auto sols = enumerate_solutions(f, cfg.box);
      Json arr = Json::array();
      for (const auto& s : sols) arr.push_back(to_json(s, digits));
      Json j{{"form", to_json(f)},
             {"D", discriminant(f).get_str()},
             {"box", std::to_string(cfg.box)},
             {"count", std::to_string(sols.size())},
             {"note", "solution list complete within the search box only"},
             {"solutions", arr}};
      emit(j, text, out);
    } else if (ana->parsed()) {
      BinaryCubicForm f = form_from_args(coeffs);
      auto ext = load_units(units_file);
      FormAnalysis an = analyze_form(f, cfg.box, cfg.prec_bits, cfg.unit_coeff_bound,
                                     ext ? &*ext : nullptr);
      Json j = to_json(an, digits);
      j["real_digits"] = std::to_string(digits);
      emit(j, text, out);
    } else if (gap->parsed()) {
      BinaryCubicForm f = form_from_args(coeffs);
      auto ext = load_units(units_file);
      FormAnalysis an = analyze_form(f, cfg.box, cfg.prec_bits, cfg.unit_coeff_bound,
                                     ext ? &*ext : nullptr);
      Json reps = Json::array();
      for (const auto& r : an.gap_reports) reps.push_back(to_json(r, digits));
      Json j{{"form", to_json(f)},
             {"D", an.disc.get_str()},
             {"real_digits", std::to_string(digits)},
             {"gap_reports", reps}};
      if (an.lattice) j["covolume"] = real_str(an.lattice->covolume, digits);
      emit(j, text, out);
    } else if (bounds->parsed()) {
      ThresholdConfig tc{cfg.prec_bits, cfg.paper_constants};
      std::vector<ThresholdReport> reps;
      if (branch == "all")
        reps = thresholds_report(tc);
      else if (branch == "pass1")
        reps = {solve_t_threshold(ThresholdBranch::theorem11_pass1, VolPolicy::cancel, tc)};
      else if (branch == "pass2")
        reps = {solve_t_threshold(ThresholdBranch::theorem11_pass2, VolPolicy::cancel, tc)};
      else
        reps = {solve_t_threshold(ThresholdBranch::theorem12_nonmonic, VolPolicy::cancel, tc)};
      if (reps.size() == 1) {
        Json j = to_json(reps[0], digits);
        j["real_digits"] = std::to_string(digits);
        emit(j, text, out);
      } else {
        Json arr = Json::array();
        for (const auto& r : reps) {
          Json j = to_json(r, digits);
          j["real_digits"] = std::to_string(digits);
          arr.push_back(j);
        }
        emit(arr, text, out);
      }
    } else if (fam->parsed()) {
      Family fv = family_name == "thomas" ? Family::thomas_g1 : Family::f_m;
      BinaryCubicForm f = family_form(fv, family_param);
      emit(to_json(f), text, out);
    } else if (verify->parsed()) {
      CorpusResult res = verify_corpus({cfg.prec_bits, cfg.box, cfg.unit_coeff_bound});
      out << res.text;
      return res.all_pass ? 0 : 1;
    }
  } catch (const Error& e) {
    emit(Json{{"error", e.code()}, {"detail", e.what()}}, text, out);
    return 1;
  } catch (const std::exception& e) {
    emit(Json{{"error", "Internal"}, {"detail", e.what()}}, text, out);
    return 1;
  }
  return 0;
}

}  // namespace thue::cli
