#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "thue/numerics.hpp"

namespace thue::cli {

struct CliConfig {
  unsigned prec_bits = kDefaultPrecBits;
  long box = 1000;
  long unit_coeff_bound = 10;
  bool text_output = false;
  bool paper_constants = false;
};

// Parses argv (without the program name) and runs one subcommand, writing the
// report to `out` and diagnostics to `err`. Exit codes: 0 success, 1
// component error (JSON error object on out), 2 usage error.
int run_command(const std::vector<std::string>& argv, std::ostream& out,
                std::ostream& err);

}  // namespace thue::cli
