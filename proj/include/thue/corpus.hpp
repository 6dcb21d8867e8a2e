#pragma once

#include <string>

#include "thue/numerics.hpp"

namespace thue {

struct CorpusConfig {
  unsigned prec_bits = kDefaultPrecBits;
  long box = 1000;
  long unit_coeff_bound = 10;
};

struct CorpusResult {
  std::string text;  // one PASS/FAIL line per acceptance criterion
  bool all_pass = false;
};

// Runs the whole acceptance-criteria battery over the golden corpus. The
// criteria lines are fully deterministic; the determinism criterion itself is
// checked by running the battery twice and comparing byte-for-byte.
CorpusResult verify_corpus(const CorpusConfig& cfg = {});

}  // namespace thue
