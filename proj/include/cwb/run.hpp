// Command layer shared by the cwb binary and the test suites: executes one
// verification/solver command on a parsed document and produces a
// machine-readable JSON report plus a plain-text summary. Reports are
// deterministic: identical input bytes give identical output bytes.
#pragma once

#include <json.hpp>
#include <map>
#include <string>

#include "cwb/dsl.hpp"

namespace cwb {

struct RunOptions {
  std::map<Sym, Rat> at;  // parameter specialisations from --at
  int h2_deg = 6;
  int cder_deg_l = 4;
  int cder_deg_d = 4;
  int coeff_window = 3;
  int rank1_deg = 4;
  bool survey = true;  // explore special parameter points automatically
  std::vector<std::string> unknowns;  // for `solve`
};

struct RunResult {
  int exit_code = 0;  // 0 pass, 1 verification failure
  std::string text;
  nlohmann::ordered_json json;
};

// command: check | h2 | cder | coeff | modules | gd | solve | report
RunResult run_command(const AlgebraDoc& doc, const std::string& command,
                      const RunOptions& opt);

// Executes the document's job directives in order; empty job list gives an
// empty report and exit 0.
RunResult run_jobs(const AlgebraDoc& doc, const RunOptions& base);

// --at "a=1,b=3/2" -> assignments against the document's parameters.
std::map<Sym, Rat> parse_at(const AlgebraDoc& doc, const std::string& spec);

}  // namespace cwb
