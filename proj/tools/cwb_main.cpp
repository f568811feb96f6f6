// cwb: batch verifier and solver for Lie conformal algebra presentations.
// Reads an .lca document, runs one verification/solver command, prints a text
// summary and optionally writes a deterministic JSON report.
// Exit codes: 0 pass, 1 verification failure, 2 usage or parse error.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "cwb/run.hpp"

namespace {

int write_json(const std::string& path, const nlohmann::ordered_json& j) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return 2;
  }
  out << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cwb - exact workbench for Lie conformal algebras"};
  app.require_subcommand(1);

  std::string file, at_spec, json_path, out_path, unknowns_spec;
  int h2_deg = 6, cder_l = 4, cder_d = 4, window = 3, rank1_deg = 4;
  bool no_survey = false, rank1 = false;

  auto add_common = [&](CLI::App* sub, bool survey_opt) {
    sub->add_option("file", file, "input .lca document")->required();
    sub->add_option("--at", at_spec, "parameter values, e.g. a=1,b=3/2");
    sub->add_option("--json", json_path, "write the JSON report here");
    if (survey_opt)
      sub->add_flag("--no-survey", no_survey,
                    "skip automatic special-point exploration");
  };

  CLI::App* c_check = app.add_subcommand("check", "verify skew-symmetry and the Jacobi identity");
  add_common(c_check, false);

  CLI::App* c_h2 = app.add_subcommand("h2", "central extensions: dim H^2 and representatives");
  add_common(c_h2, true);
  c_h2->add_option("--deg", h2_deg, "lambda-degree bound (default 6)");

  CLI::App* c_cder = app.add_subcommand("cder", "conformal derivations and the outer quotient");
  add_common(c_cder, false);
  c_cder->add_option("--deg-l", cder_l, "lambda-degree bound (default 4)");
  c_cder->add_option("--deg-d", cder_d, "d-degree bound (default 4)");

  CLI::App* c_coeff = app.add_subcommand("coeff", "coefficient-algebra window and Jacobi check");
  add_common(c_coeff, false);
  c_coeff->add_option("--window", window, "index window radius (default 3)");

  CLI::App* c_mod = app.add_subcommand("modules", "free rank-1 conformal modules");
  add_common(c_mod, true);
  c_mod->add_flag("--rank1", rank1, "classify rank-1 modules (default and only mode)");
  c_mod->add_option("--deg", rank1_deg, "action degree bound (default 4)");

  CLI::App* c_gd = app.add_subcommand("gd", "Gel'fand-Dorfman checks and the quadratic correspondence");
  add_common(c_gd, false);

  CLI::App* c_solve = app.add_subcommand("solve", "solve skew/Jacobi constraints for parameters");
  add_common(c_solve, false);
  c_solve->add_option("--unknowns", unknowns_spec, "comma-separated parameter names")->required();

  CLI::App* c_run = app.add_subcommand("run", "execute the document's job directives");
  add_common(c_run, false);

  CLI::App* c_report = app.add_subcommand("report", "run every applicable analysis");
  add_common(c_report, true);
  c_report->add_option("-o,--output", out_path, "JSON report path")->required();
  c_report->add_option("--deg", h2_deg, "lambda-degree bound for h2 (default 6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    cwb::AlgebraDoc doc = cwb::parse_algebra_file(file);
    cwb::RunOptions opt;
    opt.at = cwb::parse_at(doc, at_spec);
    opt.h2_deg = h2_deg;
    opt.cder_deg_l = cder_l;
    opt.cder_deg_d = cder_d;
    opt.coeff_window = window;
    opt.rank1_deg = rank1_deg;
    opt.survey = !no_survey;
    if (!unknowns_spec.empty()) {
      std::istringstream ss(unknowns_spec);
      for (std::string u; std::getline(ss, u, ',');) opt.unknowns.push_back(u);
    }

    std::string command;
    for (CLI::App* sub : app.get_subcommands()) command = sub->get_name();
    cwb::RunResult rr = command == "run" ? cwb::run_jobs(doc, opt)
                                         : cwb::run_command(doc, command, opt);
    std::cout << rr.text;
    if (!json_path.empty()) {
      int rc = write_json(json_path, rr.json);
      if (rc) return rc;
    }
    if (command == "report") {
      int rc = write_json(out_path, rr.json);
      if (rc) return rc;
    }
    return rr.exit_code;
  } catch (const cwb::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
