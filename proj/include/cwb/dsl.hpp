// The .lca text format: presentations, Gel'fand-Dorfman product blocks and
// job directives, with a recursive-descent parser (line/column errors) and a
// canonical renderer (parse . render is the identity on canonical documents).
//
//   algebra TSV(a, b) {
//     generators: L, Y, M;
//     bracket L L = (d+2*l)*L;
//     bracket L Y = (d+a*l+b)*Y;
//     ...
//     novikov L L = (1)*L;       # optional GD blocks
//     lie L Y = (-b)*Y;
//     job check;                 # optional batch directives
//   }
//
// `d` and `l` denote the translation generator and the bracket variable;
// m, n, x, y are reserved. A bracket clause for (i, j) fills (j, i) by
// skew-completion; an explicit conflicting clause is an error.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cwb/gdb.hpp"
#include "cwb/lca.hpp"

namespace cwb {

struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  int line;
  int col;
};

struct JobDirective {
  std::string command;
  std::vector<std::string> args;
};

struct AlgebraDoc {
  std::string name;
  SymList params;
  std::vector<std::string> gens;
  bool has_bracket_block = false;
  bool has_gd_block = false;
  LcaPresentation presentation;  // zero table when no bracket clauses
  GdBialgebra bialgebra;         // zero products when no GD clauses
  std::vector<JobDirective> jobs;
};

AlgebraDoc parse_algebra(const std::string& text);
AlgebraDoc parse_algebra_file(const std::string& path);

std::string render_algebra(const AlgebraDoc& doc);

}  // namespace cwb
