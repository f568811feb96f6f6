// Rank-1 free conformal modules: the compatibility check for candidate
// actions and a staged linear classifier for the rank-3 families in which
// [Y M] = [M M] = 0 and C[d]L is the Virasoro subalgebra. The classifier
// mirrors the published proof: the L-action is axiomatised from the known
// rank-1 Virasoro modules rather than re-derived (that solve is quadratic).
#pragma once

#include "cwb/lca.hpp"
#include "cwb/linalg.hpp"
#include "cwb/report.hpp"

namespace cwb {

// e_i acting on the free generator: e_i_l v = act[i](l, d) v.
struct Rank1Action {
  std::vector<Poly> act;
  static Rank1Action of(std::vector<Poly> entries);
};

// Residual of a_l(b_m v) - b_m(a_l v) = [a_l b]_{l+m} v on all ordered
// generator pairs (sesquilinearity is structural).
VerifyReport check_module(const LcaPresentation& a, const Rank1Action& act);

struct Rank1Family {
  Rank1Action action;     // entries over algebra params + module params
  SymList module_params;  // free parameters of this family
  bool trivial = false;
  std::string note;
};

struct Rank1Classification {
  std::map<Sym, Rat> point;  // algebra-parameter values (empty = symbolic)
  std::vector<Rank1Family> families;
  std::vector<Poly> genericity;
  // The Y-M compatibility is vacuous when the solved M-action is zero; the
  // classifier records that it took this branch.
  bool h_branch_vacuous = false;
};

// Staged solve at the presentation's own parameter values. deg_bound bounds
// the degree of the solved actions in each of l and d; stability under
// raising it is the caller's cross-check.
Rank1Classification classify_rank1(const LcaPresentation& a, int deg_bound);

// classify_rank1 symbolically plus at every candidate special point read off
// the recorded pivots (restricted to the algebra parameters).
std::vector<Rank1Classification> survey_rank1(const LcaPresentation& a,
                                              int deg_bound);

}  // namespace cwb
