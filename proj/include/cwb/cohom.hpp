// Central extensions by a one-dimensional center: the generic 2-cocycle
// solver at a lambda-degree bound, the coboundary quotient with deterministic
// H^2 representatives, the specialised solver for quadratic algebras (via the
// finite bilinear-form conditions), and the extension constructor.
#pragma once

#include "cwb/gdb.hpp"
#include "cwb/lca.hpp"
#include "cwb/linalg.hpp"

namespace cwb {

// alpha_l(e_i, e_j) per ordered generator pair; values in l and params only
// (the center is killed by d).
struct Cocycle {
  int rank = 0;
  std::vector<std::vector<Poly>> val;

  static Cocycle zero(int rank);
  // Builds from the given ordered pairs and fills the skew partners via
  // alpha_l(i,j) = -alpha_{-l}(j,i); conflicting or inconsistent entries
  // throw.
  static Cocycle from_pairs(int rank,
                            const std::map<std::pair<int, int>, Poly>& entries);
  const Poly& at(int i, int j) const {
    return val[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
};

// Residuals of the cocycle conditions for a concrete candidate; empty witness
// list means alpha is a 2-cocycle.
VerifyReport check_cocycle(const LcaPresentation& a, const Cocycle& alpha);

struct CocycleSolution {
  int rank = 0;
  int deg_bound = 0;
  SolutionSpace z2;
  std::vector<VecF> b2_basis;
  std::vector<VecF> h2_reps;
  std::vector<Poly> genericity;

  int dim_z2() const { return z2.dim(); }
  int dim_b2() const { return static_cast<int>(b2_basis.size()); }
  int dim_h2() const { return static_cast<int>(h2_reps.size()); }

  // Coordinate layout: column (i*rank + j)*(deg_bound+1) + t holds the
  // coefficient of l^t in alpha_l(e_i, e_j).
  int column(int i, int j, int t) const;
  int num_columns() const { return rank * rank * (deg_bound + 1); }
  Cocycle cocycle_from_vector(const VecF& v) const;
  VecF vector_from_cocycle(const Cocycle& c) const;
};

// Z^2 from the functional equation on all generator triples, B^2 from the
// generator shifts, H^2 representatives by reduced-echelon selection against
// the B^2 basis.
CocycleSolution solve_cocycles(const LcaPresentation& a, int deg_bound);

// The quadratic-algebra route: solves the finite conditions on the bilinear
// forms alpha_0..alpha_3 and reconstructs alpha_l = sum l^i alpha_i. The
// degree-3 bound is a theorem under the product-surjectivity hypothesis,
// which is verified (not assumed). deg_bound only fixes the coordinate
// layout so results are comparable with solve_cocycles.
CocycleSolution solve_cocycles_quadratic(const GdBialgebra& g, int deg_bound);

// Rank n+1 presentation with central generator `central_name`; alpha must be
// a 2-cocycle.
LcaPresentation extend(const LcaPresentation& a, const Cocycle& alpha,
                       const std::string& central_name = "cc");

// The coboundary of the generator shift e_k -> e_k + c_k * center:
// delta_l(e_i,e_j) = sum_k P[i][j][k](0, l) c_k.
Cocycle coboundary(const LcaPresentation& a, const std::vector<Poly>& shifts);

// Rewrites an extended presentation in the shifted generators
// e_i' = e_i + s_i * center; shifting by the vector that produced a
// coboundary term cancels it.
LcaPresentation shift_central(const LcaPresentation& extended,
                              const std::vector<Poly>& shifts);

struct CocycleSurveyEntry {
  std::map<Sym, Rat> point;  // empty entries stay symbolic
  CocycleSolution sol;
};

// Symbolic solve plus automatic re-solves at every parameter point where a
// recorded pivot vanishes (rational roots of the genericity polynomials).
std::vector<CocycleSurveyEntry> survey_cocycles(const LcaPresentation& a,
                                                int deg_bound);

}  // namespace cwb
