// Conformal derivations at bounded polynomial degree: the derivation
// equation as a linear system, the inner subspace spanned by ad(d^t e_k), and
// the outer quotient with explicit representatives. Bounded results are
// evidence for the unbounded statements; stability under raising the bounds
// is the check the callers perform.
#pragma once

#include "cwb/lca.hpp"
#include "cwb/linalg.hpp"

namespace cwb {

// d_l(e_i) = sum_j entries[i][j](l, d) e_j.
struct DerivationMap {
  int rank = 0;
  std::vector<std::vector<Poly>> entries;
  static DerivationMap zero(int rank);
  const Poly& at(int i, int j) const {
    return entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
};

// ad(p(d) e_k), materialised as a derivation map.
DerivationMap ad_map(const LcaPresentation& a, int k, const Poly& p_of_d);

// Residuals of the derivation equation on sorted generator pairs.
VerifyReport is_derivation(const LcaPresentation& a, const DerivationMap& d);

struct DerivationSpace {
  int rank = 0;
  int deg_l = 0, deg_d = 0;   // requested bounds
  int box_l = 0, box_d = 0;   // coordinate box (equal to the bounds)
  SolutionSpace all;          // derivations within the box
  std::vector<VecF> inner_basis;
  std::vector<VecF> outer_reps;  // reduced against the inner span
  std::vector<Poly> genericity;

  int dim_all() const { return all.dim(); }
  int dim_inner() const { return static_cast<int>(inner_basis.size()); }
  int outer_dim() const { return static_cast<int>(outer_reps.size()); }

  // Coordinate layout over the box: ((i*rank + j)*(box_l+1) + s)*(box_d+1) + t
  // holds the coefficient of l^s d^t in entries[i][j].
  int column(int i, int j, int s, int t) const;
  int num_columns() const;
  DerivationMap map_from_vector(const VecF& v) const;
  VecF vector_from_map(const DerivationMap& m) const;
};

// Solves the derivation equation for all maps with deg_l/deg_d coefficient
// bounds. Inner generators ad(d^t e_k), t <= deg_d, are materialised in the
// same coordinate space when they fit the box (those that do are genuine
// bounded solutions, so inner is a subspace of all); the outer representatives
// are the solutions surviving reduction against that span.
DerivationSpace solve_derivations(const LcaPresentation& a, int deg_l,
                                  int deg_d);

}  // namespace cwb
