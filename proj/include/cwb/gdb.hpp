// Finite-dimensional Gel'fand-Dorfman bialgebras: a Novikov product and a
// Lie bracket on one space with the compatibility condition, plus the two-way
// correspondence with quadratic Lie conformal algebras.
#pragma once

#include "cwb/lca.hpp"
#include "cwb/report.hpp"

namespace cwb {

struct GdBialgebra {
  int dim = 0;
  std::vector<std::string> basis;
  SymList params;
  // circ[i][j][k]: coefficient of e_k in e_i o e_j; entries in Q[params].
  std::vector<std::vector<std::vector<Poly>>> circ;
  // lie[i][j][k]: coefficient of e_k in [e_i, e_j]; antisymmetric in (i,j).
  std::vector<std::vector<std::vector<Poly>>> lie;
  std::string name;

  static GdBialgebra make(std::string name, std::vector<std::string> basis,
                          SymList params);
  void set_circ(int i, int j, int k, Poly c);
  void set_lie(int i, int j, int k, Poly c);  // also sets the (j,i) negative
  const Poly& circ_at(int i, int j, int k) const;
  const Poly& lie_at(int i, int j, int k) const;
  // star = circ + flip(circ); kept implicit per the correspondence theorem.
  Poly star_at(int i, int j, int k) const;

  bool equal(const GdBialgebra& o) const;
};

// Right-commutativity and left-symmetry of circ on all basis triples.
VerifyReport check_novikov(const GdBialgebra& g);
// Antisymmetry (structural) and the Jacobi identity of lie.
VerifyReport check_lie(const GdBialgebra& g);
// The mixed compatibility [a o b, c] - [a o c, b] + [a,b] o c - [a,c] o b
// - a o [b,c] = 0.
VerifyReport check_gd_compat(const GdBialgebra& g);
// All three of the above.
VerifyReport check_gd(const GdBialgebra& g);

// [a_l b] = d(b o a) + [b, a] + l(b * a); requires the axioms to hold.
LcaPresentation to_quadratic(const GdBialgebra& g);

struct FromQuadratic {
  bool ok = false;
  GdBialgebra bialgebra;
  std::string error;  // names the offending monomial/entry when !ok
};
// Inverse of to_quadratic; fails on tables that are not affine in (d, l) or
// whose l-coefficient is not the symmetrisation of the d-coefficient.
FromQuadratic from_quadratic(const LcaPresentation& a);

// The paper's 3-dimensional bialgebra V(a,b) corresponding to TSV(a,b).
GdBialgebra builtin_v_ab();
GdBialgebra builtin_v_ab(const Rat& a, const Rat& b);

GdBialgebra specialized(const GdBialgebra& g, const std::map<Sym, Rat>& vals);

// True when every basis vector is in the span of products {y o z}; the
// hypothesis under which the degree-3 bound of the quadratic cocycle solver
// is a theorem.
bool circ_surjective(const GdBialgebra& g);

}  // namespace cwb
