// Finite free Lie conformal algebras presented by structure polynomials
// P[i][j][k](d, l) with [e_i l e_j] = sum_k P[i][j][k] e_k. Provides bracket
// evaluation on general elements, exact verification of skew-symmetry and the
// Jacobi identity, the built-in families, and an affine constraint solver for
// parametric presentations.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cwb/linalg.hpp"
#include "cwb/poly.hpp"
#include "cwb/report.hpp"

namespace cwb {

struct LcaPresentation {
  int rank = 0;
  std::vector<std::string> gens;
  SymList params;
  // table[i][j][k] in (d, l) and the parameters.
  std::vector<std::vector<std::vector<Poly>>> table;
  // Generators with a trivial d-action (the central element of an
  // extension); their coordinates are normalised with d -> 0.
  std::vector<bool> central;
  std::string name;

  static LcaPresentation make(std::string name, std::vector<std::string> gens,
                              SymList params);

  const Poly& entry(int i, int j, int k) const {
    return table[static_cast<size_t>(i)][static_cast<size_t>(j)]
                [static_cast<size_t>(k)];
  }
  void set_entry(int i, int j, int k, Poly p);
  // Installs the (j,i) bracket forced by skew-symmetry from the (i,j) one.
  void complete_skew(int i, int j);

  int gen_index(const std::string& g) const;
  bool is_central(int k) const { return central[static_cast<size_t>(k)]; }
  bool has_central() const;
  int max_lambda_degree() const;
  int max_del_degree() const;

  LcaPresentation specialized(const std::map<Sym, Rat>& assignment) const;
  LcaPresentation substituted(const std::map<Sym, Poly>& assignment) const;
  bool table_equal(const LcaPresentation& o) const;
  std::string describe_point(const std::map<Sym, Rat>& assignment) const;
};

// A C[d]-module element: one polynomial in d per generator.
struct Element {
  std::vector<Poly> coords;
  static Element gen(const LcaPresentation& a, int i);
};

// A value in R[l]: one polynomial in (d, l) per generator.
struct LambdaValue {
  std::vector<Poly> coords;
  bool is_zero() const;
};

// [x_l y]: the bilinear, sesquilinear extension of the structure table.
LambdaValue bracket(const LcaPresentation& a, const Element& x,
                    const Element& y);

// Skew-symmetry residuals P[i][j][k](d,l) + P[j][i][k](d,-l-d) over all
// ordered pairs.
VerifyReport check_skew(const LcaPresentation& a);

// Jacobi residuals on sorted generator triples i <= j <= k (sufficient given
// skew-symmetry, which is re-checked first).
VerifyReport check_jacobi(const LcaPresentation& a);

// Residual of the Jacobi identity for one ordered triple, per target
// coordinate, identically in (d, l, m).
std::vector<Poly> jacobi_residual(const LcaPresentation& a, int i, int j,
                                  int k);

// Built-in families, tables exactly as published.
LcaPresentation builtin_vir();
LcaPresentation builtin_sv();
LcaPresentation builtin_dsv();
LcaPresentation builtin_tsv_ab();  // symbolic parameters a, b
LcaPresentation builtin_tsv_ab(const Rat& a, const Rat& b);
LcaPresentation builtin_tsv_c();  // symbolic parameter c
LcaPresentation builtin_tsv_c(const Rat& c);
// Current algebra of a finite-dimensional Lie algebra given by structure
// constants lie[i][j][k] (must be antisymmetric).
LcaPresentation builtin_cur(const std::vector<std::string>& names,
                            const std::vector<std::vector<std::vector<Rat>>>& lie);

struct ConstraintSolution {
  bool consistent = true;
  // Solved unknowns with their expressions over the free unknowns and the
  // remaining parameters.
  std::vector<std::pair<Sym, RatFn>> solved;
  std::vector<Sym> free_unknowns;
  std::vector<Poly> genericity;
  // Nonempty when the residuals were rejected as nonlinear.
  std::string rejection;

  std::optional<RatFn> value_of(const Sym& u) const;
};

// Solves skew + Jacobi residual constraints for the given parameter
// unknowns. Skew constraints are solved and substituted before the Jacobi
// stage; within each stage, equations free of unknown-products are solved
// and substituted iteratively. Unknowns later in `unknowns` are eliminated
// preferentially, so the leading ones stay free.
ConstraintSolution solve_parameter_constraints(const LcaPresentation& a,
                                               const std::vector<Sym>& unknowns);

}  // namespace cwb
