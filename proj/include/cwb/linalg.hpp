// Exact linear algebra over the fraction field Q(params): nullspaces, affine
// solves and span manipulation via fraction-free elimination. Pivots that
// involve parameters are recorded as genericity conditions; re-solving after
// specialising those parameters reproduces the special-case analyses.
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cwb/ratfn.hpp"

namespace cwb {

using VecF = std::vector<RatFn>;

struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<RatFn>> a;  // rows x cols

  static Mat zero(int r, int c);
  RatFn& at(int r, int c) { return a[static_cast<size_t>(r)][static_cast<size_t>(c)]; }
  const RatFn& at(int r, int c) const {
    return a[static_cast<size_t>(r)][static_cast<size_t>(c)];
  }
  // M . v over Q(params).
  VecF apply(const VecF& v) const;
};

// Nonvanishing assumptions made while pivoting: primitive polynomials in the
// parameters, rational linear factors split off (so "a-1" and "a-2" appear
// separately rather than as one quadratic).
struct GenericityCollector {
  std::vector<Poly> conditions;
  void note(const Poly& pivot);
  void merge(const GenericityCollector& o);
  bool contains(const Poly& p) const;  // up to scalar
};

struct SolutionSpace {
  std::vector<VecF> basis;
  std::vector<Poly> genericity;
  int dim() const { return static_cast<int>(basis.size()); }
};

struct AffineSolution {
  bool consistent = true;
  VecF particular;               // valid when consistent
  SolutionSpace homogeneous;     // nullspace of the coefficient matrix
  std::vector<int> pivot_cols;   // columns eliminated during the solve
  // When inconsistent: the nonzero right-hand residuals left after
  // elimination; each must vanish for the system to become solvable.
  std::vector<Poly> infeasibility;
};

// dim = cols - rank, every basis vector satisfies M v = 0 identically under
// the recorded genericity conditions.
SolutionSpace nullspace(const Mat& m);

int rank(const Mat& m, GenericityCollector* gen = nullptr);

AffineSolution solve_affine(const Mat& m, const VecF& rhs);

// Sparse interface used by the equation builders; rows hold polynomial
// entries over Q[params] (column -> coefficient) plus a right-hand side.
struct SparseRowData {
  std::map<int, Poly> a;
  Poly rhs;
};

SolutionSpace nullspace_sparse(int cols, const std::vector<SparseRowData>& rows);
AffineSolution solve_affine_sparse(int cols,
                                   const std::vector<SparseRowData>& rows);

// Numeric (or partially numeric) instance of m; throws if a denominator
// vanishes, naming the offending polynomial.
Mat specialize(const Mat& m, const std::map<Sym, Rat>& assignment);

// Incremental echelon structure over projective polynomial rows. Insertion
// uses cross-multiplied (division-free) reduction, so membership tests are
// exact over Q(params) with no genericity caveats.
class EchelonBasis {
 public:
  explicit EchelonBasis(int cols) : cols_(cols) {}

  // Returns true if v was independent (and is now part of the span).
  bool insert(const VecF& v);
  // Residual of v modulo the current span; zero vector iff v is in the span.
  VecF reduce(const VecF& v) const;
  bool member(const VecF& v) const;
  int dim() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

  static bool is_zero_vec(const VecF& v);

 private:
  int cols_;
  std::map<int, VecF> rows_;  // lead column -> normalized row
};

bool spans_equal(const EchelonBasis& a, const std::vector<VecF>& basis_a,
                 const EchelonBasis& b, const std::vector<VecF>& basis_b);

// Scales v so its entries are polynomial with coprime integer content and
// the first nonzero coordinate has a positive leading coefficient.
VecF normalize_vector(const VecF& v);

// Candidate special values per parameter, read off the genericity set.
std::map<Sym, std::vector<Rat>> candidate_special_values(
    const std::vector<Poly>& genericity, const std::vector<Sym>& params);

}  // namespace cwb
