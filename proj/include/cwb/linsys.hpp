// Turns polynomial identities into linear systems. Unknowns are parameter
// symbols (with a reserved "$" prefix so they can never collide with declared
// algebra parameters); a residual that must vanish identically in the
// variables contributes one row per variable monomial, with coefficients in
// Q[params].
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cwb/linalg.hpp"
#include "cwb/poly.hpp"

namespace cwb {

struct NonlinearResidual : std::runtime_error {
  explicit NonlinearResidual(const std::string& mono)
      : std::runtime_error("residual is nonlinear in the unknowns; offending monomial: " + mono),
        offending(mono) {}
  std::string offending;
};

class LinSys {
 public:
  // Fresh internal unknown symbol; `hint` is embedded for debuggability.
  static Sym fresh_unknown(const std::string& hint, int index) {
    return Sym::param("$" + hint + "#" + std::to_string(index));
  }

  int add_unknown(const Sym& s);
  int column(const Sym& s) const;
  bool is_unknown(const Sym& s) const { return colix_.count(s) > 0; }
  int num_unknowns() const { return static_cast<int>(cols_.size()); }
  const std::vector<Sym>& unknowns() const { return cols_; }
  size_t num_rows() const { return rows_.size(); }

  // The residual must be affine in the declared unknowns; each term of
  // unknown-degree >= 2 triggers NonlinearResidual.
  void add_residual(const Poly& residual);

  SolutionSpace solve_nullspace() const;
  AffineSolution solve_affine() const;

 private:
  std::vector<Sym> cols_;
  std::map<Sym, int> colix_;
  std::vector<SparseRowData> rows_;
};

}  // namespace cwb
