#include "cwb/linsys.hpp"

namespace cwb {

int LinSys::add_unknown(const Sym& s) {
  auto it = colix_.find(s);
  if (it != colix_.end()) return it->second;
  int c = static_cast<int>(cols_.size());
  cols_.push_back(s);
  colix_.emplace(s, c);
  return c;
}

int LinSys::column(const Sym& s) const {
  auto it = colix_.find(s);
  if (it == colix_.end())
    throw std::invalid_argument("LinSys: not an unknown: " + s.text());
  return it->second;
}

void LinSys::add_residual(const Poly& residual) {
  // Group terms by their variable monomial; inside each group split off the
  // unknown factor (degree must be exactly 0 or 1).
  std::map<Mono, SparseRowData, GrlexLess> grouped;
  for (const auto& [m, c] : residual.terms()) {
    Mono varpart, parampart;
    int unknown_col = -1;
    int unknown_degree = 0;
    for (const auto& [s, k] : m.e) {
      if (s.is_var()) {
        varpart.e.emplace_back(s, k);
      } else if (is_unknown(s)) {
        unknown_degree += k;
        if (unknown_degree > 1) throw NonlinearResidual(m.e.empty() ? "1" : Poly::term(m, Rat(1)).render());
        unknown_col = column(s);
      } else {
        parampart.e.emplace_back(s, k);
      }
    }
    SparseRowData& row = grouped[varpart];
    Poly contrib = Poly::term(parampart, c);
    if (unknown_col < 0) {
      row.rhs -= contrib;  // move constants to the right-hand side
    } else {
      row.a[unknown_col] += contrib;
      if (row.a[unknown_col].is_zero()) row.a.erase(unknown_col);
    }
  }
  for (auto& [vm, row] : grouped) {
    if (row.a.empty() && row.rhs.is_zero()) continue;
    rows_.push_back(std::move(row));
  }
}

SolutionSpace LinSys::solve_nullspace() const {
  for (const SparseRowData& r : rows_)
    if (!r.rhs.is_zero())
      throw std::logic_error("LinSys: inhomogeneous system, use solve_affine");
  return nullspace_sparse(num_unknowns(), rows_);
}

AffineSolution LinSys::solve_affine() const {
  return solve_affine_sparse(num_unknowns(), rows_);
}

}  // namespace cwb
