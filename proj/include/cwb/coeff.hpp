// The coefficient Lie algebra of a Lie conformal algebra: brackets between
// the mode symbols e_{k,n} computed from the lambda-expansion of the structure
// table, both with symbolic integer indices (as parameters) and on a concrete
// finite index window.
#pragma once

#include <map>
#include <tuple>

#include "cwb/lca.hpp"
#include "cwb/report.hpp"

namespace cwb {

// One output term of a mode bracket: coefficient * e_{gen, m+n-offset}.
struct ModeTerm {
  int gen = 0;
  int offset = 0;
  Poly coeff;  // in the index symbols and the algebra parameters
};

// [e_{i,m}, e_{j,n}] for symbolic indices m, n: closed-form structure
// constants of Coeff(R).
struct CoeffClosedForm {
  Sym m;  // index symbol of the first argument
  Sym n;  // index symbol of the second argument
  // entries[i][j]: terms ordered by (gen, offset)
  std::vector<std::vector<std::vector<ModeTerm>>> entries;
};

CoeffClosedForm coeff_closed_form(const LcaPresentation& a, const Sym& m,
                                  const Sym& n);

// Formal linear combination of modes with exact coefficients.
struct FormalSum {
  std::map<std::pair<int, long>, Poly> terms;  // (gen, index) -> coeff
  bool is_zero() const;
  void add(int gen, long index, const Poly& c);
  FormalSum operator-(const FormalSum& o) const;
  std::string render(const std::vector<std::string>& gens) const;
};

class CoeffWindow {
 public:
  CoeffWindow(LcaPresentation a, int radius);

  const LcaPresentation& algebra() const { return alg_; }
  int radius() const { return radius_; }

  // [e_{i,m}, e_{j,n}] at concrete integer indices.
  FormalSum bracket_modes(int i, long m, int j, long n) const;
  FormalSum bracket_sums(const FormalSum& x, const FormalSum& y) const;

  // One line per bracket with |m|,|n| <= radius, canonical order.
  std::string dump() const;

 private:
  LcaPresentation alg_;
  int radius_;
  CoeffClosedForm form_;
};

CoeffWindow build_window(const LcaPresentation& a, int radius);

// Antisymmetry within the window plus the Jacobi identity over all mode
// triples with indices in the window (intermediate brackets are computed
// exactly, so no guard band is needed).
VerifyReport check_window_jacobi(const CoeffWindow& w);

}  // namespace cwb
