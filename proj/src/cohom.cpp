#include "cwb/cohom.hpp"

#include <stdexcept>

#include "cwb/linsys.hpp"
#include "cwb/survey.hpp"

namespace cwb {

namespace {

const Sym kD = sym_d();
const Sym kL = sym_l();
const Sym kM = sym_m();

std::string pair_name(const LcaPresentation& a, int i, int j) {
  return "(" + a.gens[static_cast<size_t>(i)] + "," +
         a.gens[static_cast<size_t>(j)] + ")";
}

}  // namespace

Cocycle Cocycle::zero(int rank) {
  Cocycle c;
  c.rank = rank;
  c.val.assign(static_cast<size_t>(rank),
               std::vector<Poly>(static_cast<size_t>(rank)));
  return c;
}

Cocycle Cocycle::from_pairs(int rank,
                            const std::map<std::pair<int, int>, Poly>& entries) {
  Cocycle c = Cocycle::zero(rank);
  for (const auto& [ij, p] : entries) {
    if (p.contains(kD) || p.contains(kM))
      throw std::invalid_argument("cocycle values live in C[l]");
    c.val[static_cast<size_t>(ij.first)][static_cast<size_t>(ij.second)] = p;
  }
  // Fill skew partners; verify consistency where both were given.
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      const Poly& here = c.at(i, j);
      Poly mirror = -c.at(j, i).substitute({{kL, -pl()}});
      bool have_here = entries.count({i, j}) > 0;
      bool have_mirror = entries.count({j, i}) > 0;
      if (have_here && have_mirror) {
        if (!(here == mirror))
          throw std::invalid_argument("cocycle entries violate skew-symmetry");
      } else if (!have_here && have_mirror) {
        c.val[static_cast<size_t>(i)][static_cast<size_t>(j)] = mirror;
      }
    }
  return c;
}

VerifyReport check_cocycle(const LcaPresentation& a, const Cocycle& alpha) {
  VerifyReport rep;
  rep.subject = a.name + " cocycle conditions";
  if (alpha.rank != a.rank)
    throw std::invalid_argument("check_cocycle: rank mismatch");
  // alpha_l(i,j) + alpha_{-l}(j,i) = 0
  for (int i = 0; i < a.rank; ++i)
    for (int j = i; j < a.rank; ++j) {
      Poly res = alpha.at(i, j) + alpha.at(j, i).substitute({{kL, -pl()}});
      rep.add("skew " + pair_name(a, i, j), res.is_zero(),
              res.is_zero() ? "" : res.render());
    }
  // Functional equation on all ordered triples.
  for (int i = 0; i < a.rank; ++i)
    for (int j = 0; j < a.rank; ++j)
      for (int k = 0; k < a.rank; ++k) {
        Poly res;
        for (int s = 0; s < a.rank; ++s) {
          res += a.entry(j, k, s).substitute({{kD, pl()}, {kL, pm()}}) *
                 alpha.at(i, s);
          res -= a.entry(i, k, s).substitute({{kD, pm()}}) *
                 alpha.at(j, s).substitute({{kL, pm()}});
          res -= a.entry(i, j, s).substitute({{kD, -pl() - pm()}}) *
                 alpha.at(s, k).substitute({{kL, pl() + pm()}});
        }
        std::string id = "cocycle(" + a.gens[static_cast<size_t>(i)] + "," +
                         a.gens[static_cast<size_t>(j)] + "," +
                         a.gens[static_cast<size_t>(k)] + ")";
        rep.add(id, res.is_zero(), res.is_zero() ? "" : res.render());
      }
  return rep;
}

int CocycleSolution::column(int i, int j, int t) const {
  return (i * rank + j) * (deg_bound + 1) + t;
}

Cocycle CocycleSolution::cocycle_from_vector(const VecF& v) const {
  Cocycle c = Cocycle::zero(rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      for (int t = 0; t <= deg_bound; ++t) {
        const RatFn& e = v[static_cast<size_t>(column(i, j, t))];
        if (e.is_zero()) continue;
        if (!e.den().is_constant())
          throw std::domain_error(
              "cocycle_from_vector: non-polynomial coordinate " + e.render());
        c.val[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
            e.num().scaled(Rat(1) / e.den().constant_term()) *
            Poly::term(Mono::of(kL, t), Rat(1));
      }
  return c;
}

VecF CocycleSolution::vector_from_cocycle(const Cocycle& c) const {
  VecF v(static_cast<size_t>(num_columns()));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      const Poly& p = c.at(i, j);
      if (p.degree(kL) > deg_bound)
        throw std::invalid_argument("cocycle exceeds the degree bound");
      for (int t = 0; t <= deg_bound; ++t) {
        Poly coef = p.coeff_of(kL, t);
        if (!coef.is_zero()) v[static_cast<size_t>(column(i, j, t))] = RatFn(coef);
      }
    }
  return v;
}

namespace {

// Shared tail: B^2 from generator shifts, then representative selection.
void finish_solution(const LcaPresentation& a, CocycleSolution& sol) {
  EchelonBasis span(sol.num_columns());
  for (int k = 0; k < a.rank; ++k) {
    std::vector<Poly> shifts(static_cast<size_t>(a.rank));
    shifts[static_cast<size_t>(k)] = Poly(Rat(1));
    VecF v = sol.vector_from_cocycle(coboundary(a, shifts));
    if (span.insert(v)) sol.b2_basis.push_back(normalize_vector(v));
  }
  for (const VecF& z : sol.z2.basis) {
    VecF r = span.reduce(z);
    if (!EchelonBasis::is_zero_vec(r)) {
      VecF rep = normalize_vector(r);
      sol.h2_reps.push_back(rep);
      span.insert(rep);
    }
  }
  sol.genericity = sol.z2.genericity;
}

}  // namespace

namespace {

// One plain solve, genericity = this elimination's own pivots.
CocycleSolution solve_cocycles_raw(const LcaPresentation& a, int deg_bound) {
  if (a.has_central())
    throw std::invalid_argument(
        "solve_cocycles: presentation already has a central generator");
  if (deg_bound < a.max_lambda_degree())
    throw std::invalid_argument(
        "solve_cocycles: degree bound below the table's lambda degree");

  CocycleSolution sol;
  sol.rank = a.rank;
  sol.deg_bound = deg_bound;

  LinSys sys;
  auto unknown = [&](int i, int j, int t) {
    return LinSys::fresh_unknown(
        "c" + std::to_string(i) + "_" + std::to_string(j), t);
  };
  for (int i = 0; i < a.rank; ++i)
    for (int j = 0; j < a.rank; ++j)
      for (int t = 0; t <= deg_bound; ++t) sys.add_unknown(unknown(i, j, t));

  // alpha with unknown coefficients, at a given lambda argument.
  auto alpha_poly = [&](int i, int j, const Poly& arg) {
    Poly p;
    for (int t = 0; t <= deg_bound; ++t)
      p += Poly::sym(unknown(i, j, t)) * arg.pow(t);
    return p;
  };

  // Skew: alpha_l(i,j) + alpha_{-l}(j,i) = 0.
  for (int i = 0; i < a.rank; ++i)
    for (int j = i; j < a.rank; ++j)
      sys.add_residual(alpha_poly(i, j, pl()) + alpha_poly(j, i, -pl()));

  // Functional equation on all ordered triples.
  for (int i = 0; i < a.rank; ++i)
    for (int j = 0; j < a.rank; ++j)
      for (int k = 0; k < a.rank; ++k) {
        Poly res;
        for (int s = 0; s < a.rank; ++s) {
          const Poly& pjk = a.entry(j, k, s);
          if (!pjk.is_zero())
            res += pjk.substitute({{kD, pl()}, {kL, pm()}}) *
                   alpha_poly(i, s, pl());
          const Poly& pik = a.entry(i, k, s);
          if (!pik.is_zero())
            res -= pik.substitute({{kD, pm()}}) * alpha_poly(j, s, pm());
          const Poly& pij = a.entry(i, j, s);
          if (!pij.is_zero())
            res -= pij.substitute({{kD, -pl() - pm()}}) *
                   alpha_poly(s, k, pl() + pm());
        }
        if (!res.is_zero()) sys.add_residual(res);
      }

  sol.z2 = sys.solve_nullspace();
  finish_solution(a, sol);
  return sol;
}

}  // namespace

CocycleSolution solve_cocycles(const LcaPresentation& a, int deg_bound) {
  CocycleSolution sol = solve_cocycles_raw(a, deg_bound);
  if (!a.params.empty()) {
    // Deepen the recorded conditions through the nested special loci, so the
    // genericity set names every parameter point where the answer changes
    // shape (e.g. conditions that only degenerate on a sub-locus).
    SurveyClosure cl = survey_closure(a, [&](const LcaPresentation& b) {
      return solve_cocycles_raw(b, deg_bound).genericity;
    });
    sol.genericity = cl.merged_genericity;
  }
  return sol;
}

CocycleSolution solve_cocycles_quadratic(const GdBialgebra& g, int deg_bound) {
  VerifyReport axioms = check_gd(g);
  if (!axioms.ok())
    throw std::invalid_argument("solve_cocycles_quadratic: " +
                                axioms.first_failure()->check + " fails");
  if (!circ_surjective(g))
    throw std::invalid_argument(
        "solve_cocycles_quadratic: products do not span the algebra, the "
        "degree-3 truncation is unjustified");
  if (deg_bound < 3)
    throw std::invalid_argument("solve_cocycles_quadratic: need deg_bound >= 3");

  int n = g.dim;
  LinSys sys;
  auto unknown = [&](int i, int x, int y) {
    return LinSys::fresh_unknown(
        "q" + std::to_string(i) + "_" + std::to_string(x), y);
  };
  for (int i = 0; i <= 3; ++i)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) sys.add_unknown(unknown(i, x, y));

  auto u = [&](int i, int x, int y) { return Poly::sym(unknown(i, x, y)); };
  // alpha_i(vec, y) and alpha_i(x, vec) for a structure-row vector.
  auto a_left = [&](int i, const std::vector<Poly>& vec, int y) {
    Poly p;
    for (int s = 0; s < n; ++s)
      if (!vec[static_cast<size_t>(s)].is_zero())
        p += vec[static_cast<size_t>(s)] * u(i, s, y);
    return p;
  };
  auto a_right = [&](int i, int x, const std::vector<Poly>& vec) {
    Poly p;
    for (int s = 0; s < n; ++s)
      if (!vec[static_cast<size_t>(s)].is_zero())
        p += vec[static_cast<size_t>(s)] * u(i, x, s);
    return p;
  };
  auto circ_row = [&](int i, int j) {
    std::vector<Poly> v(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) v[static_cast<size_t>(k)] = g.circ_at(i, j, k);
    return v;
  };
  auto lie_row = [&](int i, int j) {
    std::vector<Poly> v(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) v[static_cast<size_t>(k)] = g.lie_at(i, j, k);
    return v;
  };
  auto star_row = [&](int i, int j) {
    std::vector<Poly> v(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) v[static_cast<size_t>(k)] = g.star_at(i, j, k);
    return v;
  };

  // Parity of each alpha_i under swapping arguments.
  for (int i = 0; i <= 3; ++i)
    for (int x = 0; x < n; ++x)
      for (int y = x; y < n; ++y) {
        Rat sign = (i % 2 == 0) ? Rat(1) : Rat(-1);  // alpha_i(x,y) = (-1)^{i+1} alpha_i(y,x)
        sys.add_residual(u(i, x, y) + u(i, y, x) * sign);
      }

  // The eight product conditions on all ordered triples (a,b,c).
  for (int a_ = 0; a_ < n; ++a_)
    for (int b_ = 0; b_ < n; ++b_)
      for (int c_ = 0; c_ < n; ++c_) {
        auto cb = circ_row(c_, b_);    // c o b
        auto ab = circ_row(a_, b_);    // a o b
        auto ba = circ_row(b_, a_);    // b o a
        auto lcb = lie_row(c_, b_);    // [c, b]
        auto lba = lie_row(b_, a_);    // [b, a]
        auto lbc = lie_row(b_, c_);    // [b, c]
        auto lca_ = lie_row(c_, a_);   // [c, a]
        auto sbc = star_row(b_, c_);   // b * c
        auto sac = star_row(a_, c_);   // a * c

        sys.add_residual(a_right(3, a_, cb) - a_left(3, ab, c_));
        sys.add_residual(a_left(3, ab, c_) - a_left(3, ba, c_));
        sys.add_residual(a_right(2, a_, cb) + a_right(3, a_, lcb) -
                         a_left(2, ab, c_) - a_left(3, lba, c_));
        sys.add_residual(a_right(2, a_, sbc) + a_left(2, ba, c_) -
                         a_left(2, ab, c_).scaled(Rat(2)) -
                         a_left(3, lba, c_).scaled(Rat(3)));
        sys.add_residual(a_right(1, a_, cb) + a_right(2, a_, lcb) -
                         a_left(1, ab, c_) - a_left(2, lba, c_));
        sys.add_residual(a_right(1, a_, sbc) - a_right(1, b_, sac) +
                         a_left(1, ba, c_) - a_left(1, ab, c_) -
                         a_left(2, lba, c_).scaled(Rat(2)));
        sys.add_residual(a_right(0, a_, cb) + a_right(1, a_, lcb) -
                         a_right(0, b_, sac) - a_left(0, ab, c_) -
                         a_left(1, lba, c_));
        sys.add_residual(a_right(0, a_, lcb) - a_right(0, b_, lca_) -
                         a_left(0, lba, c_));
      }

  SolutionSpace forms = sys.solve_nullspace();

  // Reconstruct alpha_l = sum_i l^i alpha_i in the shared coordinate layout.
  CocycleSolution sol;
  sol.rank = n;
  sol.deg_bound = deg_bound;
  sol.z2.genericity = forms.genericity;
  for (const VecF& f : forms.basis) {
    VecF v(static_cast<size_t>(sol.num_columns()));
    for (int i = 0; i <= 3; ++i)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          int from = sys.column(unknown(i, x, y));
          int to = sol.column(x, y, i);
          v[static_cast<size_t>(to)] = f[static_cast<size_t>(from)];
        }
    sol.z2.basis.push_back(normalize_vector(v));
  }
  finish_solution(to_quadratic(g), sol);
  return sol;
}

LcaPresentation extend(const LcaPresentation& a, const Cocycle& alpha,
                       const std::string& central_name) {
  VerifyReport chk = check_cocycle(a, alpha);
  if (!chk.ok())
    throw std::invalid_argument("extend: alpha is not a 2-cocycle (" +
                                chk.first_failure()->check + ": " +
                                chk.first_failure()->witness + ")");
  std::vector<std::string> gens = a.gens;
  for (const std::string& g : gens)
    if (g == central_name)
      throw std::invalid_argument("extend: central name collides with " + g);
  gens.push_back(central_name);
  LcaPresentation out = LcaPresentation::make(a.name + "^ext", gens, a.params);
  int n = a.rank;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) out.set_entry(i, j, k, a.entry(i, j, k));
      out.set_entry(i, j, n, alpha.at(i, j));
    }
  out.central[static_cast<size_t>(n)] = true;
  return out;
}

Cocycle coboundary(const LcaPresentation& a, const std::vector<Poly>& shifts) {
  if (static_cast<int>(shifts.size()) != a.rank)
    throw std::invalid_argument("coboundary: shift size mismatch");
  for (const Poly& s : shifts)
    if (s.has_vars())
      throw std::invalid_argument("coboundary: shifts must be scalars");
  Cocycle c = Cocycle::zero(a.rank);
  for (int i = 0; i < a.rank; ++i)
    for (int j = 0; j < a.rank; ++j) {
      Poly acc;
      for (int k = 0; k < a.rank; ++k) {
        if (shifts[static_cast<size_t>(k)].is_zero()) continue;
        acc += a.entry(i, j, k).substitute({{kD, Poly()}}) *
               shifts[static_cast<size_t>(k)];
      }
      c.val[static_cast<size_t>(i)][static_cast<size_t>(j)] = acc;
    }
  return c;
}

LcaPresentation shift_central(const LcaPresentation& extended,
                              const std::vector<Poly>& shifts) {
  int n = extended.rank - 1;
  if (n < 1 || !extended.is_central(n))
    throw std::invalid_argument("shift_central: expected a central extension");
  if (static_cast<int>(shifts.size()) != n)
    throw std::invalid_argument("shift_central: shift size mismatch");
  LcaPresentation out = extended;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poly delta;
      for (int k = 0; k < n; ++k) {
        if (shifts[static_cast<size_t>(k)].is_zero()) continue;
        delta += extended.entry(i, j, k).substitute({{kD, Poly()}}) *
                 shifts[static_cast<size_t>(k)];
      }
      out.set_entry(i, j, n, extended.entry(i, j, n) - delta);
    }
  return out;
}

std::vector<CocycleSurveyEntry> survey_cocycles(const LcaPresentation& a,
                                                int deg_bound) {
  std::vector<CocycleSurveyEntry> out;
  CocycleSurveyEntry generic;
  generic.sol = solve_cocycles_raw(a, deg_bound);
  if (a.params.empty()) {
    out.push_back(std::move(generic));
    return out;
  }
  SurveyClosure cl = survey_closure(a, [&](const LcaPresentation& b) {
    return solve_cocycles_raw(b, deg_bound).genericity;
  });
  generic.sol.genericity = cl.merged_genericity;
  out.push_back(std::move(generic));
  for (const std::map<Sym, Rat>& pt : cl.points) {
    CocycleSurveyEntry e;
    e.point = pt;
    e.sol = solve_cocycles_raw(a.specialized(pt), deg_bound);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace cwb
