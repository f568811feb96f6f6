#include "cwb/cmod.hpp"

#include <algorithm>
#include <stdexcept>

#include "cwb/linsys.hpp"
#include "cwb/survey.hpp"

namespace cwb {

namespace {
const Sym kD = sym_d();
const Sym kL = sym_l();
}  // namespace

Rank1Action Rank1Action::of(std::vector<Poly> entries) {
  Rank1Action a;
  a.act = std::move(entries);
  return a;
}

namespace {

// Residual of the module axiom for the ordered pair (i, j).
Poly module_residual(const LcaPresentation& a, const std::vector<Poly>& act,
                     int i, int j) {
  // act[j](m, l+d) * act[i](l, d) - act[i](l, m+d) * act[j](m, d)
  //   - sum_k P[i][j][k](-l-m, l) * act[k](l+m, d)
  Poly r = act[static_cast<size_t>(j)].substitute({{kL, pm()}, {kD, pl() + pd()}}) *
           act[static_cast<size_t>(i)];
  r -= act[static_cast<size_t>(i)].substitute({{kD, pm() + pd()}}) *
       act[static_cast<size_t>(j)].substitute({{kL, pm()}});
  for (int k = 0; k < a.rank; ++k) {
    const Poly& p = a.entry(i, j, k);
    if (p.is_zero()) continue;
    r -= p.substitute({{kD, -pl() - pm()}}) *
         act[static_cast<size_t>(k)].substitute({{kL, pl() + pm()}});
  }
  return r;
}

}  // namespace

VerifyReport check_module(const LcaPresentation& a, const Rank1Action& act) {
  VerifyReport rep;
  rep.subject = a.name + " rank-1 module axiom";
  if (static_cast<int>(act.act.size()) != a.rank)
    throw std::invalid_argument("check_module: rank mismatch");
  for (int i = 0; i < a.rank; ++i)
    for (int j = 0; j < a.rank; ++j) {
      Poly r = module_residual(a, act.act, i, j);
      std::string id = "module(" + a.gens[static_cast<size_t>(i)] + "," +
                       a.gens[static_cast<size_t>(j)] + ")";
      rep.add(id, r.is_zero(), r.is_zero() ? "" : r.render());
    }
  return rep;
}

namespace {

// The classifier expects the rank-3 shape of the studied families:
// generators (L, Y, M), Virasoro L, [L Y] on Y, [L M] on M, [Y Y] on M,
// [Y M] = [M M] = 0.
void require_family_shape(const LcaPresentation& a) {
  if (a.rank != 3 || a.has_central())
    throw std::invalid_argument("classify_rank1: expected a rank-3 family");
  const int L = 0, Y = 1, M = 2;
  if (!(a.entry(L, L, L) == pd() + pconst(2) * pl()))
    throw std::invalid_argument("classify_rank1: C[d]L is not Virasoro");
  auto zero = [&](int i, int j, int k) { return a.entry(i, j, k).is_zero(); };
  bool shape = zero(L, L, Y) && zero(L, L, M) && zero(L, Y, L) &&
               zero(L, Y, M) && zero(L, M, L) && zero(L, M, Y) &&
               zero(Y, Y, L) && zero(Y, Y, Y);
  for (int k = 0; k < 3; ++k)
    shape = shape && zero(Y, M, k) && zero(M, Y, k) && zero(M, M, k);
  if (!shape)
    throw std::invalid_argument(
        "classify_rank1: table is not of the [Y M] = [M M] = 0 family shape");
}

struct GSpace {
  std::vector<Poly> basis;  // solutions g(l, d)
  std::vector<Poly> genericity;
};

// Stage 2: the (L, Y) equation, linear in the Y-action for a fixed L-action.
GSpace solve_g(const LcaPresentation& a, const Poly& f, int deg) {
  LinSys sys;
  auto unknown = [&](int s, int t) {
    return LinSys::fresh_unknown("g" + std::to_string(s), t);
  };
  Poly g;
  for (int s = 0; s <= deg; ++s)
    for (int t = 0; t <= deg; ++t) {
      sys.add_unknown(unknown(s, t));
      g += Poly::sym(unknown(s, t)) *
           Poly::term(Mono::of(kL, s).times(Mono::of(kD, t)), Rat(1));
    }
  std::vector<Poly> act = {f, g, Poly()};
  sys.add_residual(module_residual(a, act, 0, 1));
  SolutionSpace ns = sys.solve_nullspace();
  GSpace out;
  out.genericity = ns.genericity;
  for (const VecF& v : ns.basis) {
    Poly sol;
    for (int s = 0; s <= deg; ++s)
      for (int t = 0; t <= deg; ++t) {
        const RatFn& e = v[static_cast<size_t>(sys.column(unknown(s, t)))];
        if (e.is_zero()) continue;
        // basis vectors are normalised to polynomial entries
        sol += e.num() *
               Poly::term(Mono::of(kL, s).times(Mono::of(kD, t)), Rat(1));
      }
    out.basis.push_back(sol);
  }
  return out;
}

struct HSolve {
  bool consistent = true;
  bool h_zero = false;          // the solved M-action vanishes identically
  std::vector<Poly> h_basis;    // homogeneous part
  Poly h_particular;            // particular solution (may involve branch params)
  std::vector<Poly> constraints;  // infeasibility certificates
  std::vector<Poly> genericity;
};

// Stages 3 and 4: the (Y,Y) and (L,M) equations, then, unless the solved
// M-action is identically zero, the (Y,M) compatibility — all linear in h.
HSolve solve_h(const LcaPresentation& a, const Poly& f, const Poly& g,
               int deg) {
  auto build = [&](bool with_ym) {
    LinSys sys;
    auto unknown = [&](int s, int t) {
      return LinSys::fresh_unknown("h" + std::to_string(s), t);
    };
    Poly h;
    for (int s = 0; s <= deg; ++s)
      for (int t = 0; t <= deg; ++t) {
        sys.add_unknown(unknown(s, t));
        h += Poly::sym(unknown(s, t)) *
             Poly::term(Mono::of(kL, s).times(Mono::of(kD, t)), Rat(1));
      }
    std::vector<Poly> act = {f, g, h};
    sys.add_residual(module_residual(a, act, 1, 1));  // (Y,Y)
    sys.add_residual(module_residual(a, act, 0, 2));  // (L,M)
    if (with_ym) sys.add_residual(module_residual(a, act, 1, 2));  // (Y,M)
    return std::make_pair(std::move(sys), h);
  };

  auto extract = [&](const LinSys& sys, const AffineSolution& sol, int deg_,
                     HSolve& out) {
    out.h_basis.clear();
    for (const VecF& v : sol.homogeneous.basis) {
      Poly hb;
      for (int s = 0; s <= deg_; ++s)
        for (int t = 0; t <= deg_; ++t) {
          const RatFn& e = v[static_cast<size_t>(
              sys.column(LinSys::fresh_unknown("h" + std::to_string(s), t)))];
          if (!e.is_zero())
            hb += e.num() *
                  Poly::term(Mono::of(kL, s).times(Mono::of(kD, t)), Rat(1));
        }
      out.h_basis.push_back(hb);
    }
    out.h_particular = Poly();
    for (int s = 0; s <= deg_; ++s)
      for (int t = 0; t <= deg_; ++t) {
        const RatFn& e = sol.particular[static_cast<size_t>(
            sys.column(LinSys::fresh_unknown("h" + std::to_string(s), t)))];
        if (e.is_zero()) continue;
        if (!e.den().is_constant())
          throw std::domain_error(
              "classify_rank1: parameter-dependent denominator in the "
              "M-action is outside the staged-linear scope: " + e.render());
        out.h_particular +=
            e.num().scaled(Rat(1) / e.den().constant_term()) *
            Poly::term(Mono::of(kL, s).times(Mono::of(kD, t)), Rat(1));
      }
  };

  HSolve out;
  auto [sys1, h1] = build(false);
  (void)h1;
  AffineSolution s1 = sys1.solve_affine();
  out.genericity = s1.homogeneous.genericity;
  if (!s1.consistent) {
    out.consistent = false;
    out.constraints = s1.infeasibility;
    return out;
  }
  extract(sys1, s1, deg, out);
  bool h_vanishes = out.h_particular.is_zero() && out.h_basis.empty();
  if (h_vanishes || g.is_zero()) {
    out.h_zero = h_vanishes;
    return out;  // (Y,M) is vacuous
  }
  auto [sys2, h2] = build(true);
  (void)h2;
  AffineSolution s2 = sys2.solve_affine();
  for (const Poly& p : s2.homogeneous.genericity) out.genericity.push_back(p);
  if (!s2.consistent) {
    out.consistent = false;
    out.constraints = s2.infeasibility;
    return out;
  }
  extract(sys2, s2, deg, out);
  out.h_zero = out.h_particular.is_zero() && out.h_basis.empty();
  return out;
}

Poly rename_params(const Poly& p, const std::map<Sym, Poly>& ren) {
  return p.substitute_params(ren);
}

}  // namespace

Rank1Classification classify_rank1(const LcaPresentation& a, int deg_bound) {
  require_family_shape(a);
  Rank1Classification out;
  GenericityCollector gen;

  for (const char* reserved : {"alpha", "beta", "gamma"})
    for (const Sym& p : a.params)
      if (p.name == reserved)
        throw std::invalid_argument(
            "classify_rank1: algebra parameter collides with module "
            "parameter name " + std::string(reserved));

  Sym alpha = Sym::param("alpha"), beta = Sym::param("beta");
  Poly f = pd() + Poly::sym(alpha) * pl() + Poly::sym(beta);

  // Branch f = 0: the trivial action (g and h are forced to vanish).
  {
    GSpace g0 = solve_g(a, Poly(), deg_bound);
    for (const Poly& p : g0.genericity) gen.note(p);
    if (!g0.basis.empty())
      throw std::logic_error("classify_rank1: unexpected Y-action with trivial L-action");
    HSolve h0 = solve_h(a, Poly(), Poly(), deg_bound);
    for (const Poly& p : h0.genericity) gen.note(p);
    if (!h0.consistent || !h0.h_zero)
      throw std::logic_error("classify_rank1: unexpected M-action with trivial L-action");
    Rank1Family fam;
    fam.action = Rank1Action::of({Poly(), Poly(), Poly()});
    fam.trivial = true;
    fam.note = "trivial action (f = 0 branch)";
    out.families.push_back(std::move(fam));
  }

  // Branch f = d + alpha*l + beta.
  GSpace gs = solve_g(a, f, deg_bound);
  for (const Poly& p : gs.genericity) gen.note(p);

  bool emitted_rich_family = false;
  if (!gs.basis.empty()) {
    // g with free coefficients c_1..c_r over the basis.
    std::vector<Sym> cs;
    Poly g;
    for (size_t i = 0; i < gs.basis.size(); ++i) {
      Sym c = Sym::param("$gc#" + std::to_string(i));
      cs.push_back(c);
      g += Poly::sym(c) * gs.basis[i];
    }
    HSolve hs = solve_h(a, f, g, deg_bound);
    for (const Poly& p : hs.genericity) gen.note(p);
    if (hs.consistent) {
      if (!hs.h_basis.empty())
        throw std::logic_error(
            "classify_rank1: unexpected free M-action dimensions");
      // Readable names for the family coefficients.
      std::map<Sym, Poly> ren;
      SymList mp{alpha, beta};
      for (size_t i = 0; i < cs.size(); ++i) {
        std::string nice = i == 0 ? "gamma" : "gamma" + std::to_string(i + 1);
        ren.emplace(cs[i], Poly::param(nice));
        mp.push_back(Sym::param(nice));
      }
      Rank1Family fam;
      fam.action = Rank1Action::of(
          {f, rename_params(g, ren), rename_params(hs.h_particular, ren)});
      fam.module_params = mp;
      fam.note = hs.h_zero ? "Y-M compatibility vacuous (M-action is zero)"
                           : "Y-M compatibility imposed linearly";
      out.h_branch_vacuous = out.h_branch_vacuous || hs.h_zero;
      out.families.push_back(std::move(fam));
      emitted_rich_family = true;
    } else {
      // The h-system is inconsistent for generic coefficients; the
      // certificates are polynomial constraints on the c's. Re-branch at
      // their rational roots (typically c = 0, collapsing to g = 0).
      std::map<Sym, std::vector<Rat>> roots;
      for (const Poly& w : hs.constraints)
        for (const Sym& c : cs)
          if (w.contains(c))
            for (const Rat& r : rational_roots(w, c)) roots[c].push_back(r);
      bool all_zero_only = true;
      for (const auto& [c, rs] : roots)
        for (const Rat& r : rs)
          if (r != 0) all_zero_only = false;
      if (!all_zero_only)
        throw std::logic_error(
            "classify_rank1: nonzero branch roots not supported");
      // c = 0 reduces to the g = 0 family below.
    }
  }

  if (!emitted_rich_family) {
    HSolve hs = solve_h(a, f, Poly(), deg_bound);
    for (const Poly& p : hs.genericity) gen.note(p);
    if (!hs.consistent || !hs.h_zero)
      throw std::logic_error("classify_rank1: unexpected M-action for g = 0");
    Rank1Family fam;
    fam.action = Rank1Action::of({f, Poly(), Poly()});
    fam.module_params = {alpha, beta};
    fam.note = "Y and M act trivially";
    out.h_branch_vacuous = true;
    out.families.push_back(std::move(fam));
  }

  out.genericity = gen.conditions;
  return out;
}

std::vector<Rank1Classification> survey_rank1(const LcaPresentation& a,
                                              int deg_bound) {
  std::vector<Rank1Classification> out;
  out.push_back(classify_rank1(a, deg_bound));
  if (a.params.empty()) return out;
  SurveyClosure cl = survey_closure(a, [&](const LcaPresentation& b) {
    return classify_rank1(b, deg_bound).genericity;
  });
  out.front().genericity = cl.merged_genericity;
  for (const std::map<Sym, Rat>& pt : cl.points) {
    Rank1Classification c = classify_rank1(a.specialized(pt), deg_bound);
    c.point = pt;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace cwb
