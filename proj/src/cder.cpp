#include "cwb/cder.hpp"

#include <stdexcept>

#include "cwb/linsys.hpp"

namespace cwb {

namespace {
const Sym kD = sym_d();
const Sym kL = sym_l();
}  // namespace

DerivationMap DerivationMap::zero(int rank) {
  DerivationMap d;
  d.rank = rank;
  d.entries.assign(static_cast<size_t>(rank),
                   std::vector<Poly>(static_cast<size_t>(rank)));
  return d;
}

DerivationMap ad_map(const LcaPresentation& a, int k, const Poly& p_of_d) {
  if (p_of_d.contains(kL))
    throw std::invalid_argument("ad_map: argument must be a polynomial in d");
  DerivationMap d = DerivationMap::zero(a.rank);
  // (ad p(d)e_k)_l e_i = p(-l) [e_k l e_i]
  Poly head = p_of_d.substitute({{kD, -pl()}});
  for (int i = 0; i < a.rank; ++i)
    for (int j = 0; j < a.rank; ++j)
      d.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          head * a.entry(k, i, j);
  return d;
}

namespace {

// Residual of d_l [e_i m e_j] = [(d_l e_i)_{l+m} e_j] + [e_i m (d_l e_j)],
// one polynomial per target generator.
std::vector<Poly> derivation_residual(const LcaPresentation& a,
                                      const DerivationMap& d, int i, int j) {
  std::vector<Poly> res(static_cast<size_t>(a.rank));
  for (int k = 0; k < a.rank; ++k) {
    // conformal-linearity moves the structure polynomial out with d -> d+l
    Poly p_lhs = a.entry(i, j, k).substitute({{kD, pd() + pl()}, {kL, pm()}});
    Poly d_ik = d.at(i, k).substitute({{kD, -pl() - pm()}});
    Poly d_jk = d.at(j, k).substitute({{kD, pd() + pm()}});
    for (int t = 0; t < a.rank; ++t) {
      Poly acc;
      if (!p_lhs.is_zero()) acc += p_lhs * d.at(k, t);
      if (!d_ik.is_zero())
        acc -= d_ik * a.entry(k, j, t).substitute({{kL, pl() + pm()}});
      if (!d_jk.is_zero())
        acc -= d_jk * a.entry(i, k, t).substitute({{kL, pm()}});
      res[static_cast<size_t>(t)] += acc;
    }
  }
  return res;
}

}  // namespace

VerifyReport is_derivation(const LcaPresentation& a, const DerivationMap& d) {
  VerifyReport rep;
  rep.subject = a.name + " derivation equation";
  if (d.rank != a.rank) throw std::invalid_argument("is_derivation: rank mismatch");
  for (int i = 0; i < a.rank; ++i)
    for (int j = i; j < a.rank; ++j) {
      std::vector<Poly> res = derivation_residual(a, d, i, j);
      for (int t = 0; t < a.rank; ++t) {
        const Poly& r = res[static_cast<size_t>(t)];
        std::string id = "leibniz(" + a.gens[static_cast<size_t>(i)] + "," +
                         a.gens[static_cast<size_t>(j)] + ")->" +
                         a.gens[static_cast<size_t>(t)];
        rep.add(id, r.is_zero(), r.is_zero() ? "" : r.render());
      }
    }
  return rep;
}

int DerivationSpace::column(int i, int j, int s, int t) const {
  return ((i * rank + j) * (box_l + 1) + s) * (box_d + 1) + t;
}

int DerivationSpace::num_columns() const {
  return rank * rank * (box_l + 1) * (box_d + 1);
}

DerivationMap DerivationSpace::map_from_vector(const VecF& v) const {
  DerivationMap m = DerivationMap::zero(rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      for (int s = 0; s <= box_l; ++s)
        for (int t = 0; t <= box_d; ++t) {
          const RatFn& e = v[static_cast<size_t>(column(i, j, s, t))];
          if (e.is_zero()) continue;
          if (!e.den().is_constant())
            throw std::domain_error("map_from_vector: non-polynomial entry " +
                                    e.render());
          Mono mono = Mono::of(kL, s).times(Mono::of(kD, t));
          m.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
              e.num().scaled(Rat(1) / e.den().constant_term()) *
              Poly::term(mono, Rat(1));
        }
  return m;
}

VecF DerivationSpace::vector_from_map(const DerivationMap& m) const {
  VecF v(static_cast<size_t>(num_columns()));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      const Poly& p = m.at(i, j);
      if (p.degree(kL) > box_l || p.degree(kD) > box_d)
        throw std::invalid_argument("vector_from_map: map exceeds the box");
      for (const auto& [mono, c] : p.terms()) {
        int s = mono.degree_of(kL), t = mono.degree_of(kD);
        Mono rest = mono.without(kL).without(kD);
        v[static_cast<size_t>(column(i, j, s, t))] +=
            RatFn(Poly::term(rest, c));
      }
    }
  return v;
}

DerivationSpace solve_derivations(const LcaPresentation& a, int deg_l,
                                  int deg_d) {
  if (a.has_central())
    throw std::invalid_argument("solve_derivations: central generators not supported");
  DerivationSpace out;
  out.rank = a.rank;
  out.deg_l = deg_l;
  out.deg_d = deg_d;
  out.box_l = deg_l;
  out.box_d = deg_d;

  LinSys sys;
  auto unknown = [&](int i, int j, int s, int t) {
    return LinSys::fresh_unknown("w" + std::to_string(i) + "_" +
                                     std::to_string(j) + "_" + std::to_string(s),
                                 t);
  };
  for (int i = 0; i < a.rank; ++i)
    for (int j = 0; j < a.rank; ++j)
      for (int s = 0; s <= out.box_l; ++s)
        for (int t = 0; t <= out.box_d; ++t)
          sys.add_unknown(unknown(i, j, s, t));

  // D[i][j] evaluated at (l_arg, d_arg).
  auto entry_at = [&](int i, int j, const Poly& l_arg, const Poly& d_arg) {
    Poly p;
    std::vector<Poly> lp(static_cast<size_t>(out.box_l) + 1),
        dp(static_cast<size_t>(out.box_d) + 1);
    lp[0] = Poly(Rat(1));
    for (int s = 1; s <= out.box_l; ++s)
      lp[static_cast<size_t>(s)] = lp[static_cast<size_t>(s - 1)] * l_arg;
    dp[0] = Poly(Rat(1));
    for (int t = 1; t <= out.box_d; ++t)
      dp[static_cast<size_t>(t)] = dp[static_cast<size_t>(t - 1)] * d_arg;
    for (int s = 0; s <= out.box_l; ++s)
      for (int t = 0; t <= out.box_d; ++t)
        p += Poly::sym(unknown(i, j, s, t)) * lp[static_cast<size_t>(s)] *
             dp[static_cast<size_t>(t)];
    return p;
  };

  for (int i = 0; i < a.rank; ++i)
    for (int j = i; j < a.rank; ++j) {
      for (int t = 0; t < a.rank; ++t) {
        Poly res;
        for (int k = 0; k < a.rank; ++k) {
          Poly p_lhs =
              a.entry(i, j, k).substitute({{kD, pd() + pl()}, {kL, pm()}});
          if (!p_lhs.is_zero()) res += p_lhs * entry_at(k, t, pl(), pd());
          const Poly& pkj = a.entry(k, j, t);
          if (!pkj.is_zero())
            res -= entry_at(i, k, pl(), -pl() - pm()) *
                   pkj.substitute({{kL, pl() + pm()}});
          const Poly& pik = a.entry(i, k, t);
          if (!pik.is_zero())
            res -= entry_at(j, k, pl(), pd() + pm()) *
                   pik.substitute({{kL, pm()}});
        }
        if (!res.is_zero()) sys.add_residual(res);
      }
    }

  out.all = sys.solve_nullspace();

  // Inner span: ad(d^t e_k) for t <= deg_d, restricted to the maps that are
  // representable in the coordinate box (only those can be compared with the
  // bounded solutions at all).
  EchelonBasis inner_span(out.num_columns());
  for (int k = 0; k < a.rank; ++k)
    for (int t = 0; t <= deg_d; ++t) {
      DerivationMap ad = ad_map(a, k, Poly::term(Mono::of(kD, t), Rat(1)));
      bool fits = true;
      for (int i = 0; i < a.rank && fits; ++i)
        for (int j = 0; j < a.rank && fits; ++j)
          fits = ad.at(i, j).degree(kL) <= out.box_l &&
                 ad.at(i, j).degree(kD) <= out.box_d;
      if (!fits) continue;
      VecF v = out.vector_from_map(ad);
      if (inner_span.insert(v)) out.inner_basis.push_back(normalize_vector(v));
    }

  // Outer representatives: reduce the solution basis against the inner span.
  EchelonBasis span = inner_span;
  for (const VecF& v : out.all.basis) {
    VecF r = span.reduce(v);
    if (!EchelonBasis::is_zero_vec(r)) {
      VecF rep = normalize_vector(r);
      out.outer_reps.push_back(rep);
      span.insert(rep);
    }
  }
  out.genericity = out.all.genericity;
  return out;
}

}  // namespace cwb
