#include "cwb/lca.hpp"

#include <algorithm>
#include <stdexcept>

#include "cwb/linsys.hpp"

namespace cwb {

namespace {

const Sym kD = sym_d();
const Sym kL = sym_l();
const Sym kM = sym_m();

// d -> -l  (a d-polynomial moved out of the left bracket slot)
Poly left_slot(const Poly& p) {
  return p.substitute({{kD, -pl()}});
}
// d -> l + d  (right slot)
Poly right_slot(const Poly& p) {
  return p.substitute({{kD, pl() + pd()}});
}

}  // namespace

LcaPresentation LcaPresentation::make(std::string name,
                                      std::vector<std::string> gens,
                                      SymList params) {
  LcaPresentation a;
  a.name = std::move(name);
  a.gens = std::move(gens);
  a.params = std::move(params);
  a.rank = static_cast<int>(a.gens.size());
  size_t n = static_cast<size_t>(a.rank);
  a.table.assign(n, std::vector<std::vector<Poly>>(n, std::vector<Poly>(n)));
  a.central.assign(n, false);
  return a;
}

void LcaPresentation::set_entry(int i, int j, int k, Poly p) {
  table[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] =
      std::move(p);
}

void LcaPresentation::complete_skew(int i, int j) {
  // [e_j l e_i] = -[e_i {-l-d} e_j]
  for (int k = 0; k < rank; ++k) {
    Poly p = entry(i, j, k).substitute({{kL, -pl() - pd()}});
    set_entry(j, i, k, -p);
  }
}

int LcaPresentation::gen_index(const std::string& g) const {
  for (int i = 0; i < rank; ++i)
    if (gens[static_cast<size_t>(i)] == g) return i;
  throw std::invalid_argument("unknown generator: " + g);
}

bool LcaPresentation::has_central() const {
  return std::find(central.begin(), central.end(), true) != central.end();
}

int LcaPresentation::max_lambda_degree() const {
  int d = 0;
  for (const auto& row : table)
    for (const auto& cell : row)
      for (const Poly& p : cell) d = std::max(d, std::max(0, p.degree(kL)));
  return d;
}

int LcaPresentation::max_del_degree() const {
  int d = 0;
  for (const auto& row : table)
    for (const auto& cell : row)
      for (const Poly& p : cell) d = std::max(d, std::max(0, p.degree(kD)));
  return d;
}

LcaPresentation LcaPresentation::specialized(
    const std::map<Sym, Rat>& assignment) const {
  std::map<Sym, Poly> v;
  for (const auto& [s, q] : assignment) v.emplace(s, Poly(q));
  LcaPresentation out = substituted(v);
  out.name = name + describe_point(assignment);
  SymList remaining;
  for (const Sym& p : params)
    if (!assignment.count(p)) remaining.push_back(p);
  out.params = remaining;
  return out;
}

LcaPresentation LcaPresentation::substituted(
    const std::map<Sym, Poly>& assignment) const {
  LcaPresentation out = *this;
  for (auto& row : out.table)
    for (auto& cell : row)
      for (Poly& p : cell) p = p.substitute_params(assignment);
  return out;
}

bool LcaPresentation::table_equal(const LcaPresentation& o) const {
  if (rank != o.rank) return false;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      for (int k = 0; k < rank; ++k)
        if (!(entry(i, j, k) == o.entry(i, j, k))) return false;
  return true;
}

std::string LcaPresentation::describe_point(
    const std::map<Sym, Rat>& assignment) const {
  if (assignment.empty()) return "";
  std::string s = "(";
  bool first = true;
  for (const auto& [p, q] : assignment) {
    if (!first) s += ",";
    first = false;
    s += p.text() + "=" + to_string(q);
  }
  return s + ")";
}

Element Element::gen(const LcaPresentation& a, int i) {
  Element e;
  e.coords.assign(static_cast<size_t>(a.rank), Poly());
  e.coords[static_cast<size_t>(i)] = Poly(Rat(1));
  return e;
}

bool LambdaValue::is_zero() const {
  for (const Poly& p : coords)
    if (!p.is_zero()) return false;
  return true;
}

LambdaValue bracket(const LcaPresentation& a, const Element& x,
                    const Element& y) {
  if (static_cast<int>(x.coords.size()) != a.rank ||
      static_cast<int>(y.coords.size()) != a.rank)
    throw std::invalid_argument("bracket: rank mismatch");
  LambdaValue out;
  out.coords.assign(static_cast<size_t>(a.rank), Poly());
  for (int i = 0; i < a.rank; ++i) {
    const Poly& xi = x.coords[static_cast<size_t>(i)];
    if (xi.is_zero()) continue;
    Poly xl = left_slot(xi);
    for (int j = 0; j < a.rank; ++j) {
      const Poly& yj = y.coords[static_cast<size_t>(j)];
      if (yj.is_zero()) continue;
      Poly factor = xl * right_slot(yj);
      for (int k = 0; k < a.rank; ++k) {
        const Poly& p = a.entry(i, j, k);
        if (!p.is_zero()) out.coords[static_cast<size_t>(k)] += factor * p;
      }
    }
  }
  for (int k = 0; k < a.rank; ++k)
    if (a.is_central(k))
      out.coords[static_cast<size_t>(k)] =
          out.coords[static_cast<size_t>(k)].substitute({{kD, Poly()}});
  return out;
}

VerifyReport check_skew(const LcaPresentation& a) {
  VerifyReport rep;
  rep.subject = a.name + " skew-symmetry";
  for (int i = 0; i < a.rank; ++i)
    for (int j = 0; j < a.rank; ++j)
      for (int k = 0; k < a.rank; ++k) {
        Poly res = a.entry(i, j, k) +
                   a.entry(j, i, k).substitute({{kL, -pl() - pd()}});
        if (a.is_central(k)) res = res.substitute({{kD, Poly()}});
        std::string id = "skew(" + a.gens[static_cast<size_t>(i)] + "," +
                         a.gens[static_cast<size_t>(j)] + ")->" +
                         a.gens[static_cast<size_t>(k)];
        rep.add(id, res.is_zero(), res.is_zero() ? "" : res.render());
      }
  return rep;
}

std::vector<Poly> jacobi_residual(const LcaPresentation& a, int i, int j,
                                  int k) {
  std::vector<Poly> res(static_cast<size_t>(a.rank));
  for (int s = 0; s < a.rank; ++s) {
    // [e_i l [e_j m e_k]] : P[j][k][s](l+d, m) * P[i][s][t](d, l)
    Poly p1 = a.entry(j, k, s).substitute({{kD, pl() + pd()}, {kL, pm()}});
    // [[e_i l e_j]_{l+m} e_k] : P[i][j][s](-l-m, l) * P[s][k][t](d, l+m)
    Poly p2 = a.entry(i, j, s).substitute({{kD, -pl() - pm()}});
    // [e_j m [e_i l e_k]] : P[i][k][s](m+d, l) * P[j][s][t](d, m)
    Poly p3 = a.entry(i, k, s).substitute({{kD, pm() + pd()}});
    if (p1.is_zero() && p2.is_zero() && p3.is_zero()) continue;
    for (int t = 0; t < a.rank; ++t) {
      Poly acc;
      if (!p1.is_zero()) acc += p1 * a.entry(i, s, t);
      if (!p2.is_zero())
        acc -= p2 * a.entry(s, k, t).substitute({{kL, pl() + pm()}});
      if (!p3.is_zero())
        acc -= p3 * a.entry(j, s, t).substitute({{kL, pm()}});
      res[static_cast<size_t>(t)] += acc;
    }
  }
  for (int t = 0; t < a.rank; ++t)
    if (a.is_central(t))
      res[static_cast<size_t>(t)] =
          res[static_cast<size_t>(t)].substitute({{kD, Poly()}});
  return res;
}

VerifyReport check_jacobi(const LcaPresentation& a) {
  VerifyReport rep;
  rep.subject = a.name + " Jacobi";
  VerifyReport skew = check_skew(a);
  if (!skew.ok()) {
    const CheckItem* f = skew.first_failure();
    rep.add("precondition " + f->check, false, f->witness);
    return rep;
  }
  for (int i = 0; i < a.rank; ++i)
    for (int j = i; j < a.rank; ++j)
      for (int k = j; k < a.rank; ++k) {
        std::vector<Poly> res = jacobi_residual(a, i, j, k);
        for (int t = 0; t < a.rank; ++t) {
          const Poly& r = res[static_cast<size_t>(t)];
          std::string id = "jacobi(" + a.gens[static_cast<size_t>(i)] + "," +
                           a.gens[static_cast<size_t>(j)] + "," +
                           a.gens[static_cast<size_t>(k)] + ")->" +
                           a.gens[static_cast<size_t>(t)];
          rep.add(id, r.is_zero(), r.is_zero() ? "" : r.render());
        }
      }
  return rep;
}

// ---------------------------------------------------------------------------
// Built-in families.

LcaPresentation builtin_vir() {
  LcaPresentation a = LcaPresentation::make("Vir", {"L"}, {});
  a.set_entry(0, 0, 0, pd() + pconst(2) * pl());
  return a;
}

namespace {

// Rank-3 skeleton with generators L, Y, M and the four structure
// polynomials; [Y M] and [M M] vanish, off-diagonal pairs skew-completed.
LcaPresentation rank3_family(std::string name, SymList params, Poly ll,
                             Poly ly, Poly lm, Poly yy) {
  LcaPresentation a =
      LcaPresentation::make(std::move(name), {"L", "Y", "M"}, std::move(params));
  const int L = 0, Y = 1, M = 2;
  a.set_entry(L, L, L, std::move(ll));
  a.set_entry(L, Y, Y, std::move(ly));
  a.set_entry(L, M, M, std::move(lm));
  a.set_entry(Y, Y, M, std::move(yy));
  a.complete_skew(L, Y);
  a.complete_skew(L, M);
  return a;
}

}  // namespace

LcaPresentation builtin_sv() {
  return rank3_family("SV", {}, pd() + pconst(2) * pl(),
                      pd() + pconst(rat(3, 2)) * pl(), pd() + pl(),
                      pd() + pconst(2) * pl());
}

LcaPresentation builtin_dsv() {
  return rank3_family("DSV", {}, pd() + pconst(2) * pl(), pd(),
                      pd() - pconst(2) * pl(), pd() + pconst(2) * pl());
}

LcaPresentation builtin_tsv_ab() {
  Poly a = Poly::param("a"), b = Poly::param("b");
  return rank3_family(
      "TSV(a,b)", {Sym::param("a"), Sym::param("b")},
      pd() + pconst(2) * pl(), pd() + a * pl() + b,
      pd() + pconst(2) * (a - pconst(1)) * pl() + pconst(2) * b,
      pd() + pconst(2) * pl());
}

LcaPresentation builtin_tsv_ab(const Rat& a, const Rat& b) {
  return builtin_tsv_ab().specialized(
      {{Sym::param("a"), a}, {Sym::param("b"), b}});
}

LcaPresentation builtin_tsv_c() {
  Poly c = Poly::param("c");
  return rank3_family("TSV(c)", {Sym::param("c")}, pd() + pconst(2) * pl(),
                      pd() + pconst(rat(3, 2)) * pl() + c,
                      pd() + pconst(2) * c,
                      (pd() + pconst(2) * pl()) * (-pd() - pconst(2) * c));
}

LcaPresentation builtin_tsv_c(const Rat& c) {
  return builtin_tsv_c().specialized({{Sym::param("c"), c}});
}

LcaPresentation builtin_cur(
    const std::vector<std::string>& names,
    const std::vector<std::vector<std::vector<Rat>>>& lie) {
  LcaPresentation a = LcaPresentation::make("Cur", names, {});
  int n = a.rank;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Rat& c = lie[static_cast<size_t>(i)][static_cast<size_t>(j)]
                          [static_cast<size_t>(k)];
        const Rat& cji = lie[static_cast<size_t>(j)][static_cast<size_t>(i)]
                            [static_cast<size_t>(k)];
        if (c != -cji)
          throw std::invalid_argument("builtin_cur: table not antisymmetric");
        a.set_entry(i, j, k, Poly(c));
      }
  return a;
}

// ---------------------------------------------------------------------------
// Parametric constraint solving.

namespace {

struct StageResult {
  bool consistent = true;
  std::string rejection;
  std::map<Sym, RatFn> assignments;
  std::vector<Poly> genericity;
};

// One coefficient equation: the polynomial in params+unknowns that must
// vanish for a fixed variable monomial.
std::vector<Poly> coefficient_equations(const std::vector<Poly>& residuals) {
  std::vector<Poly> eqs;
  for (const Poly& r : residuals) {
    std::map<Mono, Poly, GrlexLess> grouped;
    for (const auto& [m, c] : r.terms()) {
      Mono varpart, rest;
      for (const auto& [s, k] : m.e)
        (s.is_var() ? varpart : rest).e.emplace_back(s, k);
      grouped[varpart] += Poly::term(rest, c);
    }
    for (auto& [vm, eq] : grouped)
      if (!eq.is_zero()) eqs.push_back(std::move(eq));
  }
  return eqs;
}

int unknown_degree(const Mono& m, const std::set<Sym>& unknowns) {
  int d = 0;
  for (const auto& [s, k] : m.e)
    if (unknowns.count(s)) d += k;
  return d;
}

// Iteratively solves the affine subset of the coefficient equations,
// substituting each round's solution back until everything vanishes. Later
// unknowns in `order` are eliminated first. `initial` carries assignments
// from an earlier stage.
StageResult solve_stage(const std::vector<Poly>& residuals,
                        const std::vector<Sym>& order,
                        std::map<Sym, RatFn> initial) {
  StageResult out;
  out.assignments = std::move(initial);
  std::set<Sym> unknowns(order.begin(), order.end());
  std::vector<Sym> elim_order(order.rbegin(), order.rend());

  while (true) {
    // Apply accumulated assignments; denominators are nonzero under the
    // recorded genericity, so the numerator carries the vanishing condition.
    std::vector<Poly> current;
    current.reserve(residuals.size());
    for (const Poly& r : residuals) current.push_back(eval_with(r, out.assignments).num());
    std::vector<Poly> eqs = coefficient_equations(current);
    if (eqs.empty()) break;

    std::vector<Poly> affine;
    std::string pending;
    for (const Poly& eq : eqs) {
      bool ok = true;
      for (const auto& [m, c] : eq.terms()) {
        for (const auto& [s, k] : m.e)
          if (unknowns.count(s) && k >= 2) {
            out.consistent = false;
            out.rejection = "nonlinear in unknown " + s.text() +
                            ": monomial " + Poly::term(m, c).render();
            return out;
          }
        if (unknown_degree(m, unknowns) >= 2) {
          ok = false;
          if (pending.empty()) pending = Poly::term(m, c).render();
        }
      }
      if (ok && !eq.is_zero()) affine.push_back(eq);
    }
    if (affine.empty()) {
      out.consistent = false;
      out.rejection =
          "no unknown-product-free equations left; offending monomial " +
          pending;
      return out;
    }

    LinSys sys;
    for (const Sym& u : elim_order)
      if (!out.assignments.count(u)) sys.add_unknown(u);
    for (const Poly& eq : affine) sys.add_residual(eq);
    AffineSolution sol = sys.solve_affine();
    {
      GenericityCollector gc;
      gc.conditions = std::move(out.genericity);
      for (const Poly& g : sol.homogeneous.genericity) gc.note(g);
      out.genericity = std::move(gc.conditions);
    }
    if (!sol.consistent) {
      out.consistent = false;
      out.rejection = "inconsistent constraints; e.g. " +
                      sol.infeasibility.front().render() + " = 0 required";
      return out;
    }
    if (sol.pivot_cols.empty()) {
      out.consistent = false;
      out.rejection = "constraints without unknowns do not vanish: " +
                      affine.front().render();
      return out;
    }
    // Record solved form: pivot unknown = particular + sum basis*free.
    for (int p : sol.pivot_cols) {
      const Sym& u = sys.unknowns()[static_cast<size_t>(p)];
      RatFn expr = sol.particular[static_cast<size_t>(p)];
      for (const VecF& hv : sol.homogeneous.basis) {
        // Identify this basis vector's free column: the one outside the
        // pivot set carrying its seed entry.
        for (int f = 0; f < sys.num_unknowns(); ++f) {
          bool is_free =
              std::find(sol.pivot_cols.begin(), sol.pivot_cols.end(), f) ==
              sol.pivot_cols.end();
          if (!is_free || hv[static_cast<size_t>(f)].is_zero()) continue;
          RatFn coeff = hv[static_cast<size_t>(p)] / hv[static_cast<size_t>(f)];
          expr += coeff * RatFn(Poly::sym(sys.unknowns()[static_cast<size_t>(f)]));
          break;
        }
      }
      out.assignments[u] = expr;
    }
  }

  // Flatten chains: a round's expression may mention unknowns that a later
  // round solved.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [u, expr] : out.assignments) {
      std::map<Sym, RatFn> others;
      bool refs = false;
      for (const auto& [v, e] : out.assignments)
        if (!(v == u)) others.emplace(v, e);
      for (const Sym& s : expr.num().support())
        if (others.count(s)) refs = true;
      for (const Sym& s : expr.den().support())
        if (others.count(s)) refs = true;
      if (!refs) continue;
      expr = eval_with(expr.num(), others) / eval_with(expr.den(), others);
      changed = true;
    }
  }
  return out;
}

}  // namespace

std::optional<RatFn> ConstraintSolution::value_of(const Sym& u) const {
  for (const auto& [s, v] : solved)
    if (s == u) return v;
  return std::nullopt;
}

ConstraintSolution solve_parameter_constraints(const LcaPresentation& a,
                                               const std::vector<Sym>& unknowns) {
  ConstraintSolution out;
  for (const Sym& u : unknowns)
    if (!u.is_param())
      throw std::invalid_argument("unknowns must be parameters");

  // Stage 1: skew residuals.
  std::vector<Poly> skew_res;
  for (int i = 0; i < a.rank; ++i)
    for (int j = 0; j < a.rank; ++j)
      for (int k = 0; k < a.rank; ++k) {
        Poly r = a.entry(i, j, k) +
                 a.entry(j, i, k).substitute({{sym_l(), -pl() - pd()}});
        if (!r.is_zero()) skew_res.push_back(r);
      }
  StageResult s1 = solve_stage(skew_res, unknowns, {});
  if (!s1.consistent) {
    out.consistent = false;
    out.rejection = s1.rejection;
    return out;
  }

  // Stage 2: Jacobi residuals on sorted triples of the original table; the
  // skew-stage assignments are applied inside the stage solver, keeping the
  // table polynomial.
  std::vector<Poly> jac_res;
  for (int i = 0; i < a.rank; ++i)
    for (int j = i; j < a.rank; ++j)
      for (int k = j; k < a.rank; ++k)
        for (Poly& r : jacobi_residual(a, i, j, k))
          if (!r.is_zero()) jac_res.push_back(std::move(r));
  StageResult s2 = solve_stage(jac_res, unknowns, s1.assignments);
  if (!s2.consistent) {
    out.consistent = false;
    out.rejection = s2.rejection;
    return out;
  }

  for (const Sym& u : unknowns) {
    auto it = s2.assignments.find(u);
    if (it != s2.assignments.end())
      out.solved.emplace_back(u, it->second);
    else
      out.free_unknowns.push_back(u);
  }
  GenericityCollector gc;
  for (const Poly& g : s1.genericity) gc.note(g);
  for (const Poly& g : s2.genericity) gc.note(g);
  out.genericity = gc.conditions;
  return out;
}

}  // namespace cwb
