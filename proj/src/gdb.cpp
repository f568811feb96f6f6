#include "cwb/gdb.hpp"

#include <stdexcept>

namespace cwb {

namespace {

using Table = std::vector<std::vector<std::vector<Poly>>>;

Table zero_table(int n) {
  return Table(static_cast<size_t>(n),
               std::vector<std::vector<Poly>>(static_cast<size_t>(n),
                                              std::vector<Poly>(static_cast<size_t>(n))));
}

// coefficient vector of (e_i o e_j) etc. as a dim-vector of Polys
std::vector<Poly> row(const Table& t, int i, int j, int n) {
  std::vector<Poly> r(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k)
    r[static_cast<size_t>(k)] =
        t[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
  return r;
}

// product of a basis element applied on the left/right of a coefficient
// vector: out_k = sum_s v_s * t[arg][s][k] or t[s][arg][k].
std::vector<Poly> apply_left(const Table& t, int arg,
                             const std::vector<Poly>& v, int n) {
  std::vector<Poly> out(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s) {
    if (v[static_cast<size_t>(s)].is_zero()) continue;
    for (int k = 0; k < n; ++k)
      out[static_cast<size_t>(k)] +=
          v[static_cast<size_t>(s)] *
          t[static_cast<size_t>(arg)][static_cast<size_t>(s)][static_cast<size_t>(k)];
  }
  return out;
}

std::vector<Poly> apply_right(const Table& t, int arg,
                              const std::vector<Poly>& v, int n) {
  std::vector<Poly> out(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s) {
    if (v[static_cast<size_t>(s)].is_zero()) continue;
    for (int k = 0; k < n; ++k)
      out[static_cast<size_t>(k)] +=
          v[static_cast<size_t>(s)] *
          t[static_cast<size_t>(s)][static_cast<size_t>(arg)][static_cast<size_t>(k)];
  }
  return out;
}

void vec_sub(std::vector<Poly>& a, const std::vector<Poly>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
}
void vec_add(std::vector<Poly>& a, const std::vector<Poly>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
}
bool vec_zero(const std::vector<Poly>& a) {
  for (const Poly& p : a)
    if (!p.is_zero()) return false;
  return true;
}
std::string vec_render(const std::vector<Poly>& v,
                       const std::vector<std::string>& basis) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + v[i].render() + ")*" + basis[i];
  }
  return s.empty() ? "0" : s;
}

}  // namespace

GdBialgebra GdBialgebra::make(std::string name, std::vector<std::string> basis,
                              SymList params) {
  GdBialgebra g;
  g.name = std::move(name);
  g.basis = std::move(basis);
  g.params = std::move(params);
  g.dim = static_cast<int>(g.basis.size());
  g.circ = zero_table(g.dim);
  g.lie = zero_table(g.dim);
  return g;
}

void GdBialgebra::set_circ(int i, int j, int k, Poly c) {
  circ[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] =
      std::move(c);
}

void GdBialgebra::set_lie(int i, int j, int k, Poly c) {
  lie[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] = c;
  lie[static_cast<size_t>(j)][static_cast<size_t>(i)][static_cast<size_t>(k)] = -c;
}

const Poly& GdBialgebra::circ_at(int i, int j, int k) const {
  return circ[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
}
const Poly& GdBialgebra::lie_at(int i, int j, int k) const {
  return lie[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
}
Poly GdBialgebra::star_at(int i, int j, int k) const {
  return circ_at(i, j, k) + circ_at(j, i, k);
}

bool GdBialgebra::equal(const GdBialgebra& o) const {
  if (dim != o.dim) return false;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        if (!(circ_at(i, j, k) == o.circ_at(i, j, k)) ||
            !(lie_at(i, j, k) == o.lie_at(i, j, k)))
          return false;
  return true;
}

VerifyReport check_novikov(const GdBialgebra& g) {
  VerifyReport rep;
  rep.subject = g.name + " Novikov axioms";
  int n = g.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        std::string trip = "(" + g.basis[static_cast<size_t>(i)] + "," +
                           g.basis[static_cast<size_t>(j)] + "," +
                           g.basis[static_cast<size_t>(k)] + ")";
        // (a o b) o c = (a o c) o b
        std::vector<Poly> r1 = apply_right(g.circ, k, row(g.circ, i, j, n), n);
        vec_sub(r1, apply_right(g.circ, j, row(g.circ, i, k, n), n));
        rep.add("right-commutativity " + trip, vec_zero(r1),
                vec_zero(r1) ? "" : vec_render(r1, g.basis));
        // (a o b) o c - a o (b o c) = (b o a) o c - b o (a o c)
        std::vector<Poly> r2 = apply_right(g.circ, k, row(g.circ, i, j, n), n);
        vec_sub(r2, apply_left(g.circ, i, row(g.circ, j, k, n), n));
        vec_sub(r2, apply_right(g.circ, k, row(g.circ, j, i, n), n));
        vec_add(r2, apply_left(g.circ, j, row(g.circ, i, k, n), n));
        rep.add("left-symmetry " + trip, vec_zero(r2),
                vec_zero(r2) ? "" : vec_render(r2, g.basis));
      }
  return rep;
}

VerifyReport check_lie(const GdBialgebra& g) {
  VerifyReport rep;
  rep.subject = g.name + " Lie axioms";
  int n = g.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Poly anti = g.lie_at(i, j, k) + g.lie_at(j, i, k);
        if (!anti.is_zero())
          rep.add("antisymmetry", false, anti.render());
      }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) {
        std::vector<Poly> r = apply_right(g.lie, k, row(g.lie, i, j, n), n);
        {
          std::vector<Poly> t = apply_right(g.lie, i, row(g.lie, j, k, n), n);
          vec_add(r, t);
        }
        {
          std::vector<Poly> t = apply_right(g.lie, j, row(g.lie, k, i, n), n);
          vec_add(r, t);
        }
        std::string trip = "(" + g.basis[static_cast<size_t>(i)] + "," +
                           g.basis[static_cast<size_t>(j)] + "," +
                           g.basis[static_cast<size_t>(k)] + ")";
        rep.add("lie jacobi " + trip, vec_zero(r),
                vec_zero(r) ? "" : vec_render(r, g.basis));
      }
  return rep;
}

VerifyReport check_gd_compat(const GdBialgebra& g) {
  VerifyReport rep;
  rep.subject = g.name + " GD compatibility";
  int n = g.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // [a o b, c] - [a o c, b] + [a,b] o c - [a,c] o b - a o [b,c]
        std::vector<Poly> r = apply_right(g.lie, k, row(g.circ, i, j, n), n);
        vec_sub(r, apply_right(g.lie, j, row(g.circ, i, k, n), n));
        vec_add(r, apply_right(g.circ, k, row(g.lie, i, j, n), n));
        vec_sub(r, apply_right(g.circ, j, row(g.lie, i, k, n), n));
        vec_sub(r, apply_left(g.circ, i, row(g.lie, j, k, n), n));
        std::string trip = "(" + g.basis[static_cast<size_t>(i)] + "," +
                           g.basis[static_cast<size_t>(j)] + "," +
                           g.basis[static_cast<size_t>(k)] + ")";
        rep.add("compat " + trip, vec_zero(r),
                vec_zero(r) ? "" : vec_render(r, g.basis));
      }
  return rep;
}

VerifyReport check_gd(const GdBialgebra& g) {
  VerifyReport rep;
  rep.subject = g.name + " Gel'fand-Dorfman axioms";
  for (const VerifyReport& sub :
       {check_novikov(g), check_lie(g), check_gd_compat(g)})
    rep.items.insert(rep.items.end(), sub.items.begin(), sub.items.end());
  return rep;
}

LcaPresentation to_quadratic(const GdBialgebra& g) {
  VerifyReport axioms = check_gd(g);
  if (!axioms.ok()) {
    const CheckItem* f = axioms.first_failure();
    throw std::invalid_argument("to_quadratic: axioms fail at " + f->check +
                                ": " + f->witness);
  }
  LcaPresentation a = LcaPresentation::make(g.name + "^quad", g.basis, g.params);
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      for (int k = 0; k < g.dim; ++k) {
        // [a_l b] = d(b o a) + [b, a] + l(b * a)
        Poly p = pd() * g.circ_at(j, i, k) + g.lie_at(j, i, k) +
                 pl() * g.star_at(j, i, k);
        a.set_entry(i, j, k, std::move(p));
      }
  return a;
}

FromQuadratic from_quadratic(const LcaPresentation& a) {
  FromQuadratic out;
  if (a.has_central()) {
    out.error = "presentation has a central generator";
    return out;
  }
  const Sym d = sym_d(), l = sym_l();
  GdBialgebra g = GdBialgebra::make(a.name + "^gd", a.gens, a.params);
  // First pass: every entry affine in (d, l); read circ and lie.
  for (int i = 0; i < a.rank; ++i)
    for (int j = 0; j < a.rank; ++j)
      for (int k = 0; k < a.rank; ++k) {
        const Poly& p = a.entry(i, j, k);
        // report the grlex-largest violation (terms iterate ascending)
        for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
          const auto& [m, c] = *it;
          int dd = m.degree_of(d), dl = m.degree_of(l);
          if (dd + dl > 1) {
            out.error = "[" + a.gens[static_cast<size_t>(i)] + "_l " +
                        a.gens[static_cast<size_t>(j)] +
                        "] is not quadratic: offending monomial " +
                        Poly::term(m, c).render();
            return out;
          }
        }
        g.circ[static_cast<size_t>(j)][static_cast<size_t>(i)]
              [static_cast<size_t>(k)] = p.coeff_of(d, 1);
        g.lie[static_cast<size_t>(j)][static_cast<size_t>(i)]
             [static_cast<size_t>(k)] = p.coeff_of(d, 0).coeff_of(l, 0);
      }
  // Second pass: the l-coefficient must be the symmetrisation of circ, and
  // lie must be antisymmetric.
  for (int i = 0; i < a.rank; ++i)
    for (int j = 0; j < a.rank; ++j)
      for (int k = 0; k < a.rank; ++k) {
        Poly star = a.entry(i, j, k).coeff_of(l, 1).coeff_of(d, 0);
        Poly expect = g.star_at(j, i, k);
        if (!(star == expect)) {
          out.error = "l-coefficient of [" + a.gens[static_cast<size_t>(i)] +
                      "_l " + a.gens[static_cast<size_t>(j)] +
                      "] is not the symmetrised circ product: got " +
                      star.render() + ", need " + expect.render();
          return out;
        }
        Poly anti = g.lie_at(i, j, k) + g.lie_at(j, i, k);
        if (!anti.is_zero()) {
          out.error = "recovered bracket is not antisymmetric at (" +
                      a.gens[static_cast<size_t>(i)] + "," +
                      a.gens[static_cast<size_t>(j)] + ")";
          return out;
        }
      }
  out.ok = true;
  out.bialgebra = std::move(g);
  return out;
}

GdBialgebra builtin_v_ab() {
  Poly a = Poly::param("a"), b = Poly::param("b");
  GdBialgebra g = GdBialgebra::make("V(a,b)", {"L", "Y", "M"},
                                    {Sym::param("a"), Sym::param("b")});
  const int L = 0, Y = 1, M = 2;
  g.set_circ(L, L, L, pconst(1));
  g.set_circ(L, Y, Y, a - pconst(1));
  g.set_circ(Y, L, Y, pconst(1));
  g.set_circ(L, M, M, pconst(2) * a - pconst(3));
  g.set_circ(M, L, M, pconst(1));
  g.set_circ(Y, Y, M, pconst(1));
  g.set_lie(L, Y, Y, -b);
  g.set_lie(L, M, M, pconst(-2) * b);
  return g;
}

GdBialgebra builtin_v_ab(const Rat& a, const Rat& b) {
  return specialized(builtin_v_ab(),
                     {{Sym::param("a"), a}, {Sym::param("b"), b}});
}

GdBialgebra specialized(const GdBialgebra& g, const std::map<Sym, Rat>& vals) {
  std::map<Sym, Poly> subst;
  for (const auto& [s, q] : vals) subst.emplace(s, Poly(q));
  GdBialgebra out = g;
  SymList remaining;
  for (const Sym& p : g.params)
    if (!vals.count(p)) remaining.push_back(p);
  out.params = remaining;
  for (auto& plane : out.circ)
    for (auto& r : plane)
      for (Poly& p : r) p = p.substitute_params(subst);
  for (auto& plane : out.lie)
    for (auto& r : plane)
      for (Poly& p : r) p = p.substitute_params(subst);
  return out;
}

bool circ_surjective(const GdBialgebra& g) {
  int n = g.dim;
  Mat m = Mat::zero(n * n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        m.at(i * n + j, k) = RatFn(g.circ_at(i, j, k));
  return rank(m) == n;
}

}  // namespace cwb
