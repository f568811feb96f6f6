#include "cwb/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace cwb {

Mat Mat::zero(int r, int c) {
  Mat m;
  m.rows = r;
  m.cols = c;
  m.a.assign(static_cast<size_t>(r), std::vector<RatFn>(static_cast<size_t>(c)));
  return m;
}

VecF Mat::apply(const VecF& v) const {
  if (static_cast<int>(v.size()) != cols)
    throw std::invalid_argument("Mat::apply: size mismatch");
  VecF out(static_cast<size_t>(rows));
  for (int r = 0; r < rows; ++r) {
    RatFn acc;
    for (int c = 0; c < cols; ++c)
      if (!at(r, c).is_zero() && !v[static_cast<size_t>(c)].is_zero())
        acc += at(r, c) * v[static_cast<size_t>(c)];
    out[static_cast<size_t>(r)] = acc;
  }
  return out;
}

void GenericityCollector::note(const Poly& pivot) {
  Poly p = pivot.primitive();
  if (p.is_constant()) return;
  RootSplit rs = split_rational_linear_factors(p);
  std::vector<Poly> parts = rs.linear_factors;
  if (!rs.cofactor.is_constant()) parts.push_back(rs.cofactor);
  for (const Poly& f : parts) {
    Poly q = f.primitive();
    if (!contains(q)) conditions.push_back(q);
  }
}

void GenericityCollector::merge(const GenericityCollector& o) {
  for (const Poly& p : o.conditions)
    if (!contains(p)) conditions.push_back(p);
}

bool GenericityCollector::contains(const Poly& p) const {
  Poly q = p.primitive();
  for (const Poly& c : conditions)
    if (c == q) return true;
  return false;
}

namespace {

// Sparse row over Q[params] with an explicit right-hand entry.
struct Row {
  std::map<int, Poly> a;
  Poly rhs;

  bool coeffs_zero() const { return a.empty(); }
  int lead() const { return a.begin()->first; }

  void normalize() {
    // Rational content always; polynomial content only when entries grow.
    Rat c(0);
    int maxdeg = 0;
    for (const auto& [j, p] : a) {
      c = rat_gcd(c, p.content());
      maxdeg = std::max(maxdeg, p.total_degree());
    }
    if (!rhs.is_zero()) {
      c = rat_gcd(c, rhs.content());
      maxdeg = std::max(maxdeg, rhs.total_degree());
    }
    if (c == 0) return;
    if (!a.empty()) {
      if (a.begin()->second.lead_coeff() < 0) c = -c;
    } else if (!rhs.is_zero() && rhs.lead_coeff() < 0) {
      c = -c;
    }
    Rat inv = Rat(1) / c;
    for (auto& [j, p] : a) p = p.scaled(inv);
    rhs = rhs.scaled(inv);
    if (maxdeg > 8) {
      Poly g;
      for (const auto& [j, p] : a) g = poly_gcd(g, p);
      g = poly_gcd(g, rhs);
      if (!g.is_constant() && !g.is_zero()) {
        for (auto& [j, p] : a) p = poly_div_exact(p, g);
        if (!rhs.is_zero()) rhs = poly_div_exact(rhs, g);
      }
    }
  }
};

// Incremental echelon elimination with deterministic first-column pivoting.
class Eliminator {
 public:
  explicit Eliminator(int cols) : cols_(cols) {}

  // Reduces r against the current pivots; if a nonzero coefficient part
  // remains it becomes a new pivot row.
  void feed(Row r) {
    reduce_in_place(r);
    if (!r.coeffs_zero()) {
      int c = r.lead();
      gen_.note(r.a.begin()->second);
      pivots_[c] = std::move(r);
    } else if (!r.rhs.is_zero()) {
      infeasible_.push_back(r.rhs.primitive());
    }
  }

  void reduce_in_place(Row& r) const {
    while (!r.coeffs_zero()) {
      auto it = pivots_.find(r.lead());
      if (it == pivots_.end()) return;
      const Row& p = it->second;
      const Poly piv = p.a.begin()->second;
      const Poly fac = r.a.begin()->second;
      // r <- piv*r - fac*p  (kills the lead column exactly)
      Row nr;
      for (const auto& [j, v] : r.a) nr.a[j] = v * piv;
      nr.rhs = r.rhs * piv;
      for (const auto& [j, v] : p.a) {
        auto jt = nr.a.find(j);
        if (jt == nr.a.end()) {
          Poly t = -(v * fac);
          if (!t.is_zero()) nr.a[j] = std::move(t);
        } else {
          jt->second -= v * fac;
          if (jt->second.is_zero()) nr.a.erase(jt);
        }
      }
      nr.rhs -= p.rhs * fac;
      nr.normalize();
      r = std::move(nr);
    }
  }

  int rank() const { return static_cast<int>(pivots_.size()); }
  const std::map<int, Row>& pivots() const { return pivots_; }
  const GenericityCollector& genericity() const { return gen_; }
  const std::vector<Poly>& infeasible() const { return infeasible_; }
  int cols() const { return cols_; }

  // Back-substitution: values for pivot columns given preset free-column
  // values in `x` (RatFn, sized cols). with_rhs selects the inhomogeneous
  // solve.
  void back_substitute(VecF& x, bool with_rhs) const {
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      int pc = it->first;
      const Row& row = it->second;
      RatFn acc = with_rhs ? RatFn(row.rhs) : RatFn();
      for (auto jt = std::next(row.a.begin()); jt != row.a.end(); ++jt)
        acc -= RatFn(jt->second) * x[static_cast<size_t>(jt->first)];
      x[static_cast<size_t>(pc)] = acc / RatFn(row.a.begin()->second);
    }
  }

 private:
  int cols_;
  std::map<int, Row> pivots_;
  GenericityCollector gen_;
  std::vector<Poly> infeasible_;
};

Row row_from_mat(const Mat& m, int r, const RatFn* rhs) {
  Row out;
  Poly den_all(Rat(1));
  for (int c = 0; c < m.cols; ++c) den_all *= m.at(r, c).den();
  if (rhs) den_all *= rhs->den();
  for (int c = 0; c < m.cols; ++c) {
    const RatFn& e = m.at(r, c);
    if (e.is_zero()) continue;
    out.a[c] = e.num() * poly_div_exact(den_all, e.den());
  }
  if (rhs && !rhs->is_zero())
    out.rhs = rhs->num() * poly_div_exact(den_all, rhs->den());
  out.normalize();
  return out;
}

void extract_nullspace_basis(const Eliminator& el, SolutionSpace& s) {
  std::vector<bool> is_pivot(static_cast<size_t>(el.cols()), false);
  for (const auto& [c, row] : el.pivots()) is_pivot[static_cast<size_t>(c)] = true;
  for (int f = 0; f < el.cols(); ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    VecF x(static_cast<size_t>(el.cols()));
    x[static_cast<size_t>(f)] = RatFn::one();
    el.back_substitute(x, /*with_rhs=*/false);
    s.basis.push_back(normalize_vector(x));
  }
}

AffineSolution finish_affine(const Eliminator& el) {
  AffineSolution out;
  out.homogeneous.genericity = el.genericity().conditions;
  out.infeasibility = el.infeasible();
  out.consistent = out.infeasibility.empty();
  for (const auto& [c, row] : el.pivots()) out.pivot_cols.push_back(c);
  extract_nullspace_basis(el, out.homogeneous);
  if (out.consistent) {
    VecF x(static_cast<size_t>(el.cols()));
    el.back_substitute(x, true);
    out.particular = x;
  }
  return out;
}

}  // namespace

SolutionSpace nullspace(const Mat& m) {
  Eliminator el(m.cols);
  for (int r = 0; r < m.rows; ++r) el.feed(row_from_mat(m, r, nullptr));
  SolutionSpace s;
  s.genericity = el.genericity().conditions;
  extract_nullspace_basis(el, s);
  return s;
}

int rank(const Mat& m, GenericityCollector* gen) {
  Eliminator el(m.cols);
  for (int r = 0; r < m.rows; ++r) el.feed(row_from_mat(m, r, nullptr));
  if (gen) gen->merge(el.genericity());
  return el.rank();
}

AffineSolution solve_affine(const Mat& m, const VecF& rhs) {
  if (static_cast<int>(rhs.size()) != m.rows)
    throw std::invalid_argument("solve_affine: rhs size mismatch");
  Eliminator el(m.cols);
  for (int r = 0; r < m.rows; ++r)
    el.feed(row_from_mat(m, r, &rhs[static_cast<size_t>(r)]));
  return finish_affine(el);
}

SolutionSpace nullspace_sparse(int cols, const std::vector<SparseRowData>& rows) {
  Eliminator el(cols);
  for (const SparseRowData& rd : rows) {
    Row r;
    r.a = rd.a;
    r.rhs = rd.rhs;
    if (!r.rhs.is_zero())
      throw std::invalid_argument("nullspace_sparse: inhomogeneous row");
    r.normalize();
    el.feed(std::move(r));
  }
  SolutionSpace s;
  s.genericity = el.genericity().conditions;
  extract_nullspace_basis(el, s);
  return s;
}

AffineSolution solve_affine_sparse(int cols,
                                   const std::vector<SparseRowData>& rows) {
  Eliminator el(cols);
  for (const SparseRowData& rd : rows) {
    Row r;
    r.a = rd.a;
    r.rhs = rd.rhs;
    r.normalize();
    el.feed(std::move(r));
  }
  return finish_affine(el);
}

Mat specialize(const Mat& m, const std::map<Sym, Rat>& assignment) {
  std::map<Sym, Poly> vals;
  for (const auto& [s, q] : assignment) vals.emplace(s, Poly(q));
  Mat out = Mat::zero(m.rows, m.cols);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      out.at(r, c) = m.at(r, c).specialized(vals);
  return out;
}

bool EchelonBasis::is_zero_vec(const VecF& v) {
  for (const RatFn& e : v)
    if (!e.is_zero()) return false;
  return true;
}

bool EchelonBasis::insert(const VecF& v) {
  VecF r = reduce(v);
  for (int c = 0; c < cols_; ++c) {
    if (!r[static_cast<size_t>(c)].is_zero()) {
      rows_[c] = normalize_vector(r);
      return true;
    }
  }
  return false;
}

VecF EchelonBasis::reduce(const VecF& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("EchelonBasis: size mismatch");
  VecF r = v;
  for (int c = 0; c < cols_; ++c) {
    if (r[static_cast<size_t>(c)].is_zero()) continue;
    auto it = rows_.find(c);
    if (it == rows_.end()) continue;
    RatFn f = r[static_cast<size_t>(c)] / it->second[static_cast<size_t>(c)];
    for (int j = c; j < cols_; ++j)
      if (!it->second[static_cast<size_t>(j)].is_zero())
        r[static_cast<size_t>(j)] -= f * it->second[static_cast<size_t>(j)];
  }
  return r;
}

bool EchelonBasis::member(const VecF& v) const { return is_zero_vec(reduce(v)); }

bool spans_equal(const EchelonBasis& a, const std::vector<VecF>& basis_a,
                 const EchelonBasis& b, const std::vector<VecF>& basis_b) {
  if (a.dim() != b.dim()) return false;
  for (const VecF& v : basis_a)
    if (!b.member(v)) return false;
  for (const VecF& v : basis_b)
    if (!a.member(v)) return false;
  return true;
}

VecF normalize_vector(const VecF& v) {
  Poly den_all(Rat(1));
  for (const RatFn& e : v)
    if (!e.is_zero()) den_all = poly_div_exact(den_all * e.den(),
                                               poly_gcd(den_all, e.den()));
  std::vector<Poly> cleared;
  cleared.reserve(v.size());
  for (const RatFn& e : v)
    cleared.push_back(e.is_zero() ? Poly()
                                  : e.num() * poly_div_exact(den_all, e.den()));
  Rat content(0);
  const Poly* first_nonzero = nullptr;
  for (const Poly& p : cleared) {
    if (p.is_zero()) continue;
    if (!first_nonzero) first_nonzero = &p;
    content = rat_gcd(content, p.content());
  }
  VecF out(v.size());
  if (!first_nonzero) return out;
  if (first_nonzero->lead_coeff() < 0) content = -content;
  Rat inv = Rat(1) / content;
  for (size_t i = 0; i < cleared.size(); ++i)
    if (!cleared[i].is_zero()) out[i] = RatFn(cleared[i].scaled(inv));
  return out;
}

std::map<Sym, std::vector<Rat>> candidate_special_values(
    const std::vector<Poly>& genericity, const std::vector<Sym>& params) {
  std::map<Sym, std::vector<Rat>> out;
  for (const Poly& g : genericity) {
    for (const Sym& p : params) {
      if (!g.contains(p)) continue;
      for (const Rat& r : rational_roots(g, p)) {
        auto& v = out[p];
        if (std::find(v.begin(), v.end(), r) == v.end()) v.push_back(r);
      }
    }
  }
  for (auto& [s, v] : out) std::sort(v.begin(), v.end());
  return out;
}

}  // namespace cwb
