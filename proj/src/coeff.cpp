#include "cwb/coeff.hpp"

#include <sstream>

namespace cwb {

CoeffClosedForm coeff_closed_form(const LcaPresentation& a, const Sym& m,
                                  const Sym& n) {
  // [a_l b] = sum_jp l^jp / jp! a_(jp) b, and (d^r e_k)_s = (-1)^r s(s-1)...
  // (s-r+1) e_{k,s-r}; with s = m+n-jp this yields, per table entry
  // coefficient c of l^jp d^r:
  //   falling(m, jp) * (-1)^r * falling(m+n-jp, r) * c * e_{k, m+n-jp-r}.
  CoeffClosedForm f;
  f.m = m;
  f.n = n;
  Poly pm_idx = Poly::sym(m), pn_idx = Poly::sym(n);
  f.entries.assign(
      static_cast<size_t>(a.rank),
      std::vector<std::vector<ModeTerm>>(static_cast<size_t>(a.rank)));
  for (int i = 0; i < a.rank; ++i)
    for (int j = 0; j < a.rank; ++j) {
      std::map<std::pair<int, int>, Poly> acc;  // (gen, offset) -> coeff
      for (int k = 0; k < a.rank; ++k) {
        const Poly& p = a.entry(i, j, k);
        int dl = std::max(0, p.degree(sym_l()));
        int dd = std::max(0, p.degree(sym_d()));
        for (int jp = 0; jp <= dl; ++jp)
          for (int r = 0; r <= dd; ++r) {
            Poly c = p.coeff_of(sym_l(), jp).coeff_of(sym_d(), r);
            if (c.is_zero()) continue;
            Poly w = falling_factorial(pm_idx, jp);
            if (r % 2 == 1) w = -w;
            w *= falling_factorial(pm_idx + pn_idx - Poly(Rat(jp)), r);
            acc[{k, jp + r}] += w * c;
          }
      }
      auto& out = f.entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
      for (auto& [key, c] : acc) {
        if (c.is_zero()) continue;
        out.push_back({key.first, key.second, std::move(c)});
      }
    }
  return f;
}

bool FormalSum::is_zero() const {
  for (const auto& [k, c] : terms)
    if (!c.is_zero()) return false;
  return true;
}

void FormalSum::add(int gen, long index, const Poly& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(gen, index);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

FormalSum FormalSum::operator-(const FormalSum& o) const {
  FormalSum r = *this;
  for (const auto& [k, c] : o.terms) r.add(k.first, k.second, -c);
  return r;
}

std::string FormalSum::render(const std::vector<std::string>& gens) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.render() << ")*" << gens[static_cast<size_t>(k.first)] << "["
       << k.second << "]";
  }
  return os.str();
}

CoeffWindow::CoeffWindow(LcaPresentation a, int radius)
    : alg_(std::move(a)),
      radius_(radius),
      form_(coeff_closed_form(alg_, Sym::param("$m"), Sym::param("$n"))) {
  if (radius < 1) throw std::invalid_argument("CoeffWindow: radius must be >= 1");
}

FormalSum CoeffWindow::bracket_modes(int i, long m, int j, long n) const {
  FormalSum out;
  std::map<Sym, Poly> at{{form_.m, Poly(Rat(m))}, {form_.n, Poly(Rat(n))}};
  for (const ModeTerm& t :
       form_.entries[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
    Poly c = t.coeff.substitute_params(at);
    out.add(t.gen, m + n - t.offset, c);
  }
  return out;
}

FormalSum CoeffWindow::bracket_sums(const FormalSum& x,
                                    const FormalSum& y) const {
  FormalSum out;
  for (const auto& [kx, cx] : x.terms)
    for (const auto& [ky, cy] : y.terms) {
      FormalSum b = bracket_modes(kx.first, kx.second, ky.first, ky.second);
      Poly f = cx * cy;
      for (const auto& [kb, cb] : b.terms) out.add(kb.first, kb.second, f * cb);
    }
  return out;
}

std::string CoeffWindow::dump() const {
  std::ostringstream os;
  for (int i = 0; i < alg_.rank; ++i)
    for (long m = -radius_; m <= radius_; ++m)
      for (int j = 0; j < alg_.rank; ++j)
        for (long n = -radius_; n <= radius_; ++n) {
          FormalSum b = bracket_modes(i, m, j, n);
          if (b.is_zero()) continue;
          os << "[" << alg_.gens[static_cast<size_t>(i)] << "[" << m << "], "
             << alg_.gens[static_cast<size_t>(j)] << "[" << n
             << "]] = " << b.render(alg_.gens) << "\n";
        }
  return os.str();
}

CoeffWindow build_window(const LcaPresentation& a, int radius) {
  return CoeffWindow(a, radius);
}

VerifyReport check_window_jacobi(const CoeffWindow& w) {
  VerifyReport rep;
  rep.subject = w.algebra().name + " coefficient-algebra window";
  const LcaPresentation& a = w.algebra();
  long R = w.radius();

  // Antisymmetry within the window.
  for (int i = 0; i < a.rank; ++i)
    for (long m = -R; m <= R; ++m)
      for (int j = i; j < a.rank; ++j)
        for (long n = -R; n <= R; ++n) {
          FormalSum anti = w.bracket_modes(i, m, j, n);
          FormalSum flip = w.bracket_modes(j, n, i, m);
          for (const auto& [k, c] : flip.terms) anti.add(k.first, k.second, c);
          if (!anti.is_zero())
            rep.add("antisymmetry", false, anti.render(a.gens));
        }
  if (rep.items.empty()) rep.add("antisymmetry within window", true);

  // Jacobi over mode triples, basis elements ordered to avoid repeats.
  long count = 0;
  for (int i = 0; i < a.rank; ++i)
    for (int j = i; j < a.rank; ++j)
      for (int k = j; k < a.rank; ++k)
        for (long m = -R; m <= R; ++m)
          for (long n = -R; n <= R; ++n)
            for (long p = -R; p <= R; ++p) {
              FormalSum x, y, z;
              x.add(i, m, Poly(Rat(1)));
              y.add(j, n, Poly(Rat(1)));
              z.add(k, p, Poly(Rat(1)));
              FormalSum lhs = w.bracket_sums(x, w.bracket_sums(y, z));
              FormalSum r1 = w.bracket_sums(w.bracket_sums(x, y), z);
              FormalSum r2 = w.bracket_sums(y, w.bracket_sums(x, z));
              FormalSum res = lhs - r1 - r2;
              ++count;
              if (!res.is_zero()) {
                std::ostringstream id;
                id << "jacobi(" << a.gens[static_cast<size_t>(i)] << "[" << m
                   << "]," << a.gens[static_cast<size_t>(j)] << "[" << n << "],"
                   << a.gens[static_cast<size_t>(k)] << "[" << p << "])";
                rep.add(id.str(), false, res.render(a.gens));
              }
            }
  std::ostringstream done;
  done << "jacobi on " << count << " mode triples";
  rep.add(done.str(), true);
  return rep;
}

}  // namespace cwb
