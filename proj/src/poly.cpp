#include "cwb/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cwb {

Mono Mono::of(const Sym& s, int exp) {
  Mono m;
  if (exp < 0) throw std::invalid_argument("Mono::of: negative exponent");
  if (exp > 0) m.e.emplace_back(s, exp);
  return m;
}

int Mono::total_degree() const {
  int d = 0;
  for (const auto& [s, k] : e) d += k;
  return d;
}

int Mono::degree_of(const Sym& s) const {
  for (const auto& [t, k] : e)
    if (t == s) return k;
  return 0;
}

Mono Mono::times(const Mono& o) const {
  Mono r;
  r.e.reserve(e.size() + o.e.size());
  auto a = e.begin(), ae = e.end();
  auto b = o.e.begin(), be = o.e.end();
  while (a != ae && b != be) {
    if (a->first < b->first)
      r.e.push_back(*a++);
    else if (b->first < a->first)
      r.e.push_back(*b++);
    else {
      r.e.emplace_back(a->first, a->second + b->second);
      ++a, ++b;
    }
  }
  r.e.insert(r.e.end(), a, ae);
  r.e.insert(r.e.end(), b, be);
  return r;
}

Mono Mono::without(const Sym& s) const {
  Mono r;
  for (const auto& p : e)
    if (!(p.first == s)) r.e.push_back(p);
  return r;
}

bool GrlexLess::operator()(const Mono& a, const Mono& b) const {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  // Same degree: scan symbols in order; larger exponent on the earliest
  // differing symbol means the larger monomial.
  auto i = a.e.begin(), ie = a.e.end();
  auto j = b.e.begin(), je = b.e.end();
  while (i != ie && j != je) {
    if (i->first == j->first) {
      if (i->second != j->second) return i->second < j->second ? true : false;
      ++i, ++j;
      continue;
    }
    // The one holding the earlier symbol has positive exponent there.
    return !(i->first < j->first);
  }
  if (i != ie) return false;  // a has an extra (later) symbol -> a larger? no:
  if (j != je) return true;
  return false;
}

Poly::Poly(const Rat& c) {
  if (c != 0) terms_.emplace(Mono::one(), c);
}

Poly Poly::sym(const Sym& s) { return Poly::term(Mono::of(s), Rat(1)); }

Poly Poly::term(const Mono& m, const Rat& c) {
  Poly p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rat Poly::constant_term() const {
  auto it = terms_.find(Mono::one());
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
  return r;
}

Poly Poly::scaled(const Rat& c) const {
  Poly r;
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Poly Poly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("Poly::pow: negative exponent");
  Poly r(Rat(1));
  Poly base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

int Poly::degree(const Sym& s) const {
  if (is_zero()) return kDegNegInf;
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree_of(s));
  return d;
}

int Poly::total_degree() const {
  if (is_zero()) return kDegNegInf;
  return terms_.rbegin()->first.total_degree();
}

Poly Poly::coeff_of(const Sym& s, int k) const {
  Poly r;
  for (const auto& [m, c] : terms_)
    if (m.degree_of(s) == k) r.terms_.emplace(m.without(s), c);
  return r;
}

Poly Poly::substitute(const std::map<Sym, Poly>& bindings) const {
  for (const auto& [s, p] : bindings)
    if (!s.is_var())
      throw std::invalid_argument(
          "Poly::substitute: binding a parameter ('" + s.text() +
          "') is not allowed; parameters are field elements");
  return substitute_params(bindings);  // same machinery, keys already vetted
}

Poly Poly::substitute_params(const std::map<Sym, Poly>& bindings) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    Poly t(c);
    Mono untouched;
    for (const auto& [s, k] : m.e) {
      auto it = bindings.find(s);
      if (it == bindings.end())
        untouched.e.emplace_back(s, k);
      else
        t *= it->second.pow(k);
    }
    r += t * Poly::term(untouched, Rat(1));
  }
  return r;
}

std::set<Sym> Poly::support() const {
  std::set<Sym> s;
  for (const auto& [m, c] : terms_)
    for (const auto& [sym, k] : m.e) s.insert(sym);
  return s;
}

bool Poly::contains(const Sym& s) const {
  for (const auto& [m, c] : terms_)
    if (m.degree_of(s) > 0) return true;
  return false;
}

bool Poly::has_vars() const {
  for (const auto& [m, c] : terms_)
    for (const auto& [sym, k] : m.e)
      if (sym.is_var()) return true;
  return false;
}

const Mono& Poly::lead_mono() const {
  if (is_zero()) throw std::domain_error("lead_mono of zero polynomial");
  return terms_.rbegin()->first;
}

const Rat& Poly::lead_coeff() const {
  if (is_zero()) throw std::domain_error("lead_coeff of zero polynomial");
  return terms_.rbegin()->second;
}

Rat Poly::content() const {
  if (is_zero()) return Rat(0);
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            c.get_den().get_mpz_t());
  }
  Rat q(num_gcd, den_lcm);
  q.canonicalize();
  return abs(q);
}

Poly Poly::primitive() const {
  if (is_zero()) return *this;
  Rat c = content();
  if (lead_coeff() < 0) c = -c;
  return scaled(Rat(1) / c);
}

Poly pd() { return Poly::var(Var::del); }
Poly pl() { return Poly::var(Var::lam); }
Poly pm() { return Poly::var(Var::mu); }
Poly pn() { return Poly::var(Var::nu); }
Poly pconst(long n) { return Poly(Rat(n)); }
Poly pconst(const Rat& q) { return Poly(q); }

std::string Poly::render() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Leading term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Mono& m = it->first;
    Rat c = it->second;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
      first = false;
    } else {
      os << (neg ? '-' : '+');
    }
    bool coeff_shown = false;
    if (m.is_one() || c != 1) {
      os << to_string(c);
      coeff_shown = true;
    }
    bool first_factor = !coeff_shown;
    for (const auto& [s, k] : m.e) {
      if (!first_factor) os << '*';
      first_factor = false;
      os << s.text();
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Exact division, gcd, rational roots.

Poly poly_div_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("poly_div_exact: division by zero");
  Poly rem = a, quot;
  GrlexLess less;
  while (!rem.is_zero()) {
    const Mono lm = rem.lead_mono();  // by value: rem is mutated below
    const Mono& lb = b.lead_mono();
    // Try lm / lb.
    Mono q;
    bool divisible = true;
    {
      auto i = lm.e.begin(), ie = lm.e.end();
      auto j = lb.e.begin(), je = lb.e.end();
      while (j != je) {
        while (i != ie && i->first < j->first) q.e.push_back(*i++);
        if (i == ie || !(i->first == j->first) || i->second < j->second) {
          divisible = false;
          break;
        }
        if (i->second > j->second) q.e.emplace_back(i->first, i->second - j->second);
        ++i, ++j;
      }
      if (divisible) q.e.insert(q.e.end(), i, ie);
    }
    if (!divisible)
      throw std::domain_error("poly_div_exact: not divisible");
    Rat qc = rem.lead_coeff() / b.lead_coeff();
    Poly qt = Poly::term(q, qc);
    quot += qt;
    rem -= qt * b;
    if (!rem.is_zero() && !less(rem.lead_mono(), lm))
      throw std::domain_error("poly_div_exact: no progress (not divisible)");
  }
  return quot;
}

namespace {

// Univariate view of p in the symbol s: coefficient polynomials by exponent.
std::vector<Poly> coeffs_in(const Poly& p, const Sym& s) {
  int d = std::max(p.degree(s), 0);
  std::vector<Poly> cs(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) cs[static_cast<size_t>(k)] = p.coeff_of(s, k);
  return cs;
}

// gcd of all coefficients of p viewed univariately in s.
Poly content_in(const Poly& p, const Sym& s) {
  Poly g;
  for (const Poly& c : coeffs_in(p, s)) g = poly_gcd(g, c);
  return g;
}

// Pseudo-remainder of a by b in the main symbol s (deg_s a >= deg_s b > 0).
Poly pseudo_rem(Poly a, const Poly& b, const Sym& s) {
  int db = b.degree(s);
  Poly lb = b.coeff_of(s, db);
  while (!a.is_zero() && a.degree(s) >= db) {
    int da = a.degree(s);
    Poly la = a.coeff_of(s, da);
    a = a * lb - b * la * Poly::term(Mono::of(s, da - db), Rat(1));
  }
  return a;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) return Poly(Rat(1));

  // Pick the smallest symbol present in either as the main variable.
  std::set<Sym> sup = a.support();
  for (const Sym& s : b.support()) sup.insert(s);
  const Sym main = *sup.begin();

  if (!a.contains(main) || !b.contains(main)) {
    // main appears in only one operand: gcd divides that one's content.
    const Poly& with = a.contains(main) ? a : b;
    const Poly& flat = a.contains(main) ? b : a;
    return poly_gcd(content_in(with, main), flat);
  }

  Poly ca = content_in(a, main), cb = content_in(b, main);
  Poly f = poly_div_exact(a, ca), g = poly_div_exact(b, cb);
  if (f.degree(main) < g.degree(main)) std::swap(f, g);
  while (!g.is_zero()) {
    Poly r = pseudo_rem(f, g, main);
    f = g;
    if (r.is_zero()) {
      g = Poly();
    } else {
      g = poly_div_exact(r, content_in(r, main)).primitive();
    }
  }
  Poly cg = poly_gcd(ca, cb);
  return (cg * f.primitive()).primitive();
}

std::vector<Rat> rational_roots(const Poly& p, const Sym& s) {
  std::vector<Rat> roots;
  if (!p.contains(s)) return roots;
  std::vector<Poly> cs = coeffs_in(p, s);
  // If (s - r) divides p then every "monomial slice" of the coefficient
  // system vanishes at r, so the rational root theorem applied to the first
  // nonzero slice bounds the candidates.
  // Slice: fix a monomial m of the non-s part; q_m(r) = sum coeff(cs[k], m) r^k.
  std::map<Mono, std::vector<Rat>, GrlexLess> slices;
  for (size_t k = 0; k < cs.size(); ++k)
    for (const auto& [m, c] : cs[k].terms()) {
      auto& v = slices[m];
      if (v.empty()) v.resize(cs.size(), Rat(0));
      v[k] = c;
    }
  if (slices.empty()) return roots;
  const std::vector<Rat>& q = slices.begin()->second;
  int lo = 0, hi = static_cast<int>(q.size()) - 1;
  while (hi > 0 && q[static_cast<size_t>(hi)] == 0) --hi;
  while (lo < hi && q[static_cast<size_t>(lo)] == 0) ++lo;
  Int den_lcm = 1;
  for (int k = lo; k <= hi; ++k)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            q[static_cast<size_t>(k)].get_den().get_mpz_t());
  Int c0 = Int(q[static_cast<size_t>(lo)].get_num() * den_lcm /
               q[static_cast<size_t>(lo)].get_den());
  Int cl = Int(q[static_cast<size_t>(hi)].get_num() * den_lcm /
               q[static_cast<size_t>(hi)].get_den());
  c0 = abs(c0);
  cl = abs(cl);
  std::set<Rat> cand;
  cand.insert(Rat(0));
  if (c0 != 0 && cl != 0) {
    std::vector<Int> ps, qs;
    for (Int i = 1; i * i <= c0; ++i)
      if (c0 % i == 0) {
        ps.push_back(i);
        ps.push_back(c0 / i);
      }
    for (Int i = 1; i * i <= cl; ++i)
      if (cl % i == 0) {
        qs.push_back(i);
        qs.push_back(cl / i);
      }
    for (const Int& nn : ps)
      for (const Int& dd : qs) {
        Rat r(nn, dd);
        r.canonicalize();
        cand.insert(r);
        cand.insert(-r);
      }
  }
  for (const Rat& r : cand) {
    Poly at = p.substitute_params({{s, Poly(r)}});
    if (at.is_zero()) roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

RootSplit split_rational_linear_factors(const Poly& p) {
  RootSplit out;
  out.cofactor = p.primitive();
  bool progress = true;
  while (progress && !out.cofactor.is_constant()) {
    progress = false;
    for (const Sym& s : out.cofactor.support()) {
      if (!s.is_param()) continue;
      for (const Rat& r : rational_roots(out.cofactor, s)) {
        Poly lin = Poly::sym(s) - Poly(r);
        out.linear_factors.push_back(lin);
        out.cofactor = poly_div_exact(out.cofactor, lin).primitive();
        progress = true;
        break;
      }
      if (progress) break;
    }
  }
  return out;
}

Poly falling_factorial(const Poly& t, int k) {
  Poly r(Rat(1));
  for (int i = 0; i < k; ++i) r *= (t - Poly(Rat(i)));
  return r;
}

}  // namespace cwb
