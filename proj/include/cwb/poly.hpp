// Sparse exact multivariate polynomials over Q in the fixed variables and in
// named parameters. Terms are kept in a canonical graded-lexicographic order,
// so structural equality decides polynomial equality and rendering is
// deterministic.
#pragma once

#include <limits>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "cwb/rat.hpp"
#include "cwb/sym.hpp"

namespace cwb {

// Exponent map of one monomial: sorted (symbol, exponent) pairs, exponents > 0.
struct Mono {
  std::vector<std::pair<Sym, int>> e;

  static Mono one() { return Mono{}; }
  static Mono of(const Sym& s, int exp = 1);

  bool is_one() const { return e.empty(); }
  int total_degree() const;
  int degree_of(const Sym& s) const;
  Mono times(const Mono& o) const;
  // Removes s^k from the monomial; requires degree_of(s) == k.
  Mono without(const Sym& s) const;

  friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
};

// Graded-lexicographic: total degree first, then the earlier symbol with the
// larger exponent wins.
struct GrlexLess {
  bool operator()(const Mono& a, const Mono& b) const;
};

constexpr int kDegNegInf = std::numeric_limits<int>::min();  // degree of 0

class Poly {
 public:
  using TermMap = std::map<Mono, Rat, GrlexLess>;

  Poly() = default;
  explicit Poly(const Rat& c);
  explicit Poly(long c) : Poly(Rat(c)) {}

  static Poly var(Var v) { return Poly::sym(Sym::variable(v)); }
  static Poly param(const std::string& name) {
    return Poly::sym(Sym::param(name));
  }
  static Poly sym(const Sym& s);
  static Poly term(const Mono& m, const Rat& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (coefficient of the unit monomial).
  Rat constant_term() const;
  const TermMap& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const Rat& c) const;
  Poly pow(int k) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.terms_ == b.terms_;
  }

  // Highest exponent of s, or kDegNegInf for the zero polynomial.
  int degree(const Sym& s) const;
  int total_degree() const;  // kDegNegInf for 0

  // Polynomial coefficient of s^k (s removed from the result's monomials).
  Poly coeff_of(const Sym& s, int k) const;

  // Simultaneous substitution of polynomials for *variables*. Binding a
  // parameter is a misuse and throws.
  Poly substitute(const std::map<Sym, Poly>& bindings) const;

  // Internal specialisation hook: substitutes values/expressions for
  // parameters (used by exactlinalg::specialize and the constraint solvers).
  Poly substitute_params(const std::map<Sym, Poly>& bindings) const;

  std::set<Sym> support() const;
  bool contains(const Sym& s) const;
  bool has_vars() const;

  // Leading (grlex-greatest) term.
  const Mono& lead_mono() const;
  const Rat& lead_coeff() const;

  // Positive rational c such that (*this)/c has coprime integer coefficients.
  Rat content() const;
  // this/content, sign-fixed so the leading coefficient is positive.
  Poly primitive() const;

  std::string render() const;

 private:
  void add_term(const Mono& m, const Rat& c);
  TermMap terms_;
  friend Poly poly_mul_impl(const Poly&, const Poly&);
};

inline Poly operator*(const Poly& p, const Rat& c) { return p.scaled(c); }
inline Poly operator*(const Rat& c, const Poly& p) { return p.scaled(c); }

// Convenience builders for the bracket calculus.
Poly pd();                       // d
Poly pl();                       // l
Poly pm();                       // m
Poly pn();                       // n
Poly pconst(long n);
Poly pconst(const Rat& q);

// Exact division; throws if b does not divide a.
Poly poly_div_exact(const Poly& a, const Poly& b);
// True multivariate gcd (primitive PRS); result is primitive with positive
// leading coefficient. gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

// All r in Q with (s - r) dividing p. p must involve s.
std::vector<Rat> rational_roots(const Poly& p, const Sym& s);

// Factors out linear factors (s - r) over all parameter symbols; returns the
// list of linear factors plus the remaining cofactor, all primitive.
struct RootSplit {
  std::vector<Poly> linear_factors;
  Poly cofactor;
};
RootSplit split_rational_linear_factors(const Poly& p);

// falling factorial t(t-1)...(t-k+1) as a polynomial in an arbitrary Poly t.
Poly falling_factorial(const Poly& t, int k);

}  // namespace cwb
