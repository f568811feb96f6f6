#include <doctest.h>

#include <random>

#include "cwb/poly.hpp"
#include "cwb/ratfn.hpp"

using namespace cwb;

namespace {

Poly random_poly(std::mt19937& rng, int terms, int maxdeg, int maxc) {
  static const std::vector<Sym> syms = {sym_d(), sym_l(), Sym::param("a"),
                                        Sym::param("b")};
  std::uniform_int_distribution<int> dc(-maxc, maxc), dd(0, maxdeg);
  Poly p;
  for (int t = 0; t < terms; ++t) {
    Mono m;
    for (const Sym& s : syms) {
      int e = dd(rng);
      if (e > 0) m = m.times(Mono::of(s, e));
    }
    p += Poly::term(m, Rat(dc(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("ring identities from the operation examples") {
  Poly p = pd() + pconst(2) * pl();
  CHECK((p + (-p)).is_zero());
  CHECK(p * Poly(Rat(1)) == p);

  // (x-y)(x+y+b) = x^2 - y^2 + b x - b y
  Poly x = Poly::var(Var::xx), y = Poly::var(Var::yy), b = Poly::param("b");
  Poly lhs = (x - y) * (x + y + b);
  Poly rhs = x * x - y * y + b * x - b * y;
  CHECK(lhs == rhs);
}

TEST_CASE("ring axioms on randomized triples") {
  std::mt19937 rng(2024);
  for (int it = 0; it < 60; ++it) {
    Poly p = random_poly(rng, 3, 3, 6);
    Poly q = random_poly(rng, 3, 3, 6);
    Poly r = random_poly(rng, 3, 3, 6);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK(p + q == q + p);
  }
}

TEST_CASE("substitution") {
  Poly p = pd() + pconst(2) * pl();
  CHECK(p.substitute({{sym_l(), -pl() - pd()}}) == -pd() - pconst(2) * pl());
  CHECK(p.substitute({{sym_d(), pl() + pd()}}) == pd() + pconst(3) * pl());

  // skew residual of the Virasoro bracket polynomial
  Poly skew = p + p.substitute({{sym_l(), -pl() - pd()}});
  CHECK(skew.is_zero());

  CHECK_THROWS(p.substitute({{Sym::param("a"), pconst(1)}}));

  // simultaneity: the images are not re-substituted
  Poly q = pd() + pl();
  CHECK(q.substitute({{sym_d(), pl()}, {sym_l(), pd()}}) == pl() + pd());
}

TEST_CASE("substitution composition on randomized polynomials") {
  std::mt19937 rng(77);
  for (int it = 0; it < 40; ++it) {
    Poly p = random_poly(rng, 3, 2, 5);
    std::map<Sym, Poly> sigma{{sym_d(), pl() + pconst(1)}};
    std::map<Sym, Poly> tau{{sym_l(), pd() - pconst(2)}};
    // tau . sigma, composed as maps
    std::map<Sym, Poly> comp;
    for (const auto& [s, img] : sigma) comp[s] = img.substitute(tau);
    for (const auto& [s, img] : tau)
      if (!comp.count(s)) comp[s] = img;
    CHECK(p.substitute(sigma).substitute(tau) == p.substitute(comp));
    CHECK(p.substitute({}) == p);
  }
}

TEST_CASE("coefficient extraction") {
  Poly p = pd() + pconst(2) * pl();
  CHECK(p.coeff_of(sym_l(), 1) == pconst(2));
  CHECK(p.coeff_of(sym_l(), 0) == pd());

  Poly c = Poly::param("c");
  Poly q = (pd() + pconst(2) * pl()) * (-pd() - pconst(2) * c);
  CHECK(q.coeff_of(sym_l(), 1) == pconst(-2) * pd() - pconst(4) * c);

  // reassembly: sum_k coeff(p, v, k) v^k = p
  std::mt19937 rng(5);
  for (int it = 0; it < 30; ++it) {
    Poly r = random_poly(rng, 4, 3, 7);
    for (const Sym& v : {sym_d(), sym_l()}) {
      Poly back;
      for (int k = 0; k <= std::max(0, r.degree(v)); ++k)
        back += r.coeff_of(v, k) * Poly::term(Mono::of(v, k), Rat(1));
      CHECK(back == r);
    }
  }
}

TEST_CASE("degree") {
  Poly a1 = Poly::param("a1"), a3 = Poly::param("a3");
  Poly p = a1 * pl() + a3 * pl().pow(3);
  CHECK(p.degree(sym_l()) == 3);
  CHECK(Poly().degree(sym_l()) == kDegNegInf);
  Poly q = pd() + pconst(2) * Poly::param("c");
  CHECK(q.degree(sym_l()) == 0);
}

TEST_CASE("rendering is canonical") {
  Poly p = pd() + pconst(2) * pl();
  CHECK(p.render() == "d+2*l");
  CHECK((-p).render() == "-d-2*l");
  CHECK(Poly().render() == "0");
  CHECK((pl().pow(3)).render() == "l^3");
  CHECK((pconst(rat(1, 12)) * pl().pow(3)).render() == "1/12*l^3");
}

TEST_CASE("gcd and exact division") {
  Poly a = Poly::param("a"), b = Poly::param("b");
  Poly g = poly_gcd((a - pconst(1)) * (a - pconst(2)), (a - pconst(1)) * b);
  CHECK(g == a - pconst(1));
  CHECK(poly_div_exact((a - pconst(1)) * (a - pconst(2)), g) == a - pconst(2));
  CHECK_THROWS(poly_div_exact(a + pconst(1), a - pconst(1)));

  std::mt19937 rng(31337);
  for (int it = 0; it < 60; ++it) {
    Poly p = random_poly(rng, 3, 2, 4);
    Poly q = random_poly(rng, 3, 2, 4);
    Poly m = random_poly(rng, 2, 2, 4);
    if (p.is_zero() || q.is_zero() || m.is_zero()) continue;
    Poly gg = poly_gcd(p * m, q * m);
    // gcd divides both products and is divisible by m's primitive part
    CHECK_NOTHROW(poly_div_exact(p * m, gg));
    CHECK_NOTHROW(poly_div_exact(q * m, gg));
    CHECK_NOTHROW(poly_div_exact(gg, poly_gcd(gg, m.primitive())));
    CHECK(poly_gcd(gg, m.primitive()) == m.primitive());
  }
}

TEST_CASE("rational roots and linear-factor splitting") {
  Sym a = Sym::param("a");
  Poly p = (Poly::sym(a) - pconst(1)) * (Poly::sym(a) - pconst(2)) *
           (pconst(2) * Poly::sym(a) - pconst(3));
  std::vector<Rat> roots = rational_roots(p, a);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == 1);
  CHECK(roots[1] == rat(3, 2));
  CHECK(roots[2] == 2);

  RootSplit rs = split_rational_linear_factors(p);
  CHECK(rs.linear_factors.size() == 3);
  CHECK(rs.cofactor.is_constant());

  // a + b - 1 has no rational root in a alone
  Poly q = Poly::sym(a) + Poly::param("b") - pconst(1);
  CHECK(rational_roots(q, a).empty());
}

TEST_CASE("rational function arithmetic") {
  Poly a = Poly::param("a");
  RatFn f(pconst(1), a - pconst(1));
  RatFn g = f + f;
  CHECK(g == RatFn(pconst(2), a - pconst(1)));
  CHECK((f - f).is_zero());
  CHECK(f * RatFn(a - pconst(1)) == RatFn::one());
  CHECK_THROWS(RatFn(pconst(1), Poly()));
  CHECK_THROWS(RatFn(pconst(1), pd()));  // denominators are parameter-only

  // specialization names the vanishing denominator
  try {
    f.specialized({{Sym::param("a"), pconst(1)}});
    CHECK(false);
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("a-1") != std::string::npos);
  }
}
