#include <doctest.h>

#include <random>

#include "cwb/gdb.hpp"

using namespace cwb;

namespace {

// Pool of valid GD bialgebras for randomized structure tests: truncated
// polynomial algebras with a derivation (a o b = a D(b), lie = 0), diagonal
// commutative-associative products, and random members of the V(a,b) family.
GdBialgebra random_valid_gd(std::mt19937& rng) {
  std::uniform_int_distribution<int> kind(0, 2), dim(1, 3), coef(-3, 3);
  int which = kind(rng);
  if (which == 0) {
    // C[x]/(x^n), circ = a * p(x) x d/dx (b): Novikov by the derivation
    // construction; abelian lie.
    int n = dim(rng);
    GdBialgebra g = GdBialgebra::make("truncated", {"e0", "e1", "e2"}, {});
    g.dim = n;
    g.basis.resize(static_cast<size_t>(n));
    g.circ.assign(static_cast<size_t>(n),
                  std::vector<std::vector<Poly>>(static_cast<size_t>(n),
                                                 std::vector<Poly>(static_cast<size_t>(n))));
    g.lie = g.circ;
    // D = c x d/dx:  e_i o e_j = c*j * x^{i+j} (zero beyond the truncation)
    int c = coef(rng);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i + j < n) g.set_circ(i, j, i + j, pconst(c * j));
    return g;
  }
  if (which == 1) {
    // diagonal commutative associative product, e_i o e_i = c_i e_i
    int n = dim(rng);
    GdBialgebra g = GdBialgebra::make("diag", {"e0", "e1", "e2"}, {});
    g.dim = n;
    g.basis.resize(static_cast<size_t>(n));
    g.circ.assign(static_cast<size_t>(n),
                  std::vector<std::vector<Poly>>(static_cast<size_t>(n),
                                                 std::vector<Poly>(static_cast<size_t>(n))));
    g.lie = g.circ;
    for (int i = 0; i < n; ++i) g.set_circ(i, i, i, pconst(coef(rng)));
    return g;
  }
  return builtin_v_ab(Rat(coef(rng)), Rat(coef(rng)));
}

}  // namespace

TEST_CASE("V(a,b) satisfies all Gel'fand-Dorfman axioms symbolically") {
  GdBialgebra v = builtin_v_ab();
  CHECK(check_novikov(v).ok());
  CHECK(check_lie(v).ok());
  CHECK(check_gd_compat(v).ok());
}

TEST_CASE("a nonabelian Lie bracket is not a Novikov product") {
  // circ := the sl2 bracket; right-commutativity fails.
  GdBialgebra g = GdBialgebra::make("sl2-as-circ", {"e", "h", "f"}, {});
  auto setc = [&](int i, int j, int k, long c) {
    g.set_circ(i, j, k, pconst(c));
  };
  setc(0, 2, 1, 1);
  setc(2, 0, 1, -1);
  setc(1, 0, 0, 2);
  setc(0, 1, 0, -2);
  setc(1, 2, 2, -2);
  setc(2, 1, 2, 2);
  CHECK(!check_novikov(g).ok());
}

TEST_CASE("one-dimensional idempotent is a Novikov algebra") {
  GdBialgebra g = GdBialgebra::make("idem", {"e"}, {});
  g.set_circ(0, 0, 0, pconst(1));
  CHECK(check_novikov(g).ok());
  CHECK(check_gd_compat(g).ok());
}

TEST_CASE("compatibility fails for a perturbed bracket") {
  // [L,Y] changed to -bY + Y: condition (2.4) breaks for generic b.
  GdBialgebra v = builtin_v_ab();
  v.set_lie(0, 1, 1, -Poly::param("b") + pconst(1));
  CHECK(check_lie(v).ok());  // still a Lie algebra (dimension reasons)
  CHECK(!check_gd_compat(v).ok());
}

TEST_CASE("abelian Lie bracket makes compatibility vacuous") {
  GdBialgebra v = builtin_v_ab();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) v.lie[i][j][k] = Poly();
  CHECK(check_gd_compat(v).ok());
}

TEST_CASE("to_quadratic reproduces the published tables") {
  CHECK(to_quadratic(builtin_v_ab()).table_equal(builtin_tsv_ab()));

  // 1-dimensional L o L = L, lie = 0 gives the Virasoro algebra
  GdBialgebra one = GdBialgebra::make("vir-gd", {"L"}, {});
  one.set_circ(0, 0, 0, pconst(1));
  CHECK(to_quadratic(one).table_equal(builtin_vir()));

  // zero operations give the abelian algebra
  GdBialgebra zero = GdBialgebra::make("zero", {"A", "B"}, {});
  LcaPresentation ab = to_quadratic(zero);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) CHECK(ab.entry(i, j, k).is_zero());
}

TEST_CASE("from_quadratic inverts the correspondence and rejects non-quadratic tables") {
  FromQuadratic fv = from_quadratic(builtin_tsv_ab());
  REQUIRE(fv.ok);
  CHECK(fv.bialgebra.equal(builtin_v_ab()));

  FromQuadratic fc = from_quadratic(builtin_tsv_c());
  CHECK(!fc.ok);
  CHECK(fc.error.find("d^2") != std::string::npos);

  FromQuadratic fa = from_quadratic(
      LcaPresentation::make("abelian", {"A"}, {}));
  REQUIRE(fa.ok);
  for (int k = 0; k < 1; ++k) {
    CHECK(fa.bialgebra.circ_at(0, 0, k).is_zero());
    CHECK(fa.bialgebra.lie_at(0, 0, k).is_zero());
  }
}

TEST_CASE("round trip and axiom transport on randomized valid instances") {
  std::mt19937 rng(20240401);
  int done = 0;
  while (done < 20) {
    GdBialgebra g = random_valid_gd(rng);
    REQUIRE(check_gd(g).ok());
    LcaPresentation q = to_quadratic(g);
    // the correspondence theorem, exercised: the quadratic algebra satisfies
    // the conformal axioms
    CHECK(check_skew(q).ok());
    CHECK(check_jacobi(q).ok());
    FromQuadratic back = from_quadratic(q);
    REQUIRE(back.ok);
    CHECK(back.bialgebra.equal(g));
    ++done;
  }
}

TEST_CASE("product surjectivity check") {
  CHECK(circ_surjective(builtin_v_ab()));
  GdBialgebra zero = GdBialgebra::make("zero", {"A"}, {});
  CHECK(!circ_surjective(zero));
}
