#include <doctest.h>

#include <random>

#include "cwb/linalg.hpp"

using namespace cwb;

namespace {

Mat from_rows(const std::vector<std::vector<RatFn>>& rows) {
  Mat m;
  m.rows = static_cast<int>(rows.size());
  m.cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  m.a = rows;
  return m;
}

bool vec_is_zero(const VecF& v) { return EchelonBasis::is_zero_vec(v); }

}  // namespace

TEST_CASE("nullspace of the identity is trivial") {
  Mat m = from_rows({{RatFn(Rat(1)), RatFn()}, {RatFn(), RatFn(Rat(1))}});
  SolutionSpace s = nullspace(m);
  CHECK(s.dim() == 0);
  CHECK(s.genericity.empty());
}

TEST_CASE("parametric pivot is recorded and controls specializations") {
  Poly a = Poly::param("a");
  Mat m = from_rows({{RatFn(a - pconst(1)), RatFn()}});
  SolutionSpace s = nullspace(m);
  CHECK(s.dim() == 1);
  REQUIRE(s.genericity.size() == 1);
  CHECK(s.genericity[0] == a - pconst(1));

  // away from the pivot locus the dimension agrees; on it, it jumps
  Mat at2 = specialize(m, {{Sym::param("a"), Rat(2)}});
  CHECK(nullspace(at2).dim() == 1);
  Mat at1 = specialize(m, {{Sym::param("a"), Rat(1)}});
  CHECK(nullspace(at1).dim() == 2);
}

TEST_CASE("specialize reports the vanishing denominator") {
  Poly a = Poly::param("a");
  Mat m = from_rows({{RatFn(pconst(1), a - pconst(1))}});
  CHECK_NOTHROW(specialize(m, {{Sym::param("a"), Rat(0)}}));
  try {
    specialize(m, {{Sym::param("a"), Rat(1)}});
    CHECK(false);
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("a-1") != std::string::npos);
  }
}

TEST_CASE("random parametric systems: dimension stability and reverification") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> dc(-3, 3);
  Sym a = Sym::param("a"), b = Sym::param("b");
  for (int it = 0; it < 25; ++it) {
    // random 4x6 matrix with entries linear in a, b
    Mat m = Mat::zero(4, 6);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 6; ++c) {
        Poly e = pconst(dc(rng)) + pconst(dc(rng)) * Poly::sym(a) +
                 pconst(dc(rng)) * Poly::sym(b);
        m.at(r, c) = RatFn(e);
      }
    SolutionSpace s = nullspace(m);
    GenericityCollector gen;
    int rk = rank(m, &gen);
    CHECK(rk + s.dim() == m.cols);

    // every basis vector satisfies the system exactly
    for (const VecF& v : s.basis) CHECK(vec_is_zero(m.apply(v)));

    // a random specialization avoiding the genericity locus preserves dim
    for (int tries = 0; tries < 20; ++tries) {
      Rat av(dc(rng) + 10), bv(dc(rng) - 10);
      bool safe = true;
      for (const Poly& g : s.genericity) {
        Poly at = g.substitute_params(
            {{a, Poly(av)}, {b, Poly(bv)}});
        if (at.is_zero()) safe = false;
      }
      if (!safe) continue;
      Mat ms = specialize(m, {{a, av}, {b, bv}});
      CHECK(nullspace(ms).dim() == s.dim());
      break;
    }
  }
}

TEST_CASE("affine solves: particular solutions and infeasibility certificates") {
  // x + y = 2, x - y = 0  ->  x = y = 1
  Mat m = from_rows({{RatFn(Rat(1)), RatFn(Rat(1))},
                     {RatFn(Rat(1)), RatFn(Rat(-1))}});
  AffineSolution s = solve_affine(m, {RatFn(Rat(2)), RatFn(Rat(0))});
  REQUIRE(s.consistent);
  CHECK(s.homogeneous.dim() == 0);
  CHECK(s.particular[0] == RatFn(Rat(1)));
  CHECK(s.particular[1] == RatFn(Rat(1)));

  // 0 = c with c a parameter: infeasible with certificate c
  Mat z = from_rows({{RatFn()}});
  AffineSolution bad = solve_affine(z, {RatFn(Poly::param("c"))});
  CHECK(!bad.consistent);
  REQUIRE(bad.infeasibility.size() == 1);
  CHECK(bad.infeasibility[0] == Poly::param("c"));
}

TEST_CASE("echelon spans") {
  EchelonBasis e(3);
  VecF v1 = {RatFn(Rat(1)), RatFn(Rat(2)), RatFn()};
  VecF v2 = {RatFn(), RatFn(Rat(1)), RatFn(Rat(1))};
  CHECK(e.insert(v1));
  CHECK(e.insert(v2));
  CHECK(!e.insert(v1));
  CHECK(e.dim() == 2);
  VecF combo = {RatFn(Rat(2)), RatFn(Rat(5)), RatFn(Rat(1))};
  CHECK(e.member(combo));
  VecF outside = {RatFn(), RatFn(), RatFn(Rat(1))};
  CHECK(!e.member(outside));
}

TEST_CASE("candidate special values from genericity sets") {
  Sym a = Sym::param("a");
  Poly quad = (Poly::sym(a) - pconst(1)) * (Poly::sym(a) - pconst(2));
  auto cand = candidate_special_values({quad}, {a});
  REQUIRE(cand.count(a) == 1);
  CHECK(cand[a] == std::vector<Rat>{Rat(1), Rat(2)});
}
