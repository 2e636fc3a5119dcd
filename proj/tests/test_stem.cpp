#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "treg/blocks.hpp"
#include "treg/random.hpp"
#include "treg/stem.hpp"

using namespace treg;

namespace {

CliffordPoly real_terms(const VarSpace& vars, Signature sig,
                        std::vector<std::pair<Exp, long>> terms) {
  CliffordPoly p(vars, sig);
  for (auto& [e, c] : terms) p.add_term(e, Multivector::scalar(sig, Rational(c)));
  return p;
}

// The stem of the degree-three polynomial used as the running worked
// example: components a0^3 - 3 a0 b1^2, (3 a0^2 - 3 b1^2) b2, 6 a0 b1 b2.
StemFunction worked_stem() {
  StepList T({0, 3, 6});
  auto B = HypercomplexBasis::paravector(6);
  StemFunction F(T, B);
  VarSpace S = stem_space(T);
  F.set_component(0b00, real_terms(S, B.sig(), {{{3, 0, 0}, 1}, {{1, 2, 0}, -3}}));
  F.set_component(0b10, real_terms(S, B.sig(), {{{2, 0, 1}, 3}, {{0, 2, 1}, -3}}));
  F.set_component(0b11, real_terms(S, B.sig(), {{{1, 1, 1}, 6}}));
  return F;
}

// The same function written directly in the coordinates x_0..x_6.
CliffordPoly worked_poly() {
  StepList T({0, 3, 6});
  auto B = HypercomplexBasis::paravector(6);
  VarSpace X = x_space(T);
  CliffordPoly x0 = CliffordPoly::variable(X, B.sig(), 0);
  CliffordPoly X1 = block_linear(X, T, B, 1);
  CliffordPoly X2 = block_linear(X, T, B, 2);
  CliffordPoly Q1 = block_norm2(X, T, B.sig(), 1);
  return x0.pow(3) + x0.pow(2).scale(3) * X2 - x0.scale(3) * Q1 + x0.scale(6) * X1 * X2 -
         Q1.scale(3) * X2;
}

}  // namespace

TEST_CASE("component bookkeeping enforces the parity invariant") {
  StepList T({0, 3, 6});
  auto B = HypercomplexBasis::paravector(6);
  StemFunction F(T, B);
  VarSpace S = stem_space(T);
  CHECK(F.is_zero());
  // b1 even exponent in a component with 1 in K: rejected.
  CHECK_THROWS_AS(F.set_component(0b01, real_terms(S, B.sig(), {{{0, 2, 0}, 1}})), StemError);
  CHECK_THROWS_AS(F.set_component(0b00, real_terms(S, B.sig(), {{{0, 1, 0}, 1}})), StemError);
  CHECK_THROWS_AS(F.set_component(0b100, real_terms(S, B.sig(), {{{1, 0, 0}, 1}})), StemError);
  F.set_component(0b01, real_terms(S, B.sig(), {{{0, 1, 0}, 1}}));
  CHECK(!F.is_zero());
  F.set_component(0b01, CliffordPoly(S, B.sig()));
  CHECK(F.is_zero());
  // Laurent parities count modulo two as well.
  CliffordPoly lp(S, B.sig());
  lp.add_term({0, -1, 0}, Multivector::scalar(B.sig(), Rational(1)));
  F.set_component(0b01, lp);
  CHECK(!F.is_polynomial());
}

TEST_CASE("the three operators factor the Laplacian on random stems") {
  Rng rng(31);
  for (auto steps : {std::vector<int>{0, 3, 6}, {1, 3, 5}, {0, 2, 4, 6}}) {
    StepList T(steps);
    auto B = HypercomplexBasis::paravector(T.N());
    for (int it = 0; it < 5; ++it) {
      StemFunction F = random_stem(rng, T, B);
      StemFunction lap = delta_T(F);
      CHECK(d_T(dbar_T(F)) == lap);
      CHECK(dbar_T(d_T(F)) == lap);
    }
  }
}

TEST_CASE("stem operators are linear") {
  Rng rng(33);
  StepList T({0, 3, 6});
  auto B = HypercomplexBasis::paravector(6);
  StemFunction F = random_stem(rng, T, B);
  StemFunction G = random_stem(rng, T, B);
  CHECK(dbar_T(F + G) == dbar_T(F) + dbar_T(G));
  CHECK(d_T(F.scale(rat(3, 2))) == d_T(F).scale(rat(3, 2)));
  CHECK(delta_T(F - G) == delta_T(F) - delta_T(G));
}

TEST_CASE("worked example: regular and harmonic") {
  StemFunction F = worked_stem();
  CHECK(is_strongly_regular_stem(F));
  CHECK(is_harmonic_stem(F));
  CHECK(dbar_T(F).is_zero());
  CHECK(delta_T(F).is_zero());
  // d_T does not annihilate it.
  CHECK(!d_T(F).is_zero());
}

TEST_CASE("worked example: induced polynomial") {
  CHECK(induced_poly(worked_stem()) == worked_poly());
}

TEST_CASE("worked example: extraction recovers the stem") {
  StepList T({0, 3, 6});
  auto B = HypercomplexBasis::paravector(6);
  StemFunction F = worked_stem();
  CliffordPoly f = worked_poly();
  CHECK(extract_stem(f, T, B) == F);
  // The result does not depend on the chosen torus point.
  for (std::uint64_t seed = 1; seed <= 5; ++seed)
    CHECK(extract_stem(f, T, B, random_torus(T, B, seed)) == F);
}

TEST_CASE("worked example: one coarsening step") {
  StemFunction G = tilde(worked_stem());
  StepList T2({3, 6});
  auto B = HypercomplexBasis::paravector(6);
  CHECK(G.steps() == T2);
  VarSpace S = stem_space(T2);
  CliffordPoly even = real_terms(
      S, B.sig(), {{{3, 0, 0, 0, 0}, 1}, {{1, 2, 0, 0, 0}, -3}, {{1, 0, 2, 0, 0}, -3},
                   {{1, 0, 0, 2, 0}, -3}});
  CliffordPoly odd = real_terms(S, B.sig(), {{{2, 0, 0, 0, 1}, 3},
                                             {{0, 2, 0, 0, 1}, -3},
                                             {{0, 0, 2, 0, 1}, -3},
                                             {{0, 0, 0, 2, 1}, -3}});
  for (int s = 1; s <= 3; ++s) {
    Exp e(5, 0);
    e[0] = 1;
    e[s] = 1;
    e[4] = 1;
    odd.add_term(e, B.v(s).scale(Rational(-6)));
  }
  CHECK(G.component(0b0) == even);
  CHECK(G.component(0b1) == odd);
  // The coarsened stem induces the same polynomial.
  CHECK(induced_poly(G) == worked_poly());
  CHECK(is_t_function(worked_poly(), T2, B));
}

TEST_CASE("coarsening the whole way preserves the induced polynomial on random stems") {
  Rng rng(41);
  for (auto steps : {std::vector<int>{0, 3, 6}, {1, 4, 7}, {0, 2, 4, 6}}) {
    StepList T(steps);
    auto B = T.N() == 7 ? HypercomplexBasis::w_h(6, 6) : HypercomplexBasis::paravector(T.N());
    for (int it = 0; it < 3; ++it) {
      StemFunction F = random_stem(rng, T, B);
      CliffordPoly f = induced_poly(F);
      for (int c = 1; c <= T.tau(); ++c) CHECK(induced_poly(multitilde(F, c)) == f);
    }
  }
}

TEST_CASE("extraction inverts induction on random stems") {
  Rng rng(43);
  for (auto steps : {std::vector<int>{0, 3, 6}, {1, 4, 7}}) {
    StepList T(steps);
    auto B = T.N() == 7 ? HypercomplexBasis::w_h(6, 6) : HypercomplexBasis::paravector(T.N());
    for (int it = 0; it < 4; ++it) {
      StemFunction F = random_stem(rng, T, B);
      CliffordPoly f = induced_poly(F);
      CHECK(extract_stem(f, T, B) == F);
      CHECK(extract_stem(f, T, B, random_torus(T, B, rng.raw())) == F);
      CHECK(is_t_function(f, T, B));
    }
  }
}

TEST_CASE("plain coordinates are generally not T-functions") {
  StepList T({0, 3, 6});
  auto B = HypercomplexBasis::paravector(6);
  VarSpace X = x_space(T);
  CHECK(is_t_function(CliffordPoly::variable(X, B.sig(), 0), T, B));
  CHECK(!is_t_function(CliffordPoly::variable(X, B.sig(), 1), T, B));
  CHECK(is_t_function(block_linear(X, T, B, 1), T, B));
  CHECK(is_t_function(block_norm2(X, T, B.sig(), 2), T, B));
  CHECK(!is_t_function(CliffordPoly::variable(X, B.sig(), 4) * block_linear(X, T, B, 1), T, B));
}

TEST_CASE("worked example: coarsened Laplacians") {
  StepList T({0, 3, 6});
  auto B = HypercomplexBasis::paravector(6);
  StemFunction F = worked_stem();
  VarSpace X = x_space(T);
  CliffordPoly x0 = CliffordPoly::variable(X, B.sig(), 0);
  CliffordPoly X2 = block_linear(X, T, B, 2);
  CliffordPoly want = -(x0.scale(12) + X2.scale(12));
  StemFunction L1 = delta_T_sigma(F, 1);
  StemFunction L2 = delta_T_sigma(F, 2);
  CHECK(L1.is_polynomial());
  CHECK(induced_poly(L1) == want);
  // Coarsening all the way to the classical Laplacian gives the same value
  // here.
  CHECK(induced_poly(L2) == want);
  // The iterate vanishes: the gap t1 - t0 = 3 allows a single step only.
  CHECK(delta_T_sigma(L1, 1).is_zero());
  CHECK_THROWS_AS(delta_T_sigma(F, 3), StemError);
  CHECK_THROWS_AS(delta_T_sigma(F, 0), StemError);
}

TEST_CASE("worked example: coarsened Cauchy-Riemann operator") {
  StepList T({0, 3, 6});
  auto B = HypercomplexBasis::paravector(6);
  StemFunction F = worked_stem();
  VarSpace X = x_space(T);
  CliffordPoly x0 = CliffordPoly::variable(X, B.sig(), 0);
  CliffordPoly X2 = block_linear(X, T, B, 2);
  StemFunction g = dbar_tilde_correction(F);
  CHECK(induced_poly(g) == x0.scale(6) * X2);
  CHECK(induced_poly(dbar_T_tilde(F)) == -(x0.scale(12) * X2));
  // d over the coarsened steps differs from d_T by the opposite multiple.
  CHECK(d_T_tilde(F) == d_T(F) + g.scale(Rational(2)));
}

TEST_CASE("coefficient table values and recurrences") {
  CHECK(bessel_b(-1, -1) == 1);
  CHECK(bessel_b(0, -1) == 0);
  CHECK(bessel_b(0, 0) == 1);
  CHECK(bessel_b(1, 0) == -1);
  CHECK(bessel_b(1, 1) == 1);
  CHECK(bessel_b(2, 0) == 3);
  CHECK(bessel_b(2, 1) == -3);
  CHECK(bessel_b(2, 2) == 1);
  CHECK(bessel_b(3, 0) == -15);
  CHECK(bessel_b(3, 1) == 15);
  CHECK(bessel_b(3, 2) == -6);
  CHECK(bessel_b(3, 3) == 1);
  CHECK_THROWS_AS(bessel_b(2, 3), StemError);
  CHECK_THROWS_AS(bessel_b(-2, -1), StemError);
  for (int n = 0; n <= 8; ++n) {
    CHECK(bessel_b(n, n) == 1);
    for (int ell = 0; ell <= n; ++ell) {
      CHECK(bessel_b(n + 1, ell) == (ell - 2 * n - 1) * bessel_b(n, ell) + bessel_b(n, ell - 1));
      CHECK(ell * (ell - 2 * n - 1) * bessel_b(n, ell) +
                2 * (ell - n - 1) * bessel_b(n, ell - 1) ==
            0);
      if (ell <= n - 1)
        CHECK(bessel_b(n - 1, ell - 1) == bessel_b(n, ell) + (ell + 1) * bessel_b(n, ell + 1));
    }
  }
}

TEST_CASE("radial expansion matches the coarsened Laplacian on the worked example") {
  StepList T({0, 3, 6});
  StemFunction F = worked_stem();
  CHECK(iterate_scale(T, 0) == 1);
  CHECK(iterate_scale(T, 1) == 2);
  CHECK(iterate_scale(T, 2) == 0);
  CHECK(f_power(F, 0) == F);
  StemFunction F1 = f_power(F, 1);
  CHECK(F1.is_polynomial());
  CHECK(F1.scale(iterate_scale(T, 1)) == delta_T_sigma(F, 1));
  // Beyond the critical power everything is scaled by zero.
  CHECK(delta_T_sigma(delta_T_sigma(F, 1), 1).is_zero());
}

TEST_CASE("radial expansion requires a harmonic stem") {
  Rng rng(47);
  StepList T({0, 3, 6});
  auto B = HypercomplexBasis::paravector(6);
  StemFunction F = random_stem(rng, T, B);
  REQUIRE(!delta_T(F).is_zero());
  CHECK_THROWS_AS(f_power(F, 1), StemError);
}

TEST_CASE("coarsening guards") {
  StepList flat({6});
  auto B = HypercomplexBasis::paravector(6);
  StemFunction F(flat, B);
  CHECK_THROWS_AS(tilde(F), StemError);
  CHECK_THROWS_AS(multitilde(F, 1), StemError);
  CHECK(multitilde(F, 0) == F);
  CHECK(induced_poly(F).is_zero());
}
