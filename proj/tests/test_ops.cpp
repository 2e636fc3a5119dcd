#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "treg/ops.hpp"
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

CliffordPoly worked_poly() { return induced_poly(worked_stem()); }

}  // namespace

TEST_CASE("slice restriction substitutes block coordinates") {
  StepList T({0, 3, 6});
  auto B = HypercomplexBasis::paravector(6);
  VarSpace X = x_space(T);
  VarSpace S = stem_space(T);
  Signature sig = B.sig();

  TorusPoint J{{B.v(1), B.v(4)}};
  CliffordPoly f = worked_poly();
  SlicePoly r = slice_restrict(f, T, B, J);

  // On the slice the function is the sum of torus blades times components.
  StemFunction F = worked_stem();
  CliffordPoly want = F.component(0b00) + F.component(0b10).scale_left(B.v(4)) +
                      F.component(0b11).scale_left(B.v(1) * B.v(4));
  CHECK(r.poly == want);

  CHECK(slice_restrict(CliffordPoly::constant(X, Multivector::generator(sig, 3)), T, B, J).poly ==
        CliffordPoly::constant(S, Multivector::generator(sig, 3)));
  CHECK(slice_restrict(CliffordPoly::variable(X, sig, 0), T, B, J).poly ==
        CliffordPoly::variable(S, sig, 0));
}

TEST_CASE("slice operators annihilate restrictions of the worked example") {
  StepList T({0, 3, 6});
  auto B = HypercomplexBasis::paravector(6);
  CliffordPoly f = worked_poly();
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    SlicePoly r = slice_restrict(f, T, B, random_torus(T, B, seed));
    CHECK(dbar_J(r, T, B).is_zero());
    CHECK(delta_J(r, T, B).is_zero());
    CHECK(!d_J(r, T, B).is_zero());
  }
}

TEST_CASE("slice operators factor the slice Laplacian") {
  Rng rng(57);
  for (auto steps : {std::vector<int>{0, 3, 6}, {1, 3, 5}, {2, 4}}) {
    StepList T(steps);
    auto B = HypercomplexBasis::paravector(T.N());
    for (int it = 0; it < 4; ++it) {
      SlicePoly phi{random_poly(rng, stem_space(T), B.sig()), random_torus(T, B, rng.raw())};
      CliffordPoly lap = delta_J(phi, T, B);
      SlicePoly db{dbar_J(phi, T, B), phi.J};
      SlicePoly d{d_J(phi, T, B), phi.J};
      CHECK(d_J(db, T, B) == lap);
      CHECK(dbar_J(d, T, B) == lap);
    }
  }
}

TEST_CASE("coordinate-level operator values") {
  StepList T({0, 3, 6});
  StepList T1({3, 6});
  StepList T2({6});
  auto B = HypercomplexBasis::paravector(6);
  VarSpace X = x_space(T);
  Signature sig = B.sig();
  CliffordPoly f = worked_poly();
  CliffordPoly x0 = CliffordPoly::variable(X, sig, 0);
  CliffordPoly X2 = block_linear(X, T, B, 2);
  CliffordPoly one = CliffordPoly::constant(X, Multivector::scalar(sig, Rational(1)));

  RationalForm db = dbar_T_x(f, T, B);
  CHECK(db.is_polynomial());
  CHECK(db.num.is_zero());

  RationalForm db1 = dbar_T_x(f, T1, B);
  CHECK(db1.is_polynomial());
  CHECK(db1.num == -(x0.scale(12) * X2));

  CHECK(dbar_T_x(x0, T, B).num == one);
  CHECK(dbar_T_x(x0, T1, B).num == one);

  CHECK(delta_T_x(f, T, B).num.is_zero());
  CliffordPoly want = -(x0.scale(12) + X2.scale(12));
  RationalForm l1 = delta_T_x(f, T1, B);
  RationalForm l2 = delta_T_x(f, T2, B);
  CHECK(l1.is_polynomial());
  CHECK(l1.num == want);
  CHECK(l2.is_polynomial());
  CHECK(l2.num == want);
}

TEST_CASE("kernel predicates") {
  StepList T({0, 3, 6});
  StepList T1({3, 6});
  auto B = HypercomplexBasis::paravector(6);
  VarSpace X = x_space(T);
  Signature sig = B.sig();
  CliffordPoly f = worked_poly();

  CHECK(is_T_regular(f, T, B));
  CHECK(is_T_harmonic(f, T, B));
  CHECK(!is_T_regular(f, T1, B));
  CHECK(!is_T_harmonic(f, T1, B));

  CliffordPoly c = CliffordPoly::constant(X, Multivector::blade(sig, 0b11, rat(-2, 7)));
  CHECK(is_T_regular(c, T, B));
  CHECK(is_T_harmonic(c, T1, B));

  // The degree-one family members are in the kernel, bare coordinates are not.
  CliffordPoly X1 = block_linear(X, T, B, 1);
  CliffordPoly X2 = block_linear(X, T, B, 2);
  CHECK(is_T_regular(CliffordPoly::variable(X, sig, 0) + X1, T, B));
  CHECK(is_T_regular(CliffordPoly::variable(X, sig, 0) + X2, T, B));
  CHECK(!is_T_regular(CliffordPoly::variable(X, sig, 0), T, B));
  CHECK(!is_T_regular(X1, T, B));
  CHECK(is_T_harmonic(X1, T, B));
}

TEST_CASE("coordinate pipeline agrees with the stem pipeline") {
  Rng rng(61);
  for (auto steps : {std::vector<int>{0, 3, 6}, {1, 4, 7}, {0, 2, 4, 6}}) {
    StepList T(steps);
    auto B = T.N() == 7 ? HypercomplexBasis::w_h(6, 6) : HypercomplexBasis::paravector(T.N());
    for (int it = 0; it < 3; ++it) {
      StemFunction F = random_stem(rng, T, B);
      CliffordPoly f = induced_poly(F);

      RationalForm db = dbar_T_x(f, T, B);
      REQUIRE(db.is_polynomial());
      CHECK(db.num == induced_poly(dbar_T(F)));

      RationalForm d = d_T_x(f, T, B);
      REQUIRE(d.is_polynomial());
      CHECK(d.num == induced_poly(d_T(F)));

      RationalForm lap = delta_T_x(f, T, B);
      REQUIRE(lap.is_polynomial());
      CHECK(lap.num == induced_poly(delta_T(F)));

      for (int sigma = 1; sigma <= T.tau(); ++sigma) {
        RationalForm ls = delta_T_x(f, T.suffix(sigma), B);
        REQUIRE(ls.is_polynomial());
        CHECK(ls.num == induced_poly(delta_T_sigma(F, sigma)));
      }

      RationalForm dbt = dbar_T_x(f, T.suffix(1), B);
      REQUIRE(dbt.is_polynomial());
      CHECK(dbt.num == induced_poly(dbar_T_tilde(F)));
      RationalForm dt = d_T_x(f, T.suffix(1), B);
      REQUIRE(dt.is_polynomial());
      CHECK(dt.num == induced_poly(d_T_tilde(F)));
    }
  }
}

TEST_CASE("operators commute with slice restriction") {
  Rng rng(67);
  StepList T({0, 3, 6});
  auto B = HypercomplexBasis::paravector(6);
  for (int it = 0; it < 3; ++it) {
    StemFunction F = random_stem(rng, T, B);
    CliffordPoly f = induced_poly(F);
    RationalForm db = dbar_T_x(f, T, B);
    RationalForm d = d_T_x(f, T, B);
    RationalForm lap = delta_T_x(f, T, B);
    REQUIRE(db.is_polynomial());
    REQUIRE(d.is_polynomial());
    REQUIRE(lap.is_polynomial());
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      TorusPoint J = random_torus(T, B, rng.raw());
      SlicePoly r = slice_restrict(f, T, B, J);
      CHECK(slice_restrict(db.num, T, B, J).poly == dbar_J(r, T, B));
      CHECK(slice_restrict(d.num, T, B, J).poly == d_J(r, T, B));
      CHECK(slice_restrict(lap.num, T, B, J).poly == delta_J(r, T, B));
    }
  }
}

TEST_CASE("leading unit steps collapse into the mirror block") {
  Rng rng(71);
  for (auto [longer, shorter] :
       {std::pair<std::vector<int>, std::vector<int>>{{1, 2, 3}, {3}},
        {{0, 1, 2, 3}, {3}},
        {{1, 2, 4}, {2, 4}}}) {
    StepList Tl(longer);
    StepList Ts(shorter);
    auto B = HypercomplexBasis::paravector(Tl.N());
    for (int it = 0; it < 4; ++it) {
      CliffordPoly f = random_poly(rng, x_space(Tl), B.sig());
      CHECK(equal_forms(dbar_T_x(f, Tl, B), Tl, dbar_T_x(f, Ts, B), Ts, B));
      CHECK(equal_forms(delta_T_x(f, Tl, B), Tl, delta_T_x(f, Ts, B), Ts, B));
    }
  }
}

TEST_CASE("reduction cancels exactly what it reports") {
  Rng rng(73);
  StepList T({0, 3, 6});
  auto B = HypercomplexBasis::paravector(6);
  VarSpace X = x_space(T);
  Signature sig = B.sig();
  for (int it = 0; it < 4; ++it) {
    CliffordPoly f = random_poly(rng, X, sig);

    // Independent multiply-through numerator for the Laplacian.
    CliffordPoly q1 = block_norm2(X, T, sig, 1);
    CliffordPoly q2 = block_norm2(X, T, sig, 2);
    CliffordPoly raw = f.ddx(0).ddx(0) * q1 * q2;
    for (int u = 1; u <= 2; ++u) {
      CliffordPoly second(X, sig);
      for (int s = T.block_lo(u); s <= T.block_hi(u); ++s)
        for (int s2 = T.block_lo(u); s2 <= T.block_hi(u); ++s2)
          second = second + f.ddx(s).ddx(s2).mul_var_power(s, 1).mul_var_power(s2, 1);
      raw = raw + second * (u == 1 ? q2 : q1);
    }

    RationalForm r = delta_T_x(f, T, B);
    CliffordPoly back = r.num;
    for (int i = r.den[0]; i < 1; ++i) back = back * q1;
    for (int i = r.den[1]; i < 1; ++i) back = back * q2;
    CHECK(back == raw);
    CHECK(equal_forms(r, T, RationalForm{raw, {1, 1}}, T, B));
  }
}

TEST_CASE("input validation") {
  StepList T({0, 3, 6});
  auto B = HypercomplexBasis::paravector(6);
  CliffordPoly wrong_vars(stem_space(T), B.sig());
  CHECK_THROWS_AS(dbar_T_x(wrong_vars, T, B), OpsError);
  CliffordPoly wrong_sig(x_space(T), Signature{1, 5});
  CHECK_THROWS_AS(delta_T_x(wrong_sig, T, B), OpsError);
  CHECK_THROWS_AS(slice_restrict(wrong_vars, T, B, default_torus(T, B)), OpsError);
  StepList T2({0, 2});
  auto B2 = HypercomplexBasis::paravector(2);
  CliffordPoly xpoly(x_space(T2), B2.sig());
  SlicePoly phi{xpoly, default_torus(T, B)};
  CHECK_THROWS_AS(dbar_J(phi, T2, B2), OpsError);
}
