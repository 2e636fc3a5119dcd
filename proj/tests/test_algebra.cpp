#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "treg/algebra.hpp"

using namespace treg;

namespace {

// Reference product: expand both blades into generator sequences, bubble-sort
// the concatenation with one sign flip per transposition, contract equal
// neighbours with the signature sign.
std::pair<int, BladeMask> bubble_product(BladeMask a, BladeMask b, Signature sig) {
  std::vector<int> gens = blade_indices(a);
  for (int i : blade_indices(b)) gens.push_back(i);
  int sign = 1;
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t i = 0; i + 1 < gens.size(); ++i) {
      if (gens[i] > gens[i + 1]) {
        std::swap(gens[i], gens[i + 1]);
        sign = -sign;
        moved = true;
      }
    }
  }
  std::vector<int> reduced;
  for (size_t i = 0; i < gens.size();) {
    if (i + 1 < gens.size() && gens[i] == gens[i + 1]) {
      if (gens[i] > sig.p) sign = -sign;
      i += 2;
    } else {
      reduced.push_back(gens[i]);
      ++i;
    }
  }
  return {sign, blade_from_indices(reduced, sig.m())};
}

Multivector random_mv(Signature sig, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-6, 6);
  std::uniform_int_distribution<int> den(1, 3);
  Multivector x(sig);
  for (BladeMask k = 0; k < (BladeMask{1} << sig.m()); ++k)
    x.add_term(k, rat(coeff(rng), den(rng)));
  return x;
}

}  // namespace

TEST_CASE("signature construction bounds") {
  CHECK(make_signature(0, 3).m() == 3);
  CHECK(make_signature(2, 2).p == 2);
  CHECK_THROWS_AS(make_signature(-1, 2), AlgebraError);
  CHECK_THROWS_AS(make_signature(9, 8), AlgebraError);
}

TEST_CASE("blade index encoding roundtrip") {
  CHECK(blade_indices(0).empty());
  CHECK(blade_indices(0b101) == std::vector<int>{1, 3});
  CHECK(blade_from_indices({1, 3}, 4) == 0b101u);
  CHECK(blade_from_indices({}, 4) == 0u);
  CHECK_THROWS_AS(blade_from_indices({5}, 4), AlgebraError);
  CHECK_THROWS_AS(blade_from_indices({2, 2}, 4), AlgebraError);
}

TEST_CASE("blade product sign matches the bubble-sort reducer on every pair, m <= 5") {
  for (int p = 0; p <= 5; ++p) {
    for (int q = 0; p + q <= 5; ++q) {
      Signature sig = make_signature(p, q);
      for (BladeMask a = 0; a < (BladeMask{1} << sig.m()); ++a) {
        for (BladeMask b = 0; b < (BladeMask{1} << sig.m()); ++b) {
          auto [sign, mask] = bubble_product(a, b, sig);
          CHECK(mask == (a ^ b));
          CHECK(blade_product_sign(a, b, sig) == sign);
        }
      }
    }
  }
}

TEST_CASE("generator squares follow the signature") {
  Signature sig = make_signature(1, 2);
  Multivector one = Multivector::scalar(sig, Rational(1));
  CHECK(Multivector::generator(sig, 1) * Multivector::generator(sig, 1) == one);
  CHECK(Multivector::generator(sig, 2) * Multivector::generator(sig, 2) == -one);
  CHECK(Multivector::generator(sig, 3) * Multivector::generator(sig, 3) == -one);
  CHECK_THROWS_AS(Multivector::generator(sig, 4), AlgebraError);
  CHECK_THROWS_AS(Multivector::generator(sig, 0), AlgebraError);
}

TEST_CASE("bivector and volume squares in Cl(0,3)") {
  Signature sig = make_signature(0, 3);
  Multivector one = Multivector::scalar(sig, Rational(1));
  Multivector e12 = Multivector::blade(sig, 0b011);
  Multivector e123 = Multivector::blade(sig, 0b111);
  CHECK(e12 * e12 == -one);
  CHECK(e123 * e123 == one);
  // (1 + e123)(1 - e123) = 0: the algebra has zero divisors.
  CHECK(((one + e123) * (one - e123)).is_zero());
}

TEST_CASE("multiplication is associative on random triples, m <= 6") {
  std::mt19937_64 rng(7);
  for (int m = 0; m <= 6; ++m) {
    for (int p = 0; p <= m; p += m == 0 ? 1 : m) {
      Signature sig = make_signature(p, m - p);
      for (int it = 0; it < 8; ++it) {
        Multivector x = random_mv(sig, rng);
        Multivector y = random_mv(sig, rng);
        Multivector z = random_mv(sig, rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((y + z) * x == y * x + z * x);
      }
    }
  }
}

TEST_CASE("multiplication is not commutative") {
  Signature sig = make_signature(0, 2);
  Multivector e1 = Multivector::generator(sig, 1);
  Multivector e2 = Multivector::generator(sig, 2);
  CHECK(e1 * e2 == -(e2 * e1));
  CHECK(e1 * e2 != e2 * e1);
}

TEST_CASE("term bookkeeping prunes zeros and validates masks") {
  Signature sig = make_signature(0, 2);
  Multivector x(sig);
  x.add_term(0b01, rat(1, 2));
  x.add_term(0b01, rat(-1, 2));
  CHECK(x.is_zero());
  x.add_term(0, Rational(3));
  CHECK(x.is_real());
  CHECK(x.as_rational() == Rational(3));
  x.add_term(0b10, Rational(1));
  CHECK(!x.is_real());
  CHECK(x.as_rational() == std::nullopt);
  CHECK(x.coefficient(0b10) == 1);
  CHECK(x.coefficient(0b11) == 0);
  CHECK_THROWS_AS(x.add_term(0b100, Rational(1)), AlgebraError);
}

TEST_CASE("conjugation signs by grade: + - - + + - - +") {
  int expect[8] = {1, -1, -1, 1, 1, -1, -1, 1};
  for (int g = 0; g <= 7; ++g) {
    BladeMask k = (BladeMask{1} << g) - 1;
    CHECK(conj_sign(k) == expect[g]);
  }
}

TEST_CASE("conjugation is an involutive anti-automorphism") {
  std::mt19937_64 rng(11);
  for (int m = 0; m <= 5; ++m) {
    Signature sig = make_signature(0, m);
    for (int it = 0; it < 10; ++it) {
      Multivector x = random_mv(sig, rng);
      Multivector y = random_mv(sig, rng);
      CHECK(conj(conj(x)) == x);
      CHECK(conj(x * y) == conj(y) * conj(x));
      CHECK(conj(x + y) == conj(x) + conj(y));
    }
  }
}

TEST_CASE("trace and square norm of paravector-like elements are real") {
  Signature sig = make_signature(0, 3);
  Multivector x = Multivector::scalar(sig, rat(3, 2)) +
                  Multivector::generator(sig, 1).scale(Rational(2)) +
                  Multivector::generator(sig, 3).scale(rat(-1, 2));
  CHECK(trace(x) == Multivector::scalar(sig, Rational(3)));
  // n(x) = x0^2 + |vector part|^2 = 9/4 + 4 + 1/4 = 13/2.
  CHECK(norm_n(x) == Multivector::scalar(sig, rat(13, 2)));
  CHECK(in_quadratic_cone(x));
}

TEST_CASE("imaginary unit predicate") {
  Signature sig = make_signature(1, 2);
  CHECK(is_imaginary_unit(Multivector::generator(sig, 2)));
  CHECK(is_imaginary_unit(Multivector::generator(sig, 3)));
  // e1^2 = +1 here, so it is not an imaginary unit.
  CHECK(!is_imaginary_unit(Multivector::generator(sig, 1)));
  Signature s03 = make_signature(0, 3);
  CHECK(is_imaginary_unit(Multivector::blade(s03, 0b011)));
  CHECK(!is_imaginary_unit(Multivector::blade(s03, 0b111)));
  // (3/5) e1 + (4/5) e2 is a rational point of the sphere of units.
  Multivector u = Multivector::generator(s03, 1).scale(rat(3, 5)) +
                  Multivector::generator(s03, 2).scale(rat(4, 5));
  CHECK(is_imaginary_unit(u));
  CHECK(!is_imaginary_unit(u.scale(Rational(2))));
}

TEST_CASE("quadratic cone membership") {
  Signature sig = make_signature(0, 3);
  CHECK(in_quadratic_cone(Multivector::scalar(sig, rat(-7, 3))));
  CHECK(in_quadratic_cone(Multivector::zero(sig)));
  Multivector para = Multivector::scalar(sig, Rational(5)) + Multivector::generator(sig, 2);
  CHECK(in_quadratic_cone(para));
  CHECK(in_quadratic_cone(Multivector::blade(sig, 0b011)));
  // 1 + e123 has non-real trace, since conj fixes grade 3: outside.
  CHECK(!in_quadratic_cone(Multivector::scalar(sig, Rational(1)) + Multivector::blade(sig, 0b111)));
  // e1 + e23 has non-real n(x): outside.
  CHECK(!in_quadratic_cone(Multivector::generator(sig, 1) + Multivector::blade(sig, 0b110)));
}

TEST_CASE("scalar product is the blade-coordinate dot product") {
  Signature sig = make_signature(0, 3);
  Multivector x = Multivector::scalar(sig, Rational(2)) + Multivector::generator(sig, 1).scale(rat(1, 2)) +
                  Multivector::blade(sig, 0b110, Rational(3));
  Multivector y = Multivector::scalar(sig, Rational(1)) + Multivector::generator(sig, 1).scale(Rational(4)) +
                  Multivector::blade(sig, 0b011, Rational(9));
  CHECK(scalar_product(x, y) == Rational(4));
  CHECK(norm2(x) == rat(4 * 4 + 1 + 9 * 4, 4));
  CHECK(scalar_product(x, y) == scalar_product(y, x));
}

TEST_CASE("scalar product agrees with t(x conj(y))/2 on paravector spans") {
  std::mt19937_64 rng(13);
  Signature sig = make_signature(0, 4);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int it = 0; it < 20; ++it) {
    Multivector x(sig), y(sig);
    x.add_term(0, Rational(coeff(rng)));
    y.add_term(0, Rational(coeff(rng)));
    for (int k = 1; k <= 4; ++k) {
      x.add_term(BladeMask{1} << (k - 1), Rational(coeff(rng)));
      y.add_term(BladeMask{1} << (k - 1), Rational(coeff(rng)));
    }
    Multivector t = trace(x * conj(y));
    REQUIRE(t.is_real());
    CHECK(scalar_product(x, y) == t.scalar_part() / 2);
  }
}

TEST_CASE("norm multiplicativity can fail off the cone but holds on paravectors") {
  Signature sig = make_signature(0, 3);
  Multivector x = Multivector::scalar(sig, Rational(1)) + Multivector::generator(sig, 1);
  Multivector y = Multivector::scalar(sig, Rational(2)) + Multivector::generator(sig, 3).scale(Rational(3));
  CHECK(norm_n(x * y) == norm_n(x) * norm_n(y));
  // Off the cone n(x) need not even be real: conj fixes grade 3.
  Multivector bad = Multivector::scalar(sig, Rational(1)) + Multivector::blade(sig, 0b111);
  CHECK(norm_n(bad) == Multivector::scalar(sig, Rational(2)) + Multivector::blade(sig, 0b111, Rational(2)));
}

TEST_CASE("mixed-signature operations are rejected") {
  Multivector a = Multivector::scalar(make_signature(0, 2), Rational(1));
  Multivector b = Multivector::scalar(make_signature(0, 3), Rational(1));
  CHECK_THROWS_AS(a + b, AlgebraError);
  CHECK_THROWS_AS(a * b, AlgebraError);
  CHECK_THROWS_AS(scalar_product(a, b), AlgebraError);
}
