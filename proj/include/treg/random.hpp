#pragma once

#include <cstdint>
#include <random>

#include "treg/hypercomplex.hpp"
#include "treg/poly.hpp"
#include "treg/stem.hpp"

namespace treg {

// Deterministic generators for property checks. Everything is rational, so
// generated objects satisfy their structural invariants exactly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  Rational rational(int max_num = 5, int max_den = 3) {
    return rat(uniform(-max_num, max_num), uniform(1, max_den));
  }
  std::uint64_t raw() { return eng_(); }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

// A multivector with a handful of random blades.
Multivector random_multivector(Rng& rng, Signature sig, int terms = 3);

// A polynomial on the given space with bounded degree and term count.
CliffordPoly random_poly(Rng& rng, const VarSpace& vars, Signature sig, int max_deg = 3,
                         int terms = 5);

// A stem function with valid component parities: b_h exponents are odd in
// component K exactly when h is in K.
StemFunction random_stem(Rng& rng, const StepList& T, const HypercomplexBasis& B,
                         int max_half_deg = 1, int terms = 3);

}  // namespace treg
