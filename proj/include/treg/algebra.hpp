#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "treg/rational.hpp"

namespace treg {

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Real Clifford algebra Cl(p,q): generators e_1..e_p square to +1,
// e_{p+1}..e_{p+q} square to -1, distinct generators anticommute.
struct Signature {
  int p = 0;
  int q = 0;
  int m() const { return p + q; }
  bool operator==(const Signature& o) const = default;
};

// A blade e_K is encoded as an m-bit mask: generator k <-> bit k-1.
// The empty mask is the unit e_0 = 1.
using BladeMask = std::uint32_t;

inline constexpr int kMaxGenerators = 16;

Signature make_signature(int p, int q);

// Ascending 1-based generator indices of a mask.
std::vector<int> blade_indices(BladeMask k);
BladeMask blade_from_indices(const std::vector<int>& indices, int m);

// Sign of e_A * e_B (the product blade is A xor B): counts the generator
// transpositions needed to sort the concatenation, then one signature sign
// per shared generator.
int blade_product_sign(BladeMask a, BladeMask b, const Signature& sig);

// Sign of the *-involution on e_K: +1 when |K| = 0,3 (mod 4), else -1.
int conj_sign(BladeMask k);

class Multivector {
 public:
  Multivector() : sig_{0, 0} {}
  explicit Multivector(Signature sig) : sig_(sig) {}

  static Multivector zero(Signature sig) { return Multivector(sig); }
  static Multivector scalar(Signature sig, const Rational& c);
  static Multivector blade(Signature sig, BladeMask k, const Rational& c = Rational(1));
  // e_k for a single generator k in 1..m.
  static Multivector generator(Signature sig, int k);

  const Signature& sig() const { return sig_; }
  // Invariant: no stored coefficient is zero, all masks fit the signature.
  const std::map<BladeMask, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_real() const;
  Rational coefficient(BladeMask k) const;
  Rational scalar_part() const { return coefficient(0); }
  // The value as a rational if the element is real, nullopt otherwise.
  std::optional<Rational> as_rational() const;

  Multivector& add_term(BladeMask k, const Rational& c);

  Multivector operator-() const;
  Multivector operator+(const Multivector& o) const;
  Multivector operator-(const Multivector& o) const;
  Multivector operator*(const Multivector& o) const;
  Multivector scale(const Rational& c) const;

  bool operator==(const Multivector& o) const = default;

 private:
  Signature sig_;
  std::map<BladeMask, Rational> terms_;
};

Multivector conj(const Multivector& x);
// t(x) = x + conj(x) and n(x) = x * conj(x).
Multivector trace(const Multivector& x);
Multivector norm_n(const Multivector& x);

// Imaginary units: t(x) = 0 and n(x) = 1.
bool is_imaginary_unit(const Multivector& x);
// Quadratic cone: x real, or t(x) and n(x) real with 4 n(x) > t(x)^2.
bool in_quadratic_cone(const Multivector& x);

// Euclidean product in the coordinates of the canonical blade basis.
// For x, y in a hypercomplex subspace this equals t(x * conj(y)) / 2.
Rational scalar_product(const Multivector& x, const Multivector& y);
Rational norm2(const Multivector& x);

}  // namespace treg
