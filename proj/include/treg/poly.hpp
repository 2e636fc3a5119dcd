#pragma once

#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "treg/algebra.hpp"

namespace treg {

struct PolyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Variables are real-valued and commute with everything; roles gate which
// operations are allowed (only Beta variables may carry negative exponents,
// standing in for radial block norms that stay away from zero).
enum class VarRole { X, Alpha, Beta };

class VarSpace {
 public:
  static VarSpace make(std::vector<std::string> names, std::vector<VarRole> roles);

  int size() const { return static_cast<int>(d_->names.size()); }
  const std::string& name(int i) const { return d_->names.at(i); }
  VarRole role(int i) const { return d_->roles.at(i); }
  // Index of a name, -1 when absent.
  int index_of(const std::string& name) const;

  bool operator==(const VarSpace& o) const {
    return d_ == o.d_ || (d_->names == o.d_->names && d_->roles == o.d_->roles);
  }

 private:
  struct Data {
    std::vector<std::string> names;
    std::vector<VarRole> roles;
  };
  explicit VarSpace(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

// Exponent vector, one entry per variable of the space. Entries may be
// negative on Beta variables.
using Exp = std::vector<int>;

inline int total_degree(const Exp& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Graded order: total degree first, ties broken by the exponent of the
// highest-indexed variable where the monomials differ. The leading term of
// a sum of squares over a block is then the square of its last variable.
struct MonLess {
  bool operator()(const Exp& a, const Exp& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

// Polynomial (or Laurent polynomial in the Beta variables) with Clifford
// coefficients. Coefficients need not commute with each other; the
// variables commute with everything. In a stored term the coefficient
// multiplies the monomial from the right.
class CliffordPoly {
 public:
  CliffordPoly(VarSpace vars, Signature sig) : vars_(std::move(vars)), sig_(sig) {}

  static CliffordPoly constant(const VarSpace& vars, const Multivector& c);
  static CliffordPoly variable(const VarSpace& vars, Signature sig, int var);

  const VarSpace& vars() const { return vars_; }
  const Signature& sig() const { return sig_; }
  const std::map<Exp, Multivector, MonLess>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  // True when every coefficient is a real scalar.
  bool is_real() const;
  bool is_polynomial() const;
  Multivector coefficient(const Exp& e) const;
  // Largest term in the monomial order; throws on the zero polynomial.
  const std::pair<const Exp, Multivector>& leading() const;
  // Sum of exponents, maximised over terms; 0 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  CliffordPoly& add_term(const Exp& e, const Multivector& c);

  CliffordPoly operator-() const;
  CliffordPoly operator+(const CliffordPoly& o) const;
  CliffordPoly operator-(const CliffordPoly& o) const;
  CliffordPoly operator*(const CliffordPoly& o) const;
  CliffordPoly scale(const Rational& c) const;
  // x * p and p * x for a constant x: the two differ because coefficients
  // do not commute.
  CliffordPoly scale_left(const Multivector& x) const;
  CliffordPoly scale_right(const Multivector& x) const;
  CliffordPoly pow(int n) const;

  // Formal partial derivative; acts on negative exponents as well.
  CliffordPoly ddx(int var) const;
  // Multiply by var^power. Negative powers require a Beta variable.
  CliffordPoly mul_var_power(int var, int power) const;

  // Value at a rational point. Negative exponents need a nonzero entry.
  Multivector eval(const std::vector<Rational>& point) const;

  bool operator==(const CliffordPoly& o) const;
  bool operator!=(const CliffordPoly& o) const { return !(*this == o); }

 private:
  VarSpace vars_;
  Signature sig_;
  std::map<Exp, Multivector, MonLess> terms_;
};

// Simultaneous substitution x_i -> images[i] into a polynomial (no negative
// exponents). Every image must live on `target` and have real coefficients,
// so that the substituted monomials stay unambiguous.
CliffordPoly compose(const CliffordPoly& p, const VarSpace& target,
                     const std::vector<CliffordPoly>& images);

// Pure re-indexing of variables: var i of p becomes var index_map[i] of
// target. Injective on the variables that occur; keeps Laurent exponents
// (negative ones need a Beta variable on the target side).
CliffordPoly rename(const CliffordPoly& p, const VarSpace& target,
                    const std::vector<int>& index_map);

// Rewrite p as a polynomial in var^2: exponent 2j becomes j. Throws when
// any exponent of var is odd or negative.
CliffordPoly push_square(const CliffordPoly& p, int var);

// Division with remainder by a divisor with real coefficients, single
// divisor Groebner-style reduction: p = q * d + r and no monomial of r is
// divisible by the leading monomial of d. Exact multiples give r = 0.
struct DivisionResult {
  CliffordPoly quotient;
  CliffordPoly remainder;
};
DivisionResult divide(const CliffordPoly& p, const CliffordPoly& d);

}  // namespace treg
