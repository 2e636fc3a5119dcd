#pragma once

#include <map>
#include <utility>

#include "treg/blocks.hpp"
#include "treg/hypercomplex.hpp"
#include "treg/poly.hpp"

namespace treg {

struct StemError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A stem function F = sum_K E_K F_K with components indexed by subsets K of
// {1..tau}. Each component is a polynomial (possibly Laurent in the radial
// variables) on the mirror coordinates a_0..a_{t0} and the radial variables
// b_1..b_tau, subject to the parity invariant: the b_h-degree of every
// monomial of F_K is odd exactly when h lies in K. Components equal to zero
// are not stored.
class StemFunction {
 public:
  StemFunction(StepList T, HypercomplexBasis B);

  const StepList& steps() const { return T_; }
  const HypercomplexBasis& basis() const { return B_; }
  Signature sig() const { return B_.sig(); }
  const VarSpace& vars() const { return vars_; }
  int tau() const { return T_.tau(); }

  CliffordPoly component(SubsetMask K) const;
  const std::map<SubsetMask, CliffordPoly>& components() const { return comp_; }
  StemFunction& set_component(SubsetMask K, const CliffordPoly& F);

  bool is_zero() const { return comp_.empty(); }
  // True when no component carries a negative radial exponent.
  bool is_polynomial() const;

  StemFunction operator+(const StemFunction& o) const;
  StemFunction operator-(const StemFunction& o) const;
  StemFunction operator-() const;
  StemFunction scale(const Rational& c) const;

  bool operator==(const StemFunction& o) const;
  bool operator!=(const StemFunction& o) const { return !(*this == o); }

 private:
  StepList T_;
  HypercomplexBasis B_;
  VarSpace vars_;
  std::map<SubsetMask, CliffordPoly> comp_;
};

// First-order mirror operator with alternating sign: the derivative along
// a_0 minus (-1)^u times the unit-weighted derivatives along a_1..a_{t0}.
CliffordPoly dbar_alpha_pow(const CliffordPoly& P, const StepList& T, const HypercomplexBasis& B,
                            int u);

// Cauchy-Riemann, conjugated Cauchy-Riemann and Laplace operators on stem
// functions. They factor: delta_T = d_T(dbar_T) = dbar_T(d_T).
StemFunction dbar_T(const StemFunction& F);
StemFunction d_T(const StemFunction& F);
StemFunction delta_T(const StemFunction& F);

// The kernel of dbar_T: stems inducing strongly regular functions.
bool is_strongly_regular_stem(const StemFunction& F);
bool is_harmonic_stem(const StemFunction& F);

// Laplacian of the coarsened step list T_sigma applied to a T-stem: the
// plain delta_T plus a radial correction. Individual correction terms are
// Laurent, their sum is polynomial again for polynomial input.
StemFunction delta_T_sigma(const StemFunction& F, int sigma);

// Radial correction g with dbar_{T_1} f = dbar_T f + (1 + t0 - t1) g and
// d_{T_1} f = d_T f + (t1 - t0 - 1) g.
StemFunction dbar_tilde_correction(const StemFunction& F);
StemFunction dbar_T_tilde(const StemFunction& F);
StemFunction d_T_tilde(const StemFunction& F);

// One-step coarsening: the T-stem of f rewritten as a T_1-stem of the same
// function, with the first upper block absorbed into the mirror.
StemFunction tilde(const StemFunction& F);
StemFunction multitilde(const StemFunction& F, int count);

// Collapse all upper blocks: the unique polynomial in x_0..x_N with the
// same values as the function induced by F.
CliffordPoly induced_poly(const StemFunction& F);

// Recover the stem of a polynomial from its restriction to the slices
// through the torus point J (averaging over the reflections of the radii).
// The result induces f again if and only if f is a T-function.
StemFunction extract_stem(const CliffordPoly& f, const StepList& T, const HypercomplexBasis& B,
                          const TorusPoint& J);
StemFunction extract_stem(const CliffordPoly& f, const StepList& T, const HypercomplexBasis& B);

// Polynomial T-function test: extraction followed by induction reproduces f.
bool is_t_function(const CliffordPoly& f, const StepList& T, const HypercomplexBasis& B);

// Coefficient table of the radial expansion of iterated block Laplacians:
// b(-1,-1) = 1, b(n,-1) = 0 and
// b(n,l) = (-1)^{n+l} 2^{l-n} (2n-l)! / (l! (n-l)!) for 0 <= l <= n.
Rational bessel_b(int n, int ell);

// Product of the gap factors (t1 - t0 - 2l + 1) for l = 1..n.
Rational iterate_scale(const StepList& T, int n);

// For F in the kernel of delta_T: the stem F^{[n]} with
// delta_{T_1}^n f = f^{[n]} * iterate_scale(T, n).
StemFunction f_power(const StemFunction& F, int n);

}  // namespace treg
