#pragma once

#include <stdexcept>
#include <vector>

#include "treg/blocks.hpp"
#include "treg/hypercomplex.hpp"
#include "treg/poly.hpp"

namespace treg {

struct OpsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A polynomial restricted to the slice through the torus point J, written in
// the mirror coordinates a_0..a_{t0} and the radii b_1..b_tau.
struct SlicePoly {
  CliffordPoly poly;
  TorusPoint J;
};

// Substitute x_s -> a_s on the mirror block and x_s -> b_u * (J_u)_s on block
// u. The result lives on stem_space(T).
SlicePoly slice_restrict(const CliffordPoly& f, const StepList& T, const HypercomplexBasis& B,
                         const TorusPoint& J);

// First-order slice operators and the slice Laplacian. Coefficients multiply
// from the left.
CliffordPoly dbar_J(const SlicePoly& phi, const StepList& T, const HypercomplexBasis& B);
CliffordPoly d_J(const SlicePoly& phi, const StepList& T, const HypercomplexBasis& B);
CliffordPoly delta_J(const SlicePoly& phi, const StepList& T, const HypercomplexBasis& B);

// num divided by prod_u |x^u|^(2 den[u-1]), where |x^u|^2 is the block norm
// sum_{s in block u} x_s^2.
struct RationalForm {
  CliffordPoly num;
  std::vector<int> den;

  bool is_polynomial() const;
};

// Cancel block norms that divide the numerator exactly.
RationalForm reduce(RationalForm r, const StepList& T, const HypercomplexBasis& B);

// Compare as rational functions by cross-multiplying denominators. The two
// forms may live over different step lists of the same space.
bool equal_forms(const RationalForm& a, const StepList& Ta, const RationalForm& b,
                 const StepList& Tb, const HypercomplexBasis& B);

// The operators on polynomials of the coordinates x_0..x_N, computed by
// multiplying through by the block norms and then reducing. The radial pieces
// x^u / |x^u|^2 are left multipliers.
RationalForm dbar_T_x(const CliffordPoly& f, const StepList& T, const HypercomplexBasis& B);
RationalForm d_T_x(const CliffordPoly& f, const StepList& T, const HypercomplexBasis& B);
RationalForm delta_T_x(const CliffordPoly& f, const StepList& T, const HypercomplexBasis& B);

// Kernel membership decided as a polynomial identity on the multiply-through
// numerator.
bool is_T_regular(const CliffordPoly& f, const StepList& T, const HypercomplexBasis& B);
bool is_T_harmonic(const CliffordPoly& f, const StepList& T, const HypercomplexBasis& B);

}  // namespace treg
