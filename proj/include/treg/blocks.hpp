#pragma once

#include "treg/hypercomplex.hpp"
#include "treg/poly.hpp"

namespace treg {

// Coordinate functions x_0..x_N on the carrier space. Two step lists with
// the same N share this space, so results of different pipelines compare
// directly.
VarSpace x_space(int N);
inline VarSpace x_space(const StepList& T) { return x_space(T.N()); }

// Mirror coordinates a_0..a_{t0} plus one radial variable b_h per upper
// block.
VarSpace stem_space(const StepList& T);

inline int alpha_index(const StepList&, int s) { return s; }
inline int beta_index(const StepList& T, int h) { return T.t(0) + h; }

// Conjugation applied to every coefficient.
CliffordPoly conj_coeffs(const CliffordPoly& p);

// x^u = sum over block u of x_s v_s, a degree-one polynomial with unit
// coefficients. u = 0 gives the full mirror value (v_0 = 1 included).
CliffordPoly block_linear(const VarSpace& vars, const StepList& T, const HypercomplexBasis& B,
                          int u);
// Sum over block u of x_s^2.
CliffordPoly block_norm2(const VarSpace& vars, const StepList& T, Signature sig, int u);

}  // namespace treg
