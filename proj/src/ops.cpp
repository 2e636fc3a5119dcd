#include "treg/ops.hpp"

#include "treg/algebra.hpp"

namespace treg {

namespace {

void check_x_input(const CliffordPoly& f, const StepList& T, const HypercomplexBasis& B) {
  if (B.N() != T.N()) throw OpsError("basis and step list disagree on the dimension");
  if (!(f.vars() == x_space(T))) throw OpsError("expected a polynomial in x_0..x_N");
  if (!(f.sig() == B.sig())) throw OpsError("coefficient algebra does not match the basis");
  if (!f.is_polynomial()) throw OpsError("expected a polynomial");
}

void check_slice_input(const SlicePoly& phi, const StepList& T, const HypercomplexBasis& B) {
  if (B.N() != T.N()) throw OpsError("basis and step list disagree on the dimension");
  if (!(phi.poly.vars() == stem_space(T))) throw OpsError("expected a slice polynomial");
  if (!(phi.poly.sig() == B.sig())) throw OpsError("coefficient algebra does not match the basis");
}

// sum_{s in block u} x_s d/dx_s of f.
CliffordPoly block_euler(const CliffordPoly& f, const StepList& T, int u) {
  CliffordPoly out(f.vars(), f.sig());
  for (int s = T.block_lo(u); s <= T.block_hi(u); ++s)
    out = out + f.ddx(s).mul_var_power(s, 1);
  return out;
}

enum class Variant { Bar, Plain };

RationalForm first_order_x(const CliffordPoly& f, const StepList& T, const HypercomplexBasis& B,
                           Variant variant) {
  check_x_input(f, T, B);
  VarSpace X = x_space(T);
  Signature sig = B.sig();
  int tau = T.tau();

  CliffordPoly mirror(X, sig);
  for (int s = 0; s <= T.t(0); ++s) {
    Multivector c = variant == Variant::Bar ? B.v(s) : conj(B.v(s));
    mirror = mirror + f.ddx(s).scale_left(c);
  }

  std::vector<CliffordPoly> Q;
  for (int u = 1; u <= tau; ++u) Q.push_back(block_norm2(X, T, sig, u));

  CliffordPoly num = mirror;
  for (const auto& q : Q) num = num * q;
  for (int u = 1; u <= tau; ++u) {
    CliffordPoly radial = block_linear(X, T, B, u);
    if (variant == Variant::Plain) radial = conj_coeffs(radial);
    CliffordPoly term = radial * block_euler(f, T, u);
    for (int v = 1; v <= tau; ++v)
      if (v != u) term = term * Q[v - 1];
    num = num + term;
  }
  return reduce({num, std::vector<int>(tau, 1)}, T, B);
}

}  // namespace

SlicePoly slice_restrict(const CliffordPoly& f, const StepList& T, const HypercomplexBasis& B,
                         const TorusPoint& J) {
  check_x_input(f, T, B);
  validate_torus(T, B, J.J);
  VarSpace S = stem_space(T);
  std::vector<CliffordPoly> images;
  std::vector<std::vector<Rational>> jc;
  for (int h = 1; h <= T.tau(); ++h) jc.push_back(B.coords(J[h]));
  for (int s = 0; s <= T.N(); ++s) {
    int u = T.block_of(s);
    if (u == 0) {
      images.push_back(CliffordPoly::variable(S, B.sig(), alpha_index(T, s)));
    } else {
      CliffordPoly b = CliffordPoly::variable(S, B.sig(), beta_index(T, u));
      images.push_back(b.scale(jc[u - 1][s]));
    }
  }
  return {compose(f, S, images), J};
}

CliffordPoly dbar_J(const SlicePoly& phi, const StepList& T, const HypercomplexBasis& B) {
  check_slice_input(phi, T, B);
  validate_torus(T, B, phi.J.J);
  CliffordPoly out = phi.poly.ddx(alpha_index(T, 0));
  for (int s = 1; s <= T.t(0); ++s)
    out = out + phi.poly.ddx(alpha_index(T, s)).scale_left(B.v(s));
  for (int h = 1; h <= T.tau(); ++h)
    out = out + phi.poly.ddx(beta_index(T, h)).scale_left(phi.J[h]);
  return out;
}

CliffordPoly d_J(const SlicePoly& phi, const StepList& T, const HypercomplexBasis& B) {
  check_slice_input(phi, T, B);
  validate_torus(T, B, phi.J.J);
  CliffordPoly out = phi.poly.ddx(alpha_index(T, 0));
  for (int s = 1; s <= T.t(0); ++s)
    out = out + phi.poly.ddx(alpha_index(T, s)).scale_left(conj(B.v(s)));
  for (int h = 1; h <= T.tau(); ++h)
    out = out + phi.poly.ddx(beta_index(T, h)).scale_left(conj(phi.J[h]));
  return out;
}

CliffordPoly delta_J(const SlicePoly& phi, const StepList& T, const HypercomplexBasis& B) {
  check_slice_input(phi, T, B);
  CliffordPoly out(phi.poly.vars(), phi.poly.sig());
  for (int i = 0; i < T.t(0) + 1 + T.tau(); ++i) out = out + phi.poly.ddx(i).ddx(i);
  return out;
}

bool RationalForm::is_polynomial() const {
  for (int e : den)
    if (e != 0) return false;
  return true;
}

RationalForm reduce(RationalForm r, const StepList& T, const HypercomplexBasis& B) {
  VarSpace X = x_space(T);
  for (int u = 1; u <= T.tau(); ++u) {
    CliffordPoly q = block_norm2(X, T, B.sig(), u);
    while (r.den[u - 1] > 0) {
      DivisionResult d = divide(r.num, q);
      if (!d.remainder.is_zero()) break;
      r.num = d.quotient;
      --r.den[u - 1];
    }
  }
  return r;
}

bool equal_forms(const RationalForm& a, const StepList& Ta, const RationalForm& b,
                 const StepList& Tb, const HypercomplexBasis& B) {
  if (Ta.N() != Tb.N()) return false;
  VarSpace X = x_space(Ta);
  CliffordPoly lhs = a.num;
  CliffordPoly rhs = b.num;
  for (int u = 1; u <= Tb.tau(); ++u) {
    CliffordPoly q = block_norm2(X, Tb, B.sig(), u);
    for (int i = 0; i < b.den[u - 1]; ++i) lhs = lhs * q;
  }
  for (int u = 1; u <= Ta.tau(); ++u) {
    CliffordPoly q = block_norm2(X, Ta, B.sig(), u);
    for (int i = 0; i < a.den[u - 1]; ++i) rhs = rhs * q;
  }
  return lhs == rhs;
}

RationalForm dbar_T_x(const CliffordPoly& f, const StepList& T, const HypercomplexBasis& B) {
  return first_order_x(f, T, B, Variant::Bar);
}

RationalForm d_T_x(const CliffordPoly& f, const StepList& T, const HypercomplexBasis& B) {
  return first_order_x(f, T, B, Variant::Plain);
}

RationalForm delta_T_x(const CliffordPoly& f, const StepList& T, const HypercomplexBasis& B) {
  check_x_input(f, T, B);
  VarSpace X = x_space(T);
  Signature sig = B.sig();
  int tau = T.tau();

  CliffordPoly mirror(X, sig);
  for (int s = 0; s <= T.t(0); ++s) mirror = mirror + f.ddx(s).ddx(s);

  std::vector<CliffordPoly> Q;
  for (int u = 1; u <= tau; ++u) Q.push_back(block_norm2(X, T, sig, u));

  CliffordPoly num = mirror;
  for (const auto& q : Q) num = num * q;
  for (int u = 1; u <= tau; ++u) {
    CliffordPoly second(X, sig);
    for (int s = T.block_lo(u); s <= T.block_hi(u); ++s)
      for (int s2 = T.block_lo(u); s2 <= T.block_hi(u); ++s2)
        second = second + f.ddx(s).ddx(s2).mul_var_power(s, 1).mul_var_power(s2, 1);
    for (int v = 1; v <= tau; ++v)
      if (v != u) second = second * Q[v - 1];
    num = num + second;
  }
  return reduce({num, std::vector<int>(tau, 1)}, T, B);
}

bool is_T_regular(const CliffordPoly& f, const StepList& T, const HypercomplexBasis& B) {
  return dbar_T_x(f, T, B).num.is_zero();
}

bool is_T_harmonic(const CliffordPoly& f, const StepList& T, const HypercomplexBasis& B) {
  return delta_T_x(f, T, B).num.is_zero();
}

}  // namespace treg
