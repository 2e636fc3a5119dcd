#include "treg/stem.hpp"

namespace treg {

namespace {

// Parity of the b_h exponent in every monomial must match membership of h
// in K, also for negative (Laurent) exponents.
void check_parity(const CliffordPoly& F, const StepList& T, SubsetMask K) {
  for (const auto& [e, c] : F.terms()) {
    for (int h = 1; h <= T.tau(); ++h) {
      int exp = e[beta_index(T, h)];
      int parity = ((exp % 2) + 2) % 2;
      if (parity != (subset_has(K, h) ? 1 : 0))
        throw StemError("component parity violated in radial variable b" + std::to_string(h));
    }
  }
}

}  // namespace

StemFunction::StemFunction(StepList T, HypercomplexBasis B)
    : T_(std::move(T)), B_(std::move(B)), vars_(stem_space(T_)) {
  if (T_.N() != B_.N()) throw StemError("step list does not match basis dimension");
}

CliffordPoly StemFunction::component(SubsetMask K) const {
  if (K >= (SubsetMask{1} << tau())) throw StemError("component index out of range");
  auto it = comp_.find(K);
  return it == comp_.end() ? CliffordPoly(vars_, sig()) : it->second;
}

StemFunction& StemFunction::set_component(SubsetMask K, const CliffordPoly& F) {
  if (K >= (SubsetMask{1} << tau())) throw StemError("component index out of range");
  if (!(F.vars() == vars_) || F.sig() != sig())
    throw StemError("component on the wrong variable space");
  check_parity(F, T_, K);
  if (F.is_zero())
    comp_.erase(K);
  else
    comp_.insert_or_assign(K, F);
  return *this;
}

bool StemFunction::is_polynomial() const {
  for (const auto& [K, F] : comp_)
    if (!F.is_polynomial()) return false;
  return true;
}

StemFunction StemFunction::operator+(const StemFunction& o) const {
  if (T_ != o.T_ || !(B_ == o.B_)) throw StemError("stem shape mismatch in +");
  StemFunction out = *this;
  for (const auto& [K, F] : o.comp_) out.set_component(K, out.component(K) + F);
  return out;
}

StemFunction StemFunction::operator-(const StemFunction& o) const { return *this + (-o); }

StemFunction StemFunction::operator-() const {
  StemFunction out(T_, B_);
  for (const auto& [K, F] : comp_) out.comp_.emplace(K, -F);
  return out;
}

StemFunction StemFunction::scale(const Rational& c) const {
  StemFunction out(T_, B_);
  if (c == 0) return out;
  for (const auto& [K, F] : comp_) out.comp_.emplace(K, F.scale(c));
  return out;
}

bool StemFunction::operator==(const StemFunction& o) const {
  return T_ == o.T_ && B_ == o.B_ && comp_ == o.comp_;
}

CliffordPoly dbar_alpha_pow(const CliffordPoly& P, const StepList& T, const HypercomplexBasis& B,
                            int u) {
  CliffordPoly out = P.ddx(alpha_index(T, 0));
  Rational sign = (u % 2 == 0) ? Rational(-1) : Rational(1);
  for (int s = 1; s <= T.t(0); ++s)
    out = out + P.ddx(alpha_index(T, s)).scale_left(B.v(s)).scale(sign);
  return out;
}

namespace {

// Shared assembly of the two first-order stem operators: the mirror part
// uses parity offset |K| + off, the radial part carries sign
// (-1)^{sigma(h,K) + off}.
StemFunction first_order_op(const StemFunction& F, int off) {
  const StepList& T = F.steps();
  StemFunction out(T, F.basis());
  for (SubsetMask K = 0; K < (SubsetMask{1} << F.tau()); ++K) {
    CliffordPoly acc = dbar_alpha_pow(F.component(K), T, F.basis(), subset_size(K) + off);
    for (int h = 1; h <= F.tau(); ++h) {
      CliffordPoly d = F.component(K ^ (SubsetMask{1} << (h - 1))).ddx(beta_index(T, h));
      acc = (sigma_sign(h, K) + off) % 2 != 0 ? acc - d : acc + d;
    }
    out.set_component(K, acc);
  }
  return out;
}

}  // namespace

StemFunction dbar_T(const StemFunction& F) { return first_order_op(F, 1); }

StemFunction d_T(const StemFunction& F) { return first_order_op(F, 0); }

StemFunction delta_T(const StemFunction& F) {
  const StepList& T = F.steps();
  StemFunction out(T, F.basis());
  for (const auto& [K, FK] : F.components()) {
    CliffordPoly acc(F.vars(), F.sig());
    for (int s = 0; s <= T.t(0); ++s) acc = acc + FK.ddx(alpha_index(T, s)).ddx(alpha_index(T, s));
    for (int h = 1; h <= F.tau(); ++h) acc = acc + FK.ddx(beta_index(T, h)).ddx(beta_index(T, h));
    out.set_component(K, acc);
  }
  return out;
}

bool is_strongly_regular_stem(const StemFunction& F) { return dbar_T(F).is_zero(); }

bool is_harmonic_stem(const StemFunction& F) { return delta_T(F).is_zero(); }

StemFunction delta_T_sigma(const StemFunction& F, int sigma) {
  const StepList& T = F.steps();
  if (sigma < 1 || sigma > F.tau()) throw StemError("coarsening index outside 1..tau");
  StemFunction out = delta_T(F);
  for (const auto& [K, FK] : F.components()) {
    CliffordPoly acc = out.component(K);
    for (int v = 1; v <= sigma; ++v) {
      int bv = beta_index(T, v);
      acc = acc + FK.ddx(bv).mul_var_power(bv, -1).scale(Rational(T.t(v) - T.t(v - 1) - 1));
      if (subset_has(K, v))
        acc = acc + FK.mul_var_power(bv, -2).scale(Rational(1 + T.t(v - 1) - T.t(v)));
    }
    out.set_component(K, acc);
  }
  return out;
}

StemFunction dbar_tilde_correction(const StemFunction& F) {
  const StepList& T = F.steps();
  if (F.tau() < 1) throw StemError("no upper block to coarsen");
  StemFunction out(T, F.basis());
  int b1 = beta_index(T, 1);
  for (SubsetMask K = 0; K < (SubsetMask{1} << F.tau()); ++K) {
    if (subset_has(K, 1)) continue;
    out.set_component(K, F.component(K | 1u).mul_var_power(b1, -1));
  }
  return out;
}

StemFunction dbar_T_tilde(const StemFunction& F) {
  const StepList& T = F.steps();
  Rational c(1 + T.t(0) - T.t(1));
  return dbar_T(F) + dbar_tilde_correction(F).scale(c);
}

StemFunction d_T_tilde(const StemFunction& F) {
  const StepList& T = F.steps();
  Rational c(T.t(1) - T.t(0) - 1);
  return d_T(F) + dbar_tilde_correction(F).scale(c);
}

StemFunction tilde(const StemFunction& F) {
  const StepList& T = F.steps();
  if (F.tau() < 1) throw StemError("no upper block to coarsen");
  StepList T2 = T.suffix(1);
  StemFunction out(T2, F.basis());
  VarSpace dst = out.vars();
  Signature sig = F.sig();

  // Images for the source variables, with b1 standing for its own square
  // after push_square: a_s -> a_s, b1^2 -> sum of squares of the absorbed
  // block, b_h -> b_{h-1}.
  std::vector<CliffordPoly> images;
  for (int s = 0; s <= T.t(0); ++s)
    images.push_back(CliffordPoly::variable(dst, sig, alpha_index(T2, s)));
  CliffordPoly Q(dst, sig);
  for (int s = T.t(0) + 1; s <= T.t(1); ++s) {
    Exp e(dst.size(), 0);
    e[alpha_index(T2, s)] = 2;
    Q.add_term(e, Multivector::scalar(sig, Rational(1)));
  }
  images.push_back(Q);
  for (int h = 2; h <= F.tau(); ++h)
    images.push_back(CliffordPoly::variable(dst, sig, beta_index(T2, h - 1)));

  // The absorbed block as a vector-valued linear form.
  CliffordPoly X1(dst, sig);
  for (int s = T.t(0) + 1; s <= T.t(1); ++s) {
    Exp e(dst.size(), 0);
    e[alpha_index(T2, s)] = 1;
    X1.add_term(e, F.basis().v(s));
  }

  int b1 = beta_index(T, 1);
  for (SubsetMask H = 0; H < (SubsetMask{1} << T2.tau()); ++H) {
    SubsetMask even_K = H << 1;
    SubsetMask odd_K = (H << 1) | 1u;
    CliffordPoly even_part = compose(push_square(F.component(even_K), b1), dst, images);
    CliffordPoly odd_shifted = F.component(odd_K).mul_var_power(b1, -1);
    CliffordPoly odd_part = compose(push_square(odd_shifted, b1), dst, images);
    CliffordPoly res = even_part + (subset_size(H) % 2 != 0 ? -(X1 * odd_part) : X1 * odd_part);
    out.set_component(H, res);
  }
  return out;
}

StemFunction multitilde(const StemFunction& F, int count) {
  if (count < 0 || count > F.tau()) throw StemError("coarsening count outside 0..tau");
  StemFunction out = F;
  for (int i = 0; i < count; ++i) out = tilde(out);
  return out;
}

CliffordPoly induced_poly(const StemFunction& F) {
  StemFunction flat = multitilde(F, F.tau());
  CliffordPoly base = flat.component(0);
  if (!base.is_polynomial())
    throw StemError("induced function is not polynomial");
  int N = F.steps().N();
  VarSpace X = x_space(N);
  std::vector<int> index_map;
  for (int s = 0; s <= N; ++s) index_map.push_back(s);
  return rename(base, X, index_map);
}

StemFunction extract_stem(const CliffordPoly& f, const StepList& T, const HypercomplexBasis& B,
                          const TorusPoint& J) {
  if (!(f.vars() == x_space(T.N()))) throw StemError("function not on the coordinate space");
  if (f.sig() != B.sig()) throw StemError("function signature does not match basis");
  if (!f.is_polynomial()) throw StemError("extraction needs a polynomial");
  validate_torus(T, B, J.J);

  VarSpace S = stem_space(T);
  int tau = T.tau();
  StemFunction out(T, B);

  // f evaluated at the torus slice with the radii of the blocks in H
  // reflected.
  std::vector<CliffordPoly> slice;
  for (SubsetMask H = 0; H < (SubsetMask{1} << tau); ++H) {
    std::vector<CliffordPoly> images;
    for (int s = 0; s <= T.N(); ++s) {
      int u = T.block_of(s);
      if (u == 0) {
        images.push_back(CliffordPoly::variable(S, B.sig(), alpha_index(T, s)));
      } else {
        Rational c = scalar_product(J[u], B.v(s));
        if (subset_has(H, u)) c = -c;
        images.push_back(CliffordPoly::variable(S, B.sig(), beta_index(T, u)).scale(c));
      }
    }
    slice.push_back(compose(f, S, images));
  }

  Rational weight = rat(1, 1 << tau);
  for (SubsetMask K = 0; K < (SubsetMask{1} << tau); ++K) {
    Multivector IK = torus_product(J, K, B.sig());
    Multivector IKinv = conj(IK);
    if (IK * IKinv != Multivector::scalar(B.sig(), Rational(1)))
      throw StemError("torus product is not invertible by conjugation");
    CliffordPoly acc(S, B.sig());
    for (SubsetMask H = 0; H < (SubsetMask{1} << tau); ++H)
      acc = subset_size(K & H) % 2 != 0 ? acc - slice[H] : acc + slice[H];
    out.set_component(K, acc.scale_left(IKinv).scale(weight));
  }
  return out;
}

StemFunction extract_stem(const CliffordPoly& f, const StepList& T, const HypercomplexBasis& B) {
  return extract_stem(f, T, B, default_torus(T, B));
}

bool is_t_function(const CliffordPoly& f, const StepList& T, const HypercomplexBasis& B) {
  return induced_poly(extract_stem(f, T, B)) == f;
}

Rational bessel_b(int n, int ell) {
  if (n == -1 && ell == -1) return Rational(1);
  if (n < 0 || ell < -1 || ell > n) throw StemError("coefficient index out of range");
  if (ell == -1) return Rational(0);
  Integer num = factorial(2 * n - ell);
  Integer den = Integer(factorial(ell) * factorial(n - ell)) << (n - ell);
  Rational r(num, den);
  r.canonicalize();
  if ((n + ell) % 2 != 0) r = -r;
  return r;
}

Rational iterate_scale(const StepList& T, int n) {
  if (T.tau() < 1) throw StemError("no upper block to coarsen");
  Rational prod(1);
  for (int l = 1; l <= n; ++l) prod *= Rational(T.t(1) - T.t(0) - 2 * l + 1);
  return prod;
}

StemFunction f_power(const StemFunction& F, int n) {
  if (n < 0) throw StemError("negative iterate");
  if (!delta_T(F).is_zero()) throw StemError("radial expansion needs a harmonic stem");
  const StepList& T = F.steps();
  if (F.tau() < 1) throw StemError("no upper block to coarsen");
  int b1 = beta_index(T, 1);
  StemFunction out(T, F.basis());
  for (const auto& [K, FK] : F.components()) {
    CliffordPoly acc(F.vars(), F.sig());
    CliffordPoly deriv = FK;
    for (int ell = 0; ell <= n; ++ell) {
      Rational c = subset_has(K, 1) ? bessel_b(n, ell) : bessel_b(n - 1, ell - 1);
      if (c != 0) acc = acc + deriv.mul_var_power(b1, ell - 2 * n).scale(c);
      deriv = deriv.ddx(b1);
    }
    out.set_component(K, acc);
  }
  return out;
}

}  // namespace treg
