#include "treg/random.hpp"

#include "treg/blocks.hpp"

namespace treg {

Multivector random_multivector(Rng& rng, Signature sig, int terms) {
  Multivector x(sig);
  int all = 1 << sig.m();
  for (int i = 0; i < terms; ++i)
    x.add_term(static_cast<BladeMask>(rng.uniform(0, all - 1)), rng.rational());
  return x;
}

CliffordPoly random_poly(Rng& rng, const VarSpace& vars, Signature sig, int max_deg, int terms) {
  CliffordPoly p(vars, sig);
  for (int i = 0; i < terms; ++i) {
    Exp e(vars.size(), 0);
    int budget = max_deg;
    for (int v = 0; v < vars.size() && budget > 0; ++v) {
      e[v] = rng.uniform(0, budget);
      budget -= e[v];
    }
    p.add_term(e, random_multivector(rng, sig));
  }
  return p;
}

StemFunction random_stem(Rng& rng, const StepList& T, const HypercomplexBasis& B,
                         int max_half_deg, int terms) {
  StemFunction F(T, B);
  VarSpace S = stem_space(T);
  for (SubsetMask K = 0; K < (SubsetMask{1} << T.tau()); ++K) {
    CliffordPoly p(S, B.sig());
    for (int i = 0; i < terms; ++i) {
      Exp e(S.size(), 0);
      for (int s = 0; s <= T.t(0); ++s) e[alpha_index(T, s)] = rng.uniform(0, 2);
      for (int h = 1; h <= T.tau(); ++h)
        e[beta_index(T, h)] =
            2 * rng.uniform(0, max_half_deg) + (subset_has(K, h) ? 1 : 0);
      p.add_term(e, random_multivector(rng, B.sig()));
    }
    F.set_component(K, p);
  }
  return F;
}

}  // namespace treg
