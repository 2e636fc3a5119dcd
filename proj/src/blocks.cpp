#include "treg/blocks.hpp"

namespace treg {

VarSpace x_space(int N) {
  std::vector<std::string> names;
  std::vector<VarRole> roles;
  for (int s = 0; s <= N; ++s) {
    names.push_back("x" + std::to_string(s));
    roles.push_back(VarRole::X);
  }
  return VarSpace::make(std::move(names), std::move(roles));
}

VarSpace stem_space(const StepList& T) {
  std::vector<std::string> names;
  std::vector<VarRole> roles;
  for (int s = 0; s <= T.t(0); ++s) {
    names.push_back("a" + std::to_string(s));
    roles.push_back(VarRole::Alpha);
  }
  for (int h = 1; h <= T.tau(); ++h) {
    names.push_back("b" + std::to_string(h));
    roles.push_back(VarRole::Beta);
  }
  return VarSpace::make(std::move(names), std::move(roles));
}

CliffordPoly conj_coeffs(const CliffordPoly& p) {
  CliffordPoly out(p.vars(), p.sig());
  for (const auto& [e, c] : p.terms()) out.add_term(e, conj(c));
  return out;
}

CliffordPoly block_linear(const VarSpace& vars, const StepList& T, const HypercomplexBasis& B,
                          int u) {
  if (T.N() != B.N()) throw PolyError("step list does not match basis dimension");
  CliffordPoly out(vars, B.sig());
  for (int s = T.block_lo(u); s <= T.block_hi(u); ++s) {
    Exp e(vars.size(), 0);
    e[s] = 1;
    out.add_term(e, B.v(s));
  }
  return out;
}

CliffordPoly block_norm2(const VarSpace& vars, const StepList& T, Signature sig, int u) {
  CliffordPoly out(vars, sig);
  for (int s = T.block_lo(u); s <= T.block_hi(u); ++s) {
    Exp e(vars.size(), 0);
    e[s] = 2;
    out.add_term(e, Multivector::scalar(sig, Rational(1)));
  }
  return out;
}

}  // namespace treg
