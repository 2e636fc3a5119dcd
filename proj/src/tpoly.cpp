#include "treg/tpoly.hpp"

#include <numeric>
#include <stdexcept>

namespace treg {

TKappaFamily::TKappaFamily(StepList T, HypercomplexBasis B)
    : T_(std::move(T)), B_(std::move(B)) {
  if (B_.N() != T_.N())
    throw std::invalid_argument("basis and step list disagree on the dimension");
}

const CliffordPoly& TKappaFamily::at(const Kappa& k) {
  if (static_cast<int>(k.size()) != T_.t(0) + T_.tau())
    throw std::invalid_argument("multi-index length must be t0 + tau");
  auto it = cache_.find(k);
  if (it != cache_.end()) return it->second;
  CliffordPoly val = compute(k);
  return cache_.emplace(k, std::move(val)).first->second;
}

CliffordPoly TKappaFamily::compute(const Kappa& k) {
  VarSpace X = x_space(T_);
  Signature sig = B_.sig();
  for (int e : k)
    if (e < 0) return CliffordPoly(X, sig);
  int total = std::accumulate(k.begin(), k.end(), 0);
  if (total == 0) return CliffordPoly::constant(X, Multivector::scalar(sig, Rational(1)));

  int t0 = T_.t(0);
  int tau = T_.tau();
  int a = 0;
  for (int j = 0; j < tau; ++j) a += k[t0 + j];

  CliffordPoly sum(X, sig);
  for (int s = 1; s <= t0; ++s) {
    if (k[s - 1] == 0) continue;
    Kappa prev = k;
    --prev[s - 1];
    // x_s - (-1)^a x_0 v_s
    CliffordPoly bracket =
        CliffordPoly::variable(X, sig, s) +
        CliffordPoly::variable(X, sig, 0).scale_left(B_.v(s)).scale(a % 2 == 0 ? -1 : 1);
    sum = sum + (at(prev) * bracket).scale(k[s - 1]);
  }
  for (int j = 1; j <= tau; ++j) {
    int ks = k[t0 + j - 1];
    if (ks == 0) continue;
    Kappa prev = k;
    --prev[t0 + j - 1];
    int a_s = a - ks;
    int b_s = 0;
    for (int u = j; u < tau; ++u) b_s += k[t0 + u];
    // (-1)^{b_s} k_s, bracket x_0 + (-1)^{a_s} x^j
    CliffordPoly bracket = CliffordPoly::variable(X, sig, 0) +
                           block_linear(X, T_, B_, j).scale(a_s % 2 == 0 ? 1 : -1);
    sum = sum + (at(prev) * bracket).scale(b_s % 2 == 0 ? ks : -ks);
  }
  return sum.scale(Rational(1, total));
}

CliffordPoly t_kappa(const StepList& T, const HypercomplexBasis& B, const Kappa& k) {
  TKappaFamily fam(T, B);
  return fam.at(k);
}

namespace {

void enumerate(int slots, int total, Kappa& cur, std::vector<Kappa>& out) {
  if (slots == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = total; v >= 0; --v) {
    cur.push_back(v);
    enumerate(slots - 1, total - v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::pair<Kappa, CliffordPoly>> family_Fk(const StepList& T,
                                                      const HypercomplexBasis& B, int k) {
  if (k < 0) throw std::invalid_argument("degree must be nonnegative");
  TKappaFamily fam(T, B);
  std::vector<Kappa> idx;
  Kappa cur;
  enumerate(T.t(0) + T.tau(), k, cur, idx);
  std::vector<std::pair<Kappa, CliffordPoly>> out;
  out.reserve(idx.size());
  for (auto& i : idx) out.emplace_back(i, fam.at(i));
  return out;
}

}  // namespace treg
