#include "treg/fueter.hpp"

#include <string>

#include "treg/stem.hpp"

namespace treg {

FueterPlan plan(const StepList& T, int sigma) {
  if (sigma < 1 || sigma > T.tau())
    throw FueterError("stage must be between 1 and the number of blocks");
  FueterPlan p{T, sigma, {}};
  for (int h = 1; h <= sigma; ++h) {
    int gap = T.t(h) - T.t(h - 1);
    if (gap % 2 == 0)
      throw FueterError("even gap at stage " + std::to_string(h) +
                        ": the transform needs odd block dimensions");
    p.n.push_back((gap - 1) / 2);
  }
  return p;
}

namespace {

void certify(const CliffordPoly& f, const StepList& T, const HypercomplexBasis& B, int stage) {
  if (!is_T_regular(f, T, B) || !is_t_function(f, T, B))
    throw CertificationError("stage " + std::to_string(stage) +
                             " output failed the regularity checks");
}

}  // namespace

CliffordPoly sigma_transform(const CliffordPoly& f, const StepList& T, const HypercomplexBasis& B,
                             int sigma) {
  FueterPlan p = plan(T, sigma);
  if (!is_T_regular(f, T, B) || !is_t_function(f, T, B))
    throw FueterError("input is not strongly regular over the given steps");
  CliffordPoly cur = f;
  for (int h = 1; h <= sigma; ++h) {
    StepList Th = T.suffix(h);
    for (int i = 0; i < p.n[h - 1]; ++i) {
      RationalForm r = delta_T_x(cur, Th, B);
      if (!r.is_polynomial())
        throw CertificationError("stage " + std::to_string(h) +
                                 " left the polynomial ring");
      cur = r.num;
    }
    certify(cur, Th, B, h);
  }
  return cur;
}

CliffordPoly first_transform(const CliffordPoly& f, const StepList& T,
                             const HypercomplexBasis& B) {
  return sigma_transform(f, T, B, 1);
}

ControlReport negative_control(const CliffordPoly& f, const StepList& T,
                               const HypercomplexBasis& B) {
  StepList flat({T.N()});
  RationalForm lap = delta_T_x(f, flat, B);
  RationalForm res = dbar_T_x(lap.num, flat, B);
  return {lap.num, res.num};
}

}  // namespace treg
