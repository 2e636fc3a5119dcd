#pragma once

#include <stdexcept>
#include <vector>

#include "treg/hypercomplex.hpp"
#include "treg/ops.hpp"
#include "treg/poly.hpp"

namespace treg {

struct FueterError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a transform output fails its mandatory checks; indicates a bug,
// not bad input.
struct CertificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Stage plan for the multi-step transform: gap t_h - t_{h-1} = 2 n[h-1] + 1
// for every stage h up to sigma.
struct FueterPlan {
  StepList T;
  int sigma;
  std::vector<int> n;
};

// Validates the gaps up to the requested stage. An even gap is unsupported
// and reported as an error naming the stage.
FueterPlan plan(const StepList& T, int sigma);

// Apply the block Laplacian over suffix(1) n_1 times. The input must be
// strongly regular over T; the output is certified strongly regular over
// suffix(1) before being returned.
CliffordPoly first_transform(const CliffordPoly& f, const StepList& T,
                             const HypercomplexBasis& B);

// Chain the stage Laplacians: n_h applications over suffix(h) for h = 1 ..
// sigma, certifying every stage.
CliffordPoly sigma_transform(const CliffordPoly& f, const StepList& T, const HypercomplexBasis& B,
                             int sigma);

// What happens when the stages are skipped: apply the plain Laplacian over
// the single-block list (N), then the mirror Cauchy-Riemann operator, and
// report the residue. A nonzero residue shows the shortcut breaks regularity.
struct ControlReport {
  CliffordPoly laplacian;
  CliffordPoly residue;
};

ControlReport negative_control(const CliffordPoly& f, const StepList& T,
                               const HypercomplexBasis& B);

}  // namespace treg
