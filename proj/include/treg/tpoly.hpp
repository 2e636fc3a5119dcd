#pragma once

#include <map>
#include <utility>
#include <vector>

#include "treg/blocks.hpp"
#include "treg/hypercomplex.hpp"
#include "treg/poly.hpp"

namespace treg {

// Multi-index with t0 Fueter entries followed by tau Cullen entries.
using Kappa = std::vector<int>;

// Memoized generator of the regular polynomial family. Each member of total
// degree k is obtained from the degree k-1 members, multiplied by degree-one
// brackets from the right and divided by k.
class TKappaFamily {
 public:
  TKappaFamily(StepList T, HypercomplexBasis B);

  const StepList& steps() const { return T_; }
  const HypercomplexBasis& basis() const { return B_; }

  // Any entry may be negative, in which case the value is zero.
  const CliffordPoly& at(const Kappa& k);

 private:
  CliffordPoly compute(const Kappa& k);

  StepList T_;
  HypercomplexBasis B_;
  std::map<Kappa, CliffordPoly> cache_;
};

CliffordPoly t_kappa(const StepList& T, const HypercomplexBasis& B, const Kappa& k);

// All members of total degree k, ordered with leading entries decreasing.
std::vector<std::pair<Kappa, CliffordPoly>> family_Fk(const StepList& T,
                                                      const HypercomplexBasis& B, int k);

}  // namespace treg
