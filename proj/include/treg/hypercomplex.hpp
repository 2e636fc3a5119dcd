#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "treg/algebra.hpp"

namespace treg {

// Step list T = (t_0, ..., t_tau) with 0 <= t_0 < ... < t_tau = N.
// Block 0 covers coordinates 0..t_0 (the mirror), block h >= 1 covers
// t_{h-1}+1 .. t_h.
class StepList {
 public:
  explicit StepList(std::vector<int> steps);

  int tau() const { return static_cast<int>(t_.size()) - 1; }
  int N() const { return t_.back(); }
  int t(int i) const { return i < 0 ? -1 : t_.at(i); }
  const std::vector<int>& steps() const { return t_; }

  int block_lo(int h) const { return h == 0 ? 0 : t_.at(h - 1) + 1; }
  int block_hi(int h) const { return t_.at(h); }
  int block_dim(int h) const { return block_hi(h) - block_lo(h) + 1; }
  // Block index (0..tau) that owns coordinate s.
  int block_of(int s) const;

  // T_sigma = (t_sigma, ..., t_tau) for sigma in 1..tau.
  StepList suffix(int sigma) const;

  bool operator==(const StepList& o) const = default;

 private:
  std::vector<int> t_;
};

struct BasisError : std::runtime_error {
  enum class Kind { FirstNotUnit, NotImaginaryUnit, NotAnticommuting, Empty };
  BasisError(Kind kind, int s, int t, const std::string& msg)
      : std::runtime_error(msg), kind(kind), s(s), t(t) {}
  Kind kind;
  int s;
  int t;
};

// Hypercomplex basis (v_0 = 1, v_1, ..., v_N): each v_s (s >= 1) is an
// imaginary unit and distinct v_s, v_t anticommute. Cheap to copy.
class HypercomplexBasis {
 public:
  static HypercomplexBasis validate(Signature sig, std::vector<Multivector> elements);

  // (e_0, e_1, ..., e_m).
  static HypercomplexBasis paravector(int m);
  // (e_0, all grade-h blades), h = 1 (mod 4).
  static HypercomplexBasis grade_h(int m, int h);
  // (e_0, e_1, ..., e_h, e_{1..h}), h = 2 (mod 4).
  static HypercomplexBasis w_h(int m, int h);

  Signature sig() const { return d_->sig; }
  int N() const { return static_cast<int>(d_->v.size()) - 1; }
  const Multivector& v(int s) const { return d_->v.at(s); }

  // Coordinates of x in this basis; throws if x is outside the span.
  std::vector<Rational> coords(const Multivector& x) const;
  Multivector from_coords(const std::vector<Rational>& c) const;

  bool operator==(const HypercomplexBasis& o) const;

 private:
  struct Data {
    Signature sig;
    std::vector<Multivector> v;
  };
  explicit HypercomplexBasis(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

// Torus point J = (J_1, ..., J_tau): J_h a rational unit vector in the span
// of v_{t_{h-1}+1}, ..., v_{t_h}. tau = 0 gives the empty point.
struct TorusPoint {
  std::vector<Multivector> J;
  int tau() const { return static_cast<int>(J.size()); }
  const Multivector& operator[](int h) const { return J.at(h - 1); }
};

// Subsets K of {1..tau} are masks: element h <-> bit h-1.
using SubsetMask = std::uint32_t;

inline int subset_size(SubsetMask k) { return __builtin_popcount(k); }
inline bool subset_has(SubsetMask k, int h) { return (k >> (h - 1)) & 1u; }

// sigma(h, K): parity of |{k in K : k <= h}|.
int sigma_sign(int h, SubsetMask K);

// Ordered product J_{k_1} ... J_{k_p} over ascending k in K; J_empty = 1.
Multivector torus_product(const TorusPoint& J, SubsetMask K, Signature sig);

TorusPoint validate_torus(const StepList& T, const HypercomplexBasis& B,
                          std::vector<Multivector> J);
// J_h = v_{block_lo(h)}: the first basis vector of each upper block.
TorusPoint default_torus(const StepList& T, const HypercomplexBasis& B);
TorusPoint torus_from_coords(const StepList& T, const HypercomplexBasis& B,
                             const std::vector<std::vector<Rational>>& blocks);

// A unit-norm rational vector in the span of v_lo..v_hi, deterministic in
// seed, from the rational parameterization of the sphere.
Multivector rational_sphere_point(const HypercomplexBasis& B, int lo, int hi,
                                  std::uint64_t seed);
Multivector rational_sphere_point(const HypercomplexBasis& B, const StepList& T, int h,
                                  std::uint64_t seed);
TorusPoint random_torus(const StepList& T, const HypercomplexBasis& B, std::uint64_t seed);

// Coordinate blocks (x^0, x^1, ..., x^tau) of a coordinate vector.
std::vector<std::vector<Rational>> decompose(const std::vector<Rational>& coords,
                                             const StepList& T);
std::vector<Rational> reassemble(const std::vector<std::vector<Rational>>& blocks,
                                 const StepList& T);

}  // namespace treg
