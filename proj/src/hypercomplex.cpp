#include "treg/hypercomplex.hpp"

#include <bit>
#include <random>

namespace treg {

StepList::StepList(std::vector<int> steps) : t_(std::move(steps)) {
  if (t_.empty()) throw std::invalid_argument("empty step list");
  if (t_.front() < 0) throw std::invalid_argument("step list must start at t0 >= 0");
  for (size_t i = 1; i < t_.size(); ++i)
    if (t_[i] <= t_[i - 1]) throw std::invalid_argument("step list must be strictly increasing");
}

int StepList::block_of(int s) const {
  if (s < 0 || s > N()) throw std::out_of_range("coordinate outside step list");
  for (int h = 0; h <= tau(); ++h)
    if (s <= t_[h]) return h;
  return tau();
}

StepList StepList::suffix(int sigma) const {
  if (sigma < 1 || sigma > tau()) throw std::out_of_range("suffix index outside 1..tau");
  return StepList(std::vector<int>(t_.begin() + sigma, t_.end()));
}

HypercomplexBasis HypercomplexBasis::validate(Signature sig, std::vector<Multivector> elements) {
  if (elements.size() < 2)
    throw BasisError(BasisError::Kind::Empty, -1, -1, "basis needs v0 = 1 and at least one unit");
  for (const auto& e : elements)
    if (e.sig() != sig) throw AlgebraError("basis element signature mismatch");
  if (elements[0] != Multivector::scalar(sig, Rational(1)))
    throw BasisError(BasisError::Kind::FirstNotUnit, 0, -1, "v0 is not 1");
  int n = static_cast<int>(elements.size()) - 1;
  for (int s = 1; s <= n; ++s)
    if (!is_imaginary_unit(elements[s]))
      throw BasisError(BasisError::Kind::NotImaginaryUnit, s, -1,
                       "basis element " + std::to_string(s) + " is not an imaginary unit");
  for (int s = 1; s <= n; ++s)
    for (int t = s + 1; t <= n; ++t)
      if (!(elements[s] * elements[t] + elements[t] * elements[s]).is_zero())
        throw BasisError(BasisError::Kind::NotAnticommuting, s, t,
                         "basis elements " + std::to_string(s) + " and " + std::to_string(t) +
                             " do not anticommute");
  auto d = std::make_shared<Data>();
  d->sig = sig;
  d->v = std::move(elements);
  return HypercomplexBasis(std::move(d));
}

HypercomplexBasis HypercomplexBasis::paravector(int m) {
  Signature sig = make_signature(0, m);
  std::vector<Multivector> v{Multivector::scalar(sig, Rational(1))};
  for (int k = 1; k <= m; ++k) v.push_back(Multivector::generator(sig, k));
  return validate(sig, std::move(v));
}

HypercomplexBasis HypercomplexBasis::grade_h(int m, int h) {
  if (h % 4 != 1 || h > m)
    throw std::invalid_argument("grade basis needs h = 1 (mod 4) and h <= m");
  Signature sig = make_signature(0, m);
  std::vector<Multivector> v{Multivector::scalar(sig, Rational(1))};
  for (BladeMask k = 0; k < (BladeMask{1} << m); ++k)
    if (std::popcount(k) == h) v.push_back(Multivector::blade(sig, k));
  return validate(sig, std::move(v));
}

HypercomplexBasis HypercomplexBasis::w_h(int m, int h) {
  if (h % 4 != 2 || h > m)
    throw std::invalid_argument("w basis needs h = 2 (mod 4) and h <= m");
  Signature sig = make_signature(0, m);
  std::vector<Multivector> v{Multivector::scalar(sig, Rational(1))};
  for (int k = 1; k <= h; ++k) v.push_back(Multivector::generator(sig, k));
  v.push_back(Multivector::blade(sig, (BladeMask{1} << h) - 1));
  return validate(sig, std::move(v));
}

std::vector<Rational> HypercomplexBasis::coords(const Multivector& x) const {
  // The v_s are orthonormal for the blade-coordinate product, so projection
  // gives candidate coordinates; the span check rejects anything else.
  std::vector<Rational> c;
  c.reserve(d_->v.size());
  for (const auto& vs : d_->v) c.push_back(scalar_product(x, vs));
  if (from_coords(c) != x) throw AlgebraError("element outside the basis span");
  return c;
}

Multivector HypercomplexBasis::from_coords(const std::vector<Rational>& c) const {
  if (c.size() != d_->v.size()) throw AlgebraError("coordinate arity mismatch");
  Multivector x(d_->sig);
  for (size_t s = 0; s < c.size(); ++s) x = x + d_->v[s].scale(c[s]);
  return x;
}

bool HypercomplexBasis::operator==(const HypercomplexBasis& o) const {
  return d_ == o.d_ || (d_->sig == o.d_->sig && d_->v == o.d_->v);
}

int sigma_sign(int h, SubsetMask K) {
  SubsetMask below = K & ((SubsetMask{1} << h) - 1);
  return std::popcount(below) & 1;
}

Multivector torus_product(const TorusPoint& J, SubsetMask K, Signature sig) {
  Multivector out = Multivector::scalar(sig, Rational(1));
  for (int h = 1; h <= J.tau(); ++h)
    if (subset_has(K, h)) out = out * J[h];
  return out;
}

TorusPoint validate_torus(const StepList& T, const HypercomplexBasis& B,
                          std::vector<Multivector> J) {
  if (static_cast<int>(J.size()) != T.tau()) throw AlgebraError("torus point arity mismatch");
  if (T.N() != B.N()) throw AlgebraError("step list does not match basis dimension");
  for (int h = 1; h <= T.tau(); ++h) {
    auto c = B.coords(J[h - 1]);
    Rational n(0);
    for (int s = 0; s <= B.N(); ++s) {
      bool in_block = s >= T.block_lo(h) && s <= T.block_hi(h);
      if (!in_block && c[s] != 0) throw AlgebraError("torus component outside its block span");
      n += c[s] * c[s];
    }
    if (n != 1) throw AlgebraError("torus component is not a unit vector");
  }
  return TorusPoint{std::move(J)};
}

TorusPoint default_torus(const StepList& T, const HypercomplexBasis& B) {
  std::vector<Multivector> J;
  for (int h = 1; h <= T.tau(); ++h) J.push_back(B.v(T.block_lo(h)));
  return validate_torus(T, B, std::move(J));
}

TorusPoint torus_from_coords(const StepList& T, const HypercomplexBasis& B,
                             const std::vector<std::vector<Rational>>& blocks) {
  if (static_cast<int>(blocks.size()) != T.tau()) throw AlgebraError("torus point arity mismatch");
  std::vector<Multivector> J;
  for (int h = 1; h <= T.tau(); ++h) {
    const auto& c = blocks[h - 1];
    if (static_cast<int>(c.size()) != T.block_dim(h))
      throw AlgebraError("torus block coordinate arity mismatch");
    Multivector x(B.sig());
    for (int i = 0; i < T.block_dim(h); ++i) x = x + B.v(T.block_lo(h) + i).scale(c[i]);
    J.push_back(x);
  }
  return validate_torus(T, B, std::move(J));
}

Multivector rational_sphere_point(const HypercomplexBasis& B, int lo, int hi,
                                  std::uint64_t seed) {
  if (lo < 1 || hi > B.N() || lo > hi) throw std::out_of_range("bad block range");
  int d = hi - lo + 1;
  if (d == 1) return (seed & 1) ? -B.v(lo) : B.v(lo);
  // Stereographic image of a rational point u: the coordinates
  // (2u_1, ..., 2u_{d-1}, |u|^2 - 1) / (|u|^2 + 1) have exact unit norm.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> u;
  Rational s2(0);
  for (int i = 0; i < d - 1; ++i) {
    Rational ui = rat(num(rng), den(rng));
    u.push_back(ui);
    s2 += ui * ui;
  }
  Multivector x(B.sig());
  for (int i = 0; i < d - 1; ++i) x = x + B.v(lo + i).scale(2 * u[i] / (s2 + 1));
  x = x + B.v(hi).scale((s2 - 1) / (s2 + 1));
  return x;
}

Multivector rational_sphere_point(const HypercomplexBasis& B, const StepList& T, int h,
                                  std::uint64_t seed) {
  if (h < 1 || h > T.tau()) throw std::out_of_range("block index outside 1..tau");
  return rational_sphere_point(B, T.block_lo(h), T.block_hi(h), seed);
}

TorusPoint random_torus(const StepList& T, const HypercomplexBasis& B, std::uint64_t seed) {
  std::vector<Multivector> J;
  for (int h = 1; h <= T.tau(); ++h)
    J.push_back(rational_sphere_point(B, T, h, seed * 1000003u + static_cast<std::uint64_t>(h)));
  return validate_torus(T, B, std::move(J));
}

std::vector<std::vector<Rational>> decompose(const std::vector<Rational>& coords,
                                             const StepList& T) {
  if (static_cast<int>(coords.size()) != T.N() + 1)
    throw std::invalid_argument("coordinate arity does not match step list");
  std::vector<std::vector<Rational>> blocks;
  for (int h = 0; h <= T.tau(); ++h)
    blocks.emplace_back(coords.begin() + T.block_lo(h), coords.begin() + T.block_hi(h) + 1);
  return blocks;
}

std::vector<Rational> reassemble(const std::vector<std::vector<Rational>>& blocks,
                                 const StepList& T) {
  if (static_cast<int>(blocks.size()) != T.tau() + 1)
    throw std::invalid_argument("block count does not match step list");
  std::vector<Rational> coords;
  for (int h = 0; h <= T.tau(); ++h) {
    if (static_cast<int>(blocks[h].size()) != T.block_dim(h))
      throw std::invalid_argument("block dimension mismatch");
    coords.insert(coords.end(), blocks[h].begin(), blocks[h].end());
  }
  return coords;
}

}  // namespace treg
