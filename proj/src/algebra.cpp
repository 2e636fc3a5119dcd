#include "treg/algebra.hpp"

#include <bit>

namespace treg {

Signature make_signature(int p, int q) {
  if (p < 0 || q < 0 || p + q > kMaxGenerators)
    throw AlgebraError("signature out of range: Cl(" + std::to_string(p) + "," +
                       std::to_string(q) + ")");
  return Signature{p, q};
}

std::vector<int> blade_indices(BladeMask k) {
  std::vector<int> out;
  for (int i = 0; k != 0; ++i, k >>= 1)
    if (k & 1u) out.push_back(i + 1);
  return out;
}

BladeMask blade_from_indices(const std::vector<int>& indices, int m) {
  BladeMask k = 0;
  for (int i : indices) {
    if (i < 1 || i > m) throw AlgebraError("generator index out of range: " + std::to_string(i));
    BladeMask bit = BladeMask{1} << (i - 1);
    if (k & bit) throw AlgebraError("repeated generator index: " + std::to_string(i));
    k |= bit;
  }
  return k;
}

int blade_product_sign(BladeMask a, BladeMask b, const Signature& sig) {
  // Transpositions: pairs (i in a, j in b) with i > j.
  int swaps = 0;
  for (BladeMask t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
  // Shared generators contract; those above index p square to -1.
  int negatives = std::popcount((a & b) >> sig.p);
  return ((swaps + negatives) & 1) ? -1 : 1;
}

int conj_sign(BladeMask k) {
  int g = std::popcount(k) & 3;
  return (g == 0 || g == 3) ? 1 : -1;
}

Multivector Multivector::scalar(Signature sig, const Rational& c) {
  return blade(sig, 0, c);
}

Multivector Multivector::blade(Signature sig, BladeMask k, const Rational& c) {
  Multivector x(sig);
  x.add_term(k, c);
  return x;
}

Multivector Multivector::generator(Signature sig, int k) {
  if (k < 1 || k > sig.m()) throw AlgebraError("generator index out of range: " + std::to_string(k));
  return blade(sig, BladeMask{1} << (k - 1));
}

bool Multivector::is_real() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational Multivector::coefficient(BladeMask k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Rational> Multivector::as_rational() const {
  if (!is_real()) return std::nullopt;
  return scalar_part();
}

Multivector& Multivector::add_term(BladeMask k, const Rational& c) {
  if (sig_.m() < kMaxGenerators && (k >> sig_.m()) != 0)
    throw AlgebraError("blade outside signature");
  if (c == 0) return *this;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

Multivector Multivector::operator-() const {
  Multivector out(sig_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

Multivector Multivector::operator+(const Multivector& o) const {
  if (sig_ != o.sig_) throw AlgebraError("signature mismatch in +");
  Multivector out = *this;
  for (const auto& [k, c] : o.terms_) out.add_term(k, c);
  return out;
}

Multivector Multivector::operator-(const Multivector& o) const {
  if (sig_ != o.sig_) throw AlgebraError("signature mismatch in -");
  Multivector out = *this;
  for (const auto& [k, c] : o.terms_) out.add_term(k, -c);
  return out;
}

Multivector Multivector::operator*(const Multivector& o) const {
  if (sig_ != o.sig_) throw AlgebraError("signature mismatch in *");
  Multivector out(sig_);
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      Rational c = ca * cb;
      if (blade_product_sign(ka, kb, sig_) < 0) c = -c;
      out.add_term(ka ^ kb, c);
    }
  }
  return out;
}

Multivector Multivector::scale(const Rational& c) const {
  Multivector out(sig_);
  if (c == 0) return out;
  for (const auto& [k, t] : terms_) out.terms_.emplace(k, c * t);
  return out;
}

Multivector conj(const Multivector& x) {
  Multivector out(x.sig());
  for (const auto& [k, c] : x.terms()) out.add_term(k, conj_sign(k) < 0 ? -c : c);
  return out;
}

Multivector trace(const Multivector& x) { return x + conj(x); }

Multivector norm_n(const Multivector& x) { return x * conj(x); }

bool is_imaginary_unit(const Multivector& x) {
  return trace(x).is_zero() && norm_n(x) == Multivector::scalar(x.sig(), Rational(1));
}

bool in_quadratic_cone(const Multivector& x) {
  if (x.is_real()) return true;
  auto t = trace(x).as_rational();
  auto n = norm_n(x).as_rational();
  if (!t || !n) return false;
  return 4 * *n > (*t) * (*t);
}

Rational scalar_product(const Multivector& x, const Multivector& y) {
  if (x.sig() != y.sig()) throw AlgebraError("signature mismatch in scalar_product");
  Rational acc(0);
  const auto& a = x.terms();
  const auto& b = y.terms();
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) ++ia;
    else if (ib->first < ia->first) ++ib;
    else acc += (ia++)->second * (ib++)->second;
  }
  return acc;
}

Rational norm2(const Multivector& x) { return scalar_product(x, x); }

}  // namespace treg
