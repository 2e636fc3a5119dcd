#include "treg/poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace treg {

VarSpace VarSpace::make(std::vector<std::string> names, std::vector<VarRole> roles) {
  if (names.empty() || names.size() != roles.size())
    throw PolyError("variable space needs matching nonempty name and role lists");
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size()) throw PolyError("duplicate variable name");
  auto d = std::make_shared<Data>();
  d->names = std::move(names);
  d->roles = std::move(roles);
  return VarSpace(std::move(d));
}

int VarSpace::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (d_->names[i] == name) return i;
  return -1;
}

CliffordPoly CliffordPoly::constant(const VarSpace& vars, const Multivector& c) {
  CliffordPoly p(vars, c.sig());
  p.add_term(Exp(vars.size(), 0), c);
  return p;
}

CliffordPoly CliffordPoly::variable(const VarSpace& vars, Signature sig, int var) {
  if (var < 0 || var >= vars.size()) throw PolyError("variable index out of range");
  CliffordPoly p(vars, sig);
  Exp e(vars.size(), 0);
  e[var] = 1;
  p.add_term(e, Multivector::scalar(sig, Rational(1)));
  return p;
}

bool CliffordPoly::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.is_real(); });
}

bool CliffordPoly::is_polynomial() const {
  for (const auto& [e, c] : terms_)
    for (int x : e)
      if (x < 0) return false;
  return true;
}

Multivector CliffordPoly::coefficient(const Exp& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Multivector::zero(sig_) : it->second;
}

const std::pair<const Exp, Multivector>& CliffordPoly::leading() const {
  if (terms_.empty()) throw PolyError("zero polynomial has no leading term");
  return *terms_.rbegin();
}

int CliffordPoly::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

bool CliffordPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) != d) return false;
  return true;
}

CliffordPoly& CliffordPoly::add_term(const Exp& e, const Multivector& c) {
  if (static_cast<int>(e.size()) != vars_.size()) throw PolyError("exponent arity mismatch");
  if (c.sig() != sig_) throw PolyError("coefficient signature mismatch");
  for (int i = 0; i < vars_.size(); ++i)
    if (e[i] < 0 && vars_.role(i) != VarRole::Beta)
      throw PolyError("negative exponent on non-radial variable " + vars_.name(i));
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

CliffordPoly CliffordPoly::operator-() const {
  CliffordPoly out(vars_, sig_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

CliffordPoly CliffordPoly::operator+(const CliffordPoly& o) const {
  if (!(vars_ == o.vars_) || sig_ != o.sig_) throw PolyError("polynomial space mismatch in +");
  CliffordPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

CliffordPoly CliffordPoly::operator-(const CliffordPoly& o) const {
  if (!(vars_ == o.vars_) || sig_ != o.sig_) throw PolyError("polynomial space mismatch in -");
  CliffordPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

CliffordPoly CliffordPoly::operator*(const CliffordPoly& o) const {
  if (!(vars_ == o.vars_) || sig_ != o.sig_) throw PolyError("polynomial space mismatch in *");
  CliffordPoly out(vars_, sig_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exp e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

CliffordPoly CliffordPoly::scale(const Rational& c) const {
  CliffordPoly out(vars_, sig_);
  if (c == 0) return out;
  for (const auto& [e, t] : terms_) out.terms_.emplace(e, t.scale(c));
  return out;
}

CliffordPoly CliffordPoly::scale_left(const Multivector& x) const {
  CliffordPoly out(vars_, sig_);
  for (const auto& [e, c] : terms_) out.add_term(e, x * c);
  return out;
}

CliffordPoly CliffordPoly::scale_right(const Multivector& x) const {
  CliffordPoly out(vars_, sig_);
  for (const auto& [e, c] : terms_) out.add_term(e, c * x);
  return out;
}

CliffordPoly CliffordPoly::pow(int n) const {
  if (n < 0) throw PolyError("negative polynomial power");
  CliffordPoly acc = constant(vars_, Multivector::scalar(sig_, Rational(1)));
  for (int i = 0; i < n; ++i) acc = acc * *this;
  return acc;
}

CliffordPoly CliffordPoly::ddx(int var) const {
  if (var < 0 || var >= vars_.size()) throw PolyError("variable index out of range");
  CliffordPoly out(vars_, sig_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exp d = e;
    d[var] -= 1;
    out.add_term(d, c.scale(Rational(e[var])));
  }
  return out;
}

CliffordPoly CliffordPoly::mul_var_power(int var, int power) const {
  if (var < 0 || var >= vars_.size()) throw PolyError("variable index out of range");
  CliffordPoly out(vars_, sig_);
  for (const auto& [e, c] : terms_) {
    Exp d = e;
    d[var] += power;
    out.add_term(d, c);
  }
  return out;
}

Multivector CliffordPoly::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != vars_.size())
    throw PolyError("evaluation point arity mismatch");
  Multivector acc(sig_);
  for (const auto& [e, c] : terms_) {
    Rational m(1);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] < 0 && point[i] == 0)
        throw PolyError("evaluation of a negative power at zero");
      Rational base = e[i] > 0 ? point[i] : 1 / point[i];
      for (int k = 0; k < std::abs(e[i]); ++k) m *= base;
    }
    acc = acc + c.scale(m);
  }
  return acc;
}

bool CliffordPoly::operator==(const CliffordPoly& o) const {
  return vars_ == o.vars_ && sig_ == o.sig_ && terms_ == o.terms_;
}

CliffordPoly compose(const CliffordPoly& p, const VarSpace& target,
                     const std::vector<CliffordPoly>& images) {
  if (static_cast<int>(images.size()) != p.vars().size())
    throw PolyError("substitution needs one image per variable");
  if (!p.is_polynomial()) throw PolyError("substitution into negative exponents");
  for (const auto& im : images) {
    if (!(im.vars() == target) || im.sig() != p.sig())
      throw PolyError("substitution image on the wrong space");
    if (!im.is_real()) throw PolyError("substitution image must have real coefficients");
  }
  CliffordPoly one = CliffordPoly::constant(target, Multivector::scalar(p.sig(), Rational(1)));
  // Image powers are shared across monomials; growing them on demand keeps
  // the substitution linear in the number of distinct exponents.
  std::vector<std::vector<CliffordPoly>> powers(images.size(), std::vector<CliffordPoly>{one});
  auto power = [&](size_t i, int k) -> const CliffordPoly& {
    auto& cache = powers[i];
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<size_t>(k)];
  };
  CliffordPoly out(target, p.sig());
  for (const auto& [e, c] : p.terms()) {
    CliffordPoly m = one;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) m = m * power(i, e[i]);
    out = out + m.scale_right(c);
  }
  return out;
}

CliffordPoly rename(const CliffordPoly& p, const VarSpace& target,
                    const std::vector<int>& index_map) {
  if (static_cast<int>(index_map.size()) != p.vars().size())
    throw PolyError("rename needs one target index per variable");
  std::set<int> used;
  for (size_t i = 0; i < index_map.size(); ++i) {
    if (index_map[i] < 0 || index_map[i] >= target.size())
      throw PolyError("rename target index out of range");
    if (!used.insert(index_map[i]).second) throw PolyError("rename is not injective");
  }
  CliffordPoly out(target, p.sig());
  for (const auto& [e, c] : p.terms()) {
    Exp d(target.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) d[index_map[i]] = e[i];
    out.add_term(d, c);
  }
  return out;
}

CliffordPoly push_square(const CliffordPoly& p, int var) {
  if (var < 0 || var >= p.vars().size()) throw PolyError("variable index out of range");
  CliffordPoly out(p.vars(), p.sig());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] < 0 || e[var] % 2 != 0)
      throw PolyError("push_square needs even nonnegative exponents of " + p.vars().name(var));
    Exp d = e;
    d[var] /= 2;
    out.add_term(d, c);
  }
  return out;
}

DivisionResult divide(const CliffordPoly& p, const CliffordPoly& d) {
  if (!(p.vars() == d.vars()) || p.sig() != d.sig())
    throw PolyError("polynomial space mismatch in division");
  if (d.is_zero()) throw PolyError("division by the zero polynomial");
  if (!d.is_real()) throw PolyError("divisor must have real coefficients");
  if (!p.is_polynomial() || !d.is_polynomial())
    throw PolyError("division needs plain polynomials");
  const auto& [lead_e, lead_c] = d.leading();
  Rational lc = lead_c.scalar_part();
  CliffordPoly q(p.vars(), p.sig());
  CliffordPoly r(p.vars(), p.sig());
  // The remainder is eliminated term by term in place; copying it on every
  // step would square the cost on large numerators.
  std::map<Exp, Multivector, MonLess> rest(p.terms());
  while (!rest.empty()) {
    auto it = std::prev(rest.end());
    Exp e = it->first;
    bool divisible = true;
    Exp diff(e.size());
    for (size_t i = 0; i < e.size(); ++i) {
      diff[i] = e[i] - lead_e[i];
      if (diff[i] < 0) divisible = false;
    }
    if (!divisible) {
      r.add_term(e, it->second);
      rest.erase(it);
      continue;
    }
    Multivector qc = it->second.scale(1 / lc);
    q.add_term(diff, qc);
    for (const auto& [de, dc] : d.terms()) {
      Exp te(e.size());
      for (size_t i = 0; i < e.size(); ++i) te[i] = diff[i] + de[i];
      Multivector sub = qc.scale(-dc.scalar_part());
      auto [pos, inserted] = rest.emplace(te, sub);
      if (!inserted) {
        pos->second = pos->second + sub;
        if (pos->second.is_zero()) rest.erase(pos);
      }
    }
  }
  return {q, r};
}

}  // namespace treg
