#include "treg/io.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

#include "treg/blocks.hpp"
#include "treg/rational.hpp"

namespace treg {

namespace {

using nlohmann::json;

std::vector<int> mask_to_indices(BladeMask mask) {
  std::vector<int> idx;
  for (int i = 0; i < 32; ++i)
    if (mask & (BladeMask{1} << i)) idx.push_back(i + 1);
  return idx;
}

BladeMask indices_to_mask(const std::vector<int>& idx) {
  BladeMask mask = 0;
  for (int i : idx) {
    if (i < 1 || i > 32) throw IoError("blade index out of range: " + std::to_string(i));
    BladeMask bit = BladeMask{1} << (i - 1);
    if (mask & bit) throw IoError("repeated blade index: " + std::to_string(i));
    mask |= bit;
  }
  return mask;
}

Signature sig_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw IoError("signature must be a [p, q] pair");
  return Signature{j[0].get<int>(), j[1].get<int>()};
}

VarRole role_from_name(const std::string& name) {
  if (!name.empty()) {
    if (name[0] == 'x') return VarRole::X;
    if (name[0] == 'a') return VarRole::Alpha;
    if (name[0] == 'b') return VarRole::Beta;
  }
  throw IoError("cannot infer variable role from name: " + name);
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

// Splits on " + " at paren depth zero.
std::vector<std::string> split_terms(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (depth == 0 && s.compare(i, 3, " + ") == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 3;
      i += 2;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string blade_text(BladeMask mask) {
  std::vector<int> idx = mask_to_indices(mask);
  bool single = std::all_of(idx.begin(), idx.end(), [](int i) { return i <= 9; });
  std::string s = "e";
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i && !single) s += '_';
    s += std::to_string(idx[i]);
  }
  return s;
}

BladeMask blade_from_text(const std::string& tok) {
  if (tok.size() < 2 || tok[0] != 'e') throw IoError("bad blade token: " + tok);
  std::vector<int> idx;
  std::string body = tok.substr(1);
  if (body.find('_') != std::string::npos) {
    size_t pos = 0;
    while (pos <= body.size()) {
      size_t next = body.find('_', pos);
      std::string part = body.substr(pos, next == std::string::npos ? next : next - pos);
      if (part.empty()) throw IoError("bad blade token: " + tok);
      idx.push_back(std::stoi(part));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
  } else {
    for (char c : body) {
      if (c < '1' || c > '9') throw IoError("bad blade token: " + tok);
      idx.push_back(c - '0');
    }
  }
  return indices_to_mask(idx);
}

}  // namespace

json mv_to_json(const Multivector& x) {
  json terms = json::array();
  for (const auto& [mask, c] : x.terms())
    terms.push_back({{"blade", mask_to_indices(mask)}, {"coeff", rat_to_string(c)}});
  return {{"signature", {x.sig().p, x.sig().q}}, {"terms", terms}};
}

Multivector mv_from_json(const json& j) {
  if (!j.is_object() || !j.contains("signature") || !j.contains("terms"))
    throw IoError("multivector JSON needs \"signature\" and \"terms\"");
  Signature sig = sig_from_json(j["signature"]);
  Multivector x = Multivector::zero(sig);
  for (const auto& t : j["terms"]) {
    if (!t.contains("blade") || !t.contains("coeff")) throw IoError("bad multivector term");
    BladeMask mask = indices_to_mask(t["blade"].get<std::vector<int>>());
    if (mask >= (BladeMask{1} << (sig.p + sig.q)))
      throw IoError("blade index exceeds the algebra dimension");
    try {
      x.add_term(mask, rat_from_string(t["coeff"].get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw IoError(e.what());
    }
  }
  return x;
}

json poly_to_json(const CliffordPoly& p) {
  json vars = json::array();
  for (int i = 0; i < p.vars().size(); ++i) vars.push_back(p.vars().name(i));
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exps", e}, {"coeff", mv_to_json(c)}});
  return {{"vars", vars}, {"signature", {p.sig().p, p.sig().q}}, {"terms", terms}};
}

CliffordPoly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("signature") || !j.contains("terms"))
    throw IoError("polynomial JSON needs \"vars\", \"signature\" and \"terms\"");
  std::vector<std::string> names = j["vars"].get<std::vector<std::string>>();
  std::vector<VarRole> roles;
  for (const auto& n : names) roles.push_back(role_from_name(n));
  VarSpace vars = VarSpace::make(names, roles);
  Signature sig = sig_from_json(j["signature"]);
  CliffordPoly p = CliffordPoly::constant(vars, Multivector::zero(sig));
  for (const auto& t : j["terms"]) {
    if (!t.contains("exps") || !t.contains("coeff")) throw IoError("bad polynomial term");
    Exp e = t["exps"].get<Exp>();
    if (static_cast<int>(e.size()) != vars.size())
      throw IoError("exponent vector length does not match the variable list");
    Multivector c = mv_from_json(t["coeff"]);
    if (!(c.sig() == sig)) throw IoError("coefficient signature differs from the polynomial's");
    try {
      p.add_term(e, c);
    } catch (const PolyError& err) {
      throw IoError(err.what());
    }
  }
  return p;
}

json stem_to_json(const StemFunction& f) {
  json steps = json::array();
  for (int i = 0; i <= f.tau(); ++i) steps.push_back(f.steps().t(i));
  json comps = json::array();
  for (const auto& [K, P] : f.components()) {
    std::vector<int> idx;
    for (int h = 1; h <= f.tau(); ++h)
      if (subset_has(K, h)) idx.push_back(h);
    comps.push_back({{"K", idx}, {"poly", poly_to_json(P)}});
  }
  return {{"steps", steps}, {"components", comps}};
}

StemFunction stem_from_json(const json& j, const HypercomplexBasis& basis) {
  if (!j.is_object() || !j.contains("steps") || !j.contains("components"))
    throw IoError("stem JSON needs \"steps\" and \"components\"");
  StepList T(j["steps"].get<std::vector<int>>());
  if (T.N() != basis.N()) throw IoError("step list does not span the basis");
  StemFunction f(T, basis);
  for (const auto& c : j["components"]) {
    if (!c.contains("K") || !c.contains("poly")) throw IoError("bad stem component");
    SubsetMask K = 0;
    for (int h : c["K"].get<std::vector<int>>()) {
      if (h < 1 || h > T.tau()) throw IoError("component index out of range");
      K |= SubsetMask{1} << (h - 1);
    }
    try {
      f.set_component(K, poly_from_json(c["poly"]));
    } catch (const StemError& e) {
      throw IoError(e.what());
    }
  }
  return f;
}

std::string mv_to_text(const Multivector& x) {
  if (x.terms().empty()) return "0";
  std::string out;
  for (const auto& [mask, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    out += rat_to_string(c);
    if (mask) out += " " + blade_text(mask);
  }
  return out;
}

Multivector mv_from_text(const std::string& text, Signature sig) {
  Multivector x = Multivector::zero(sig);
  for (const std::string& raw : split_terms(trim(text))) {
    std::vector<std::string> tok = split_ws(raw);
    if (tok.empty() || tok.size() > 2) throw IoError("bad multivector term: " + raw);
    Rational c;
    try {
      c = rat_from_string(tok[0]);
    } catch (const std::invalid_argument& e) {
      throw IoError(e.what());
    }
    BladeMask mask = tok.size() == 2 ? blade_from_text(tok[1]) : 0;
    if (mask >= (BladeMask{1} << (sig.p + sig.q)))
      throw IoError("blade index exceeds the algebra dimension");
    x.add_term(mask, c);
  }
  return x;
}

std::string poly_to_text(const CliffordPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + mv_to_text(c) + ")";
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out += " " + p.vars().name(static_cast<int>(i));
      if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

CliffordPoly poly_from_text(const std::string& text, const VarSpace& vars, Signature sig) {
  CliffordPoly p = CliffordPoly::constant(vars, Multivector::zero(sig));
  std::string body = trim(text);
  if (body == "0") return p;
  for (const std::string& raw : split_terms(body)) {
    std::string term = trim(raw);
    if (term.empty() || term[0] != '(') throw IoError("bad polynomial term: " + raw);
    size_t close = term.find(')');
    if (close == std::string::npos) throw IoError("unbalanced parens in: " + raw);
    Multivector c = mv_from_text(term.substr(1, close - 1), sig);
    Exp e(vars.size(), 0);
    for (const std::string& tok : split_ws(term.substr(close + 1))) {
      size_t caret = tok.find('^');
      std::string name = tok.substr(0, caret);
      int k = 1;
      if (caret != std::string::npos) {
        try {
          k = std::stoi(tok.substr(caret + 1));
        } catch (const std::exception&) {
          throw IoError("bad exponent in token: " + tok);
        }
      }
      int idx = vars.index_of(name);
      if (idx < 0) throw IoError("unknown variable: " + name);
      e[idx] += k;
    }
    try {
      p.add_term(e, c);
    } catch (const PolyError& err) {
      throw IoError(err.what());
    }
  }
  return p;
}

std::string stem_to_text(const StemFunction& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [K, P] : f.components()) {
    if (!out.empty()) out += "\n";
    out += "K={";
    bool first = true;
    for (int h = 1; h <= f.tau(); ++h) {
      if (!subset_has(K, h)) continue;
      if (!first) out += ",";
      out += std::to_string(h);
      first = false;
    }
    out += "}: " + poly_to_text(P);
  }
  return out;
}

namespace {

struct GroupedTerm {
  bool negative = false;  // real negative coefficient, folded into the join
  std::string body;
};

// Greedy peeling: the leading monomial must concentrate each block's degree
// on the block's last variable (the leading variable of |x^u|^2 and x^u);
// that pins down the factorisation mirror * |x^u|^(2q_u) * C * x^u and the
// exact constant C, which is subtracted off. Leading monomials strictly
// decrease, so this terminates; any mismatch aborts to the expanded form.
std::optional<std::string> try_grouped(const CliffordPoly& p, const StepList& T,
                                       const HypercomplexBasis& B) {
  VarSpace X = x_space(T);
  if (!(p.vars() == X)) return std::nullopt;
  if (p.is_zero()) return "0";

  std::vector<GroupedTerm> parts;
  CliffordPoly work = p;
  for (int guard = 0; !work.is_zero(); ++guard) {
    if (guard > 4096) return std::nullopt;
    const auto& [mon, c] = *work.terms().rbegin();

    std::vector<int> d(T.tau() + 1, 0);
    for (int u = 1; u <= T.tau(); ++u) {
      for (int s = T.block_lo(u); s < T.block_hi(u); ++s)
        if (mon[s] != 0) return std::nullopt;
      d[u] = mon[T.block_hi(u)];
      if (d[u] < 0) return std::nullopt;
    }

    Multivector C = c;
    for (int u = T.tau(); u >= 1; --u)
      if (d[u] & 1) C = C * (-B.v(T.block_hi(u)));

    CliffordPoly tp = CliffordPoly::constant(X, C);
    for (int u = 1; u <= T.tau(); ++u)
      if (d[u] & 1) tp = tp * block_linear(X, T, B, u);
    Exp mirror(X.size(), 0);
    for (int s = 0; s <= T.t(0); ++s) mirror[s] = mon[s];
    CliffordPoly real_part = CliffordPoly::constant(X, Multivector::zero(B.sig()));
    real_part.add_term(mirror, Multivector::scalar(B.sig(), 1));
    for (int u = 1; u <= T.tau(); ++u)
      if (d[u] / 2 > 0) real_part = real_part * block_norm2(X, T, B.sig(), u).pow(d[u] / 2);
    tp = real_part * tp;

    CliffordPoly next = work - tp;
    if (!next.is_zero() && !MonLess{}(next.terms().rbegin()->first, mon)) return std::nullopt;
    work = next;

    GroupedTerm g;
    std::vector<std::string> factors;
    std::optional<Rational> cr = C.as_rational();
    if (cr) {
      Rational r = *cr;
      if (r < 0) {
        g.negative = true;
        r = -r;
      }
      if (r != 1) factors.push_back(rat_to_string(r));
    } else {
      factors.push_back("(" + mv_to_text(C) + ")");
    }
    for (int s = 0; s <= T.t(0); ++s) {
      if (mirror[s] == 0) continue;
      std::string f = X.name(s);
      if (mirror[s] != 1) f += "^" + std::to_string(mirror[s]);
      factors.push_back(f);
    }
    for (int u = 1; u <= T.tau(); ++u)
      if (d[u] / 2 > 0)
        factors.push_back("|x^" + std::to_string(u) + "|^" + std::to_string(2 * (d[u] / 2)));
    for (int u = 1; u <= T.tau(); ++u)
      if (d[u] & 1) factors.push_back("x^" + std::to_string(u));
    if (factors.empty()) factors.push_back("1");
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) g.body += " ";
      g.body += factors[i];
    }
    parts.push_back(std::move(g));
  }

  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i == 0)
      out += parts[i].negative ? "-" : "";
    else
      out += parts[i].negative ? " - " : " + ";
    out += parts[i].body;
  }
  return out;
}

}  // namespace

std::string grouped_text(const CliffordPoly& p, const StepList& T, const HypercomplexBasis& B) {
  std::optional<std::string> g = try_grouped(p, T, B);
  return g ? *g : poly_to_text(p);
}

}  // namespace treg
