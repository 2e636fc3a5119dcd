#include "treg/suite.hpp"

#include <functional>
#include <utility>

#include "treg/fueter.hpp"
#include "treg/io.hpp"
#include "treg/ops.hpp"
#include "treg/random.hpp"
#include "treg/tpoly.hpp"

namespace treg {

namespace {

bool glob_match(const std::string& pat, const std::string& str) {
  size_t p = 0, s = 0, star = std::string::npos, mark = 0;
  while (s < str.size()) {
    if (p < pat.size() && (pat[p] == '?' || pat[p] == str[s])) {
      ++p;
      ++s;
    } else if (p < pat.size() && pat[p] == '*') {
      star = p++;
      mark = s;
    } else if (star != std::string::npos) {
      p = star + 1;
      s = ++mark;
    } else {
      return false;
    }
  }
  while (p < pat.size() && pat[p] == '*') ++p;
  return p == pat.size();
}

bool id_matches(const std::string& filter, const std::string& id) {
  if (filter.empty()) return true;
  if (filter.find_first_of("*?") != std::string::npos) return glob_match(filter, id);
  return id.find(filter) != std::string::npos;
}

struct Runner {
  std::uint64_t seed;
  RunReport rep;

  Runner(std::uint64_t sd, std::string filter) : seed(sd) {
    rep.seed = sd;
    rep.filter = std::move(filter);
  }

  bool want(const std::string& id) const { return id_matches(rep.filter, id); }

  void add(const std::string& id, const std::string& anchor, std::string expected,
           std::string computed, bool pass) {
    if (!want(id)) return;
    ++(pass ? rep.passed : rep.failed);
    rep.results.push_back({id, anchor, std::move(expected), std::move(computed), pass});
  }

  void poly_eq(const std::string& id, const std::string& anchor, const CliffordPoly& expected,
               const CliffordPoly& computed) {
    if (!want(id)) return;
    add(id, anchor, poly_to_text(expected), poly_to_text(computed), expected == computed);
  }

  // Expected polynomial against a reduced numerator/denominator form: the
  // form must have divided out all radial denominators.
  void form_eq(const std::string& id, const std::string& anchor, const CliffordPoly& expected,
               const RationalForm& computed) {
    if (!want(id)) return;
    std::string got = poly_to_text(computed.num);
    if (!computed.is_polynomial()) got += "  [over a nonzero radial denominator]";
    add(id, anchor, poly_to_text(expected), got,
        computed.is_polynomial() && expected == computed.num);
  }

  void stem_eq(const std::string& id, const std::string& anchor, const StemFunction& expected,
               const StemFunction& computed) {
    if (!want(id)) return;
    add(id, anchor, stem_to_text(expected), stem_to_text(computed), expected == computed);
  }

  // A certified computation that may throw; exceptions count as failures.
  void poly_eq_try(const std::string& id, const std::string& anchor, const CliffordPoly& expected,
                   const std::function<CliffordPoly()>& compute) {
    if (!want(id)) return;
    try {
      poly_eq(id, anchor, expected, compute());
    } catch (const std::exception& e) {
      add(id, anchor, poly_to_text(expected), std::string("exception: ") + e.what(), false);
    }
  }

  // Exhaustive or randomized case batteries.
  struct Batch {
    int cases = 0;
    int bad = 0;
    std::string first;
    void record(bool ok, const std::string& label) {
      ++cases;
      if (!ok && bad++ == 0) first = label;
    }
  };

  void prop(const std::string& id, const std::string& anchor, const Batch& b) {
    if (!want(id)) return;
    std::string expected = "all " + std::to_string(b.cases) + " cases hold";
    std::string computed = b.bad == 0 ? expected
                                      : std::to_string(b.bad) + " of " + std::to_string(b.cases) +
                                            " cases fail; first: " + b.first;
    add(id, anchor, expected, computed, b.bad == 0);
  }
};

CliffordPoly real_terms(const VarSpace& vars, Signature sig,
                        std::vector<std::pair<Exp, long>> terms) {
  CliffordPoly p(vars, sig);
  for (auto& [e, c] : terms) p.add_term(e, Multivector::scalar(sig, Rational(c)));
  return p;
}

// Fixture for steps (0,3,6) over the paravector basis of R^7.
struct Cullen2 {
  StepList T;
  HypercomplexBasis B;
  VarSpace X;
  CliffordPoly x0, X1, X2, Q1, Q2;
};

Cullen2 make036() {
  StepList T({0, 3, 6});
  auto B = HypercomplexBasis::paravector(6);
  VarSpace X = x_space(T);
  Signature sig = B.sig();
  return {T,
          B,
          X,
          CliffordPoly::variable(X, sig, 0),
          block_linear(X, T, B, 1),
          block_linear(X, T, B, 2),
          block_norm2(X, T, sig, 1),
          block_norm2(X, T, sig, 2)};
}

// Fixture for steps (1,4,7) over the w-basis with seven imaginary units.
struct Mixed147 {
  StepList T;
  HypercomplexBasis B;
  VarSpace X;
  CliffordPoly x0, x1, X1, X2, Q1, Q2;
  Multivector e1;
};

Mixed147 make147() {
  StepList T({1, 4, 7});
  auto B = HypercomplexBasis::w_h(6, 6);
  VarSpace X = x_space(T);
  Signature sig = B.sig();
  return {T,
          B,
          X,
          CliffordPoly::variable(X, sig, 0),
          CliffordPoly::variable(X, sig, 1),
          block_linear(X, T, B, 1),
          block_linear(X, T, B, 2),
          block_norm2(X, T, sig, 1),
          block_norm2(X, T, sig, 2),
          B.v(1)};
}

// The running worked example 3 T_(2,1) over (0,3,6), written directly.
CliffordPoly worked_poly(const Cullen2& S) {
  return S.x0.pow(3) + S.x0.pow(2).scale(3) * S.X2 - S.x0.scale(3) * S.Q1 +
         S.x0.scale(6) * S.X1 * S.X2 - S.Q1.scale(3) * S.X2;
}

// Its stem: components a0^3 - 3 a0 b1^2, (3 a0^2 - 3 b1^2) b2, 6 a0 b1 b2.
StemFunction worked_stem(const Cullen2& S) {
  StemFunction F(S.T, S.B);
  VarSpace V = stem_space(S.T);
  Signature sig = S.B.sig();
  F.set_component(0b00, real_terms(V, sig, {{{3, 0, 0}, 1}, {{1, 2, 0}, -3}}));
  F.set_component(0b10, real_terms(V, sig, {{{2, 0, 1}, 3}, {{0, 2, 1}, -3}}));
  F.set_component(0b11, real_terms(V, sig, {{{1, 1, 1}, 6}}));
  return F;
}

HypercomplexBasis basis_for(const StepList& T) {
  return T.N() == 7 ? HypercomplexBasis::w_h(6, 6) : HypercomplexBasis::paravector(T.N());
}

std::vector<std::pair<Kappa, CliffordPoly>> family_pool(const StepList& T,
                                                        const HypercomplexBasis& B, int kmax) {
  std::vector<std::pair<Kappa, CliffordPoly>> pool;
  for (int k = 0; k <= kmax; ++k)
    for (auto& kp : family_Fk(T, B, k)) pool.push_back(kp);
  return pool;
}

std::string kappa_label(const Kappa& k) {
  std::string s = "(";
  for (size_t i = 0; i < k.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(k[i]);
  }
  return s + ")";
}

// c1: the ten printed expansions over (0,3,6), including both printed
// recursion combinations of the degree-5 member.
void run_c1(Runner& r) {
  auto S = make036();
  TKappaFamily fam(S.T, S.B);
  auto id = [](const char* k) { return std::string("c1.family036.k") + k; };
  auto anchor = [](const char* what) {
    return std::string(what) + " over steps (0,3,6) equals its reference expansion";
  };

  r.poly_eq(id("10"), anchor("T_(1,0)"), S.x0 + S.X1, fam.at({1, 0}));
  r.poly_eq(id("01"), anchor("T_(0,1)"), S.x0 + S.X2, fam.at({0, 1}));
  r.poly_eq(id("20"), anchor("T_(2,0)"), (S.x0 + S.X1).pow(2), fam.at({2, 0}));
  r.poly_eq(id("11"), anchor("2 T_(1,1)"), (S.x0 * S.X1 - S.x0 * S.X2 - S.X1 * S.X2).scale(2),
            fam.at({1, 1}).scale(2));
  r.poly_eq(id("02"), anchor("T_(0,2)"), (S.x0 + S.X2).pow(2), fam.at({0, 2}));
  r.poly_eq(id("30"), anchor("T_(3,0)"), (S.x0 + S.X1).pow(3), fam.at({3, 0}));
  r.poly_eq(id("21"), anchor("3 T_(2,1)"), worked_poly(S), fam.at({2, 1}).scale(3));
  r.poly_eq(id("12"), anchor("3 T_(1,2)"),
            S.x0.pow(3) + S.x0.pow(2).scale(3) * S.X1 - S.x0.scale(6) * S.X1 * S.X2 -
                S.x0.scale(3) * S.Q2 - S.X1.scale(3) * S.Q2,
            fam.at({1, 2}).scale(3));
  r.poly_eq(id("03"), anchor("T_(0,3)"), (S.x0 + S.X2).pow(3), fam.at({0, 3}));
  r.poly_eq(id("32"), anchor("10 T_(3,2)"),
            fam.at({2, 2}).scale(6) * (S.x0 + S.X1) + fam.at({3, 1}).scale(4) * (S.x0 - S.X2),
            fam.at({3, 2}).scale(10));
  r.poly_eq(id("32b"), anchor("10 T_(3,2), degree-split form"),
            fam.at({1, 2}).scale(3) * (S.x0.pow(2) + S.x0.scale(2) * S.X1 - S.Q1) +
                fam.at({2, 1}).scale(6) * (S.x0 * S.X1 + S.x0 * S.X2 - S.X1 * S.X2) +
                fam.at({3, 0}) * (S.x0.pow(2) - S.x0.scale(2) * S.X2 - S.Q2),
            fam.at({3, 2}).scale(10));
}

// c2: the printed expansions over (1,4,7).
void run_c2(Runner& r) {
  auto S = make147();
  TKappaFamily fam(S.T, S.B);
  auto id = [](const char* k) { return std::string("c2.family147.k") + k; };
  auto anchor = [](const char* what) {
    return std::string(what) + " over steps (1,4,7) equals its reference expansion";
  };
  CliffordPoly fueter = S.x1 - S.x0.scale_left(S.e1);

  r.poly_eq(id("100"), anchor("T_(1,0,0)"), fueter, fam.at({1, 0, 0}));
  r.poly_eq(id("010"), anchor("T_(0,1,0)"), S.x0 + S.X1, fam.at({0, 1, 0}));
  r.poly_eq(id("001"), anchor("T_(0,0,1)"), S.x0 + S.X2, fam.at({0, 0, 1}));
  r.poly_eq(id("200"), anchor("T_(2,0,0)"), fueter.pow(2), fam.at({2, 0, 0}));
  r.poly_eq(id("020"), anchor("T_(0,2,0)"), (S.x0 + S.X1).pow(2), fam.at({0, 2, 0}));
  r.poly_eq(id("002"), anchor("T_(0,0,2)"), (S.x0 + S.X2).pow(2), fam.at({0, 0, 2}));
  r.poly_eq(id("110"), anchor("T_(1,1,0)"),
            S.x0 * S.x1 - (S.x0 * S.X1).scale_left(S.e1) + S.x1 * S.X1, fam.at({1, 1, 0}));
  r.poly_eq(id("101"), anchor("T_(1,0,1)"),
            S.x0 * S.x1 - (S.x0 * S.X2).scale_left(S.e1) + S.x1 * S.X2, fam.at({1, 0, 1}));
  r.poly_eq(id("011"), anchor("T_(0,1,1)"), S.x0 * S.X1 - S.x0 * S.X2 - S.X1 * S.X2,
            fam.at({0, 1, 1}));
  r.poly_eq(id("121"), anchor("6 T_(1,2,1)"),
            fam.at({0, 1, 1}) * ((S.x0 * S.x1).scale(-2) -
                                 (S.x0 * S.X1).scale_left(S.e1).scale(2) + (S.x1 * S.X1).scale(2)) +
                fam.at({0, 2, 0}) * (S.x0 * S.x1 - (S.x0 * S.X2).scale_left(S.e1) + S.x1 * S.X2) +
                fam.at({1, 0, 1}) * (S.x0.pow(2) - S.x0.scale(2) * S.X1 - S.Q1) +
                fam.at({1, 1, 0}) *
                    (S.x0.scale(2) * S.X1 + S.x0.scale(2) * S.X2 + S.X1.scale(2) * S.X2),
            fam.at({1, 2, 1}).scale(6));
}

// c3: both pipelines annihilate the worked example.
void run_c3(Runner& r) {
  auto S = make036();
  CliffordPoly f = worked_poly(S);
  CliffordPoly zero(S.X, S.B.sig());
  r.form_eq("c3.kernels.dbar_x", "coordinate-level Cauchy-Riemann operator kills 3 T_(2,1)", zero,
            dbar_T_x(f, S.T, S.B));
  r.form_eq("c3.kernels.delta_x", "coordinate-level Laplacian kills 3 T_(2,1)", zero,
            delta_T_x(f, S.T, S.B));
  StemFunction F = extract_stem(f, S.T, S.B);
  StemFunction zstem(S.T, S.B);
  r.stem_eq("c3.kernels.dbar_stem", "stem-level Cauchy-Riemann operator kills the stem", zstem,
            dbar_T(F));
  r.stem_eq("c3.kernels.delta_stem", "stem-level Laplacian kills the stem", zstem, delta_T(F));
}

// c4: stem extraction at the torus point (e1, e4) and one coarsening step.
void run_c4(Runner& r) {
  auto S = make036();
  Signature sig = S.B.sig();
  TorusPoint J = validate_torus(
      S.T, S.B, {Multivector::generator(sig, 1), Multivector::generator(sig, 4)});
  StemFunction F = extract_stem(worked_poly(S), S.T, S.B, J);
  StemFunction W = worked_stem(S);
  r.poly_eq("c4.extract.f0", "component {} of the extracted stem", W.component(0b00),
            F.component(0b00));
  r.poly_eq("c4.extract.f2", "component {2} of the extracted stem", W.component(0b10),
            F.component(0b10));
  r.poly_eq("c4.extract.f12", "component {1,2} of the extracted stem", W.component(0b11),
            F.component(0b11));

  StemFunction G = tilde(F);
  StepList T2({3, 6});
  VarSpace V2 = stem_space(T2);
  CliffordPoly even = real_terms(V2, sig,
                                 {{{3, 0, 0, 0, 0}, 1},
                                  {{1, 2, 0, 0, 0}, -3},
                                  {{1, 0, 2, 0, 0}, -3},
                                  {{1, 0, 0, 2, 0}, -3}});
  CliffordPoly odd = real_terms(V2, sig,
                                {{{2, 0, 0, 0, 1}, 3},
                                 {{0, 2, 0, 0, 1}, -3},
                                 {{0, 0, 2, 0, 1}, -3},
                                 {{0, 0, 0, 2, 1}, -3}});
  for (int s = 1; s <= 3; ++s) {
    Exp e(5, 0);
    e[0] = 1;
    e[s] = 1;
    e[4] = 1;
    odd.add_term(e, S.B.v(s).scale(Rational(-6)));
  }
  r.poly_eq("c4.extract.tilde_even", "mirror component of the coarsened stem over (3,6)", even,
            G.component(0b0));
  r.poly_eq("c4.extract.tilde_odd", "radial component of the coarsened stem over (3,6)", odd,
            G.component(0b1));
}

// c5: Laplacians of coarser step lists on the same space.
void run_c5(Runner& r) {
  auto S = make036();
  CliffordPoly f = worked_poly(S);
  StepList T36({3, 6}), T6({6});
  CliffordPoly lap_golden = S.x0.scale(-12) + S.X2.scale(-12);
  r.form_eq("c5.laplace.two_step", "Laplacian of (3,6) on 3 T_(2,1) is -12 x0 - 12 x^2",
            lap_golden, delta_T_x(f, T36, S.B));
  r.form_eq("c5.laplace.flat", "Laplacian of (6) on 3 T_(2,1) is the same polynomial", lap_golden,
            delta_T_x(f, T6, S.B));

  TKappaFamily fam(S.T, S.B);
  CliffordPoly deep = fam.at({3, 2});
  CliffordPoly deg5_golden = S.x0.pow(3).scale(-4) - S.x0.pow(2).scale(4) * S.X1 +
                             S.x0.scale(8) * S.X1 * S.X2 + S.x0.scale(12) * S.Q2 +
                             S.X1.scale(4) * S.Q2;
  RationalForm once = delta_T_x(deep, T36, S.B);
  r.form_eq("c5.laplace.deg5", "Laplacian of (3,6) on T_(3,2)", deg5_golden, once);
  CliffordPoly zero(S.X, S.B.sig());
  r.form_eq("c5.laplace.deg5_square", "the same Laplacian applied twice vanishes", zero,
            delta_T_x(once.num, T36, S.B));
}

// c6: splitting the coarsened Cauchy-Riemann operator into the fine one
// plus the radial correction.
void run_c6(Runner& r) {
  auto S = make036();
  CliffordPoly f = worked_poly(S);
  StemFunction F = extract_stem(f, S.T, S.B);
  r.poly_eq("c6.decompose.g", "radial correction g of 3 T_(2,1) is 6 x0 x^2",
            S.x0.scale(6) * S.X2, induced_poly(dbar_tilde_correction(F)));
  CliffordPoly dbar_golden = S.x0.scale(-12) * S.X2;
  r.poly_eq("c6.decompose.dbar_stem",
            "stem-level coarsened Cauchy-Riemann value -12 x0 x^2 on 3 T_(2,1)", dbar_golden,
            induced_poly(dbar_T_tilde(F)));
  r.form_eq("c6.decompose.dbar_x", "coordinate-level operator of (3,6) agrees", dbar_golden,
            dbar_T_x(f, StepList({3, 6}), S.B));
}

// c7: certified transform positives.
void run_c7(Runner& r) {
  auto S = make036();
  r.poly_eq_try("c7.fueter.first036",
                "first transform of 3 T_(2,1) over (0,3,6), certified (3,6)-regular",
                S.x0.scale(-12) + S.X2.scale(-12),
                [&] { return first_transform(worked_poly(S), S.T, S.B); });
  TKappaFamily fam(S.T, S.B);
  r.poly_eq_try("c7.fueter.sigma2",
                "two-stage transform of T_(3,2) over (0,3,6) is 48 x0 + 16 x^1, certified",
                S.x0.scale(48) + S.X1.scale(16),
                [&] { return sigma_transform(fam.at({3, 2}), S.T, S.B, 2); });

  auto M = make147();
  TKappaFamily fam147(M.T, M.B);
  r.poly_eq_try("c7.fueter.first147",
                "first transform of T_(1,2,1) over (1,4,7), certified (4,7)-regular",
                (M.x0 * M.x1).scale(-4) + (M.x0 * M.X2).scale_left(M.e1).scale(4) -
                    (M.x1 * M.X2).scale(4),
                [&] { return first_transform(fam147.at({1, 2, 1}), M.T, M.B); });
}

// c8: flat-list controls, where the transform chain leaves a residue.
void run_c8(Runner& r) {
  auto S = make036();
  ControlReport c036 = negative_control(worked_poly(S), S.T, S.B);
  r.poly_eq("c8.control.residue036",
            "Cauchy-Riemann after the flat Laplacian on 3 T_(2,1) leaves 24",
            CliffordPoly::constant(S.X, Multivector::scalar(S.B.sig(), Rational(24))),
            c036.residue);

  auto M = make147();
  TKappaFamily fam(M.T, M.B);
  ControlReport c147 = negative_control(fam.at({1, 2, 1}), M.T, M.B);
  r.poly_eq("c8.control.residue147",
            "Cauchy-Riemann after the flat Laplacian on T_(1,2,1) leaves 8 x0 e1 + 8 x1",
            M.x0.scale_left(M.e1).scale(8) + M.x1.scale(8), c147.residue);
}

// Brute-force product sign for a pair of basis blades: concatenate the
// generator lists, bubble-sort while counting swaps, cancel equal pairs.
int oracle_sign(BladeMask a, BladeMask b, const Signature& sig) {
  std::vector<int> idx;
  for (int i = 0; i < 16; ++i)
    if (a & (BladeMask{1} << i)) idx.push_back(i);
  for (int i = 0; i < 16; ++i)
    if (b & (BladeMask{1} << i)) idx.push_back(i);
  int sign = 1;
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t i = 0; i + 1 < idx.size(); ++i)
      if (idx[i] > idx[i + 1]) {
        std::swap(idx[i], idx[i + 1]);
        sign = -sign;
        moved = true;
      }
  }
  for (size_t i = 0; i + 1 < idx.size();) {
    if (idx[i] == idx[i + 1]) {
      if (idx[i] >= sig.p) sign = -sign;
      idx.erase(idx.begin() + i, idx.begin() + static_cast<long>(i) + 2);
      if (i) --i;
    } else {
      ++i;
    }
  }
  return sign;
}

// c9: the randomized and exhaustive property batteries.
void run_c9(Runner& r) {
  if (r.want("c9.props.assoc")) {
    Runner::Batch b;
    Rng rng(r.seed + 1);
    for (int p = 0; p <= 6; ++p)
      for (int q = 0; p + q <= 6; ++q) {
        if (p + q == 0) continue;
        Signature sig{p, q};
        for (int it = 0; it < 5; ++it) {
          Multivector x = random_multivector(rng, sig, 4);
          Multivector y = random_multivector(rng, sig, 4);
          Multivector z = random_multivector(rng, sig, 4);
          bool ok = (x * y) * z == x * (y * z) && conj(x * y) == conj(y) * conj(x) &&
                    conj(conj(x)) == x;
          b.record(ok, "signature (" + std::to_string(p) + "," + std::to_string(q) + ") case " +
                           std::to_string(it));
        }
      }
    r.prop("c9.props.assoc", "product associativity and conjugation laws, all signatures up to 6",
           b);
  }

  if (r.want("c9.props.blade_sign")) {
    Runner::Batch b;
    for (int m = 1; m <= 5; ++m)
      for (int p = 0; p <= m; ++p) {
        Signature sig{p, m - p};
        for (BladeMask x = 0; x < (BladeMask{1} << m); ++x)
          for (BladeMask y = 0; y < (BladeMask{1} << m); ++y)
            b.record(blade_product_sign(x, y, sig) == oracle_sign(x, y, sig),
                     "blades " + std::to_string(x) + "," + std::to_string(y) + " in (" +
                         std::to_string(p) + "," + std::to_string(m - p) + ")");
      }
    r.prop("c9.props.blade_sign", "blade product sign against a bubble-sort oracle, all pairs", b);
  }

  if (r.want("c9.props.parity")) {
    Runner::Batch b;
    Rng rng(r.seed + 2);
    for (auto steps : {std::vector<int>{0, 3, 6}, {1, 3, 5}, {0, 2, 4, 6}}) {
      StepList T(steps);
      auto B = basis_for(T);
      for (int it = 0; it < 6; ++it) {
        StemFunction F = random_stem(rng, T, B);
        std::vector<std::pair<const char*, StemFunction>> outs;
        outs.emplace_back("dbar", dbar_T(F));
        outs.emplace_back("d", d_T(F));
        outs.emplace_back("delta", delta_T(F));
        outs.emplace_back("delta_sigma", delta_T_sigma(F, 1));
        outs.emplace_back("dbar_tilde", dbar_T_tilde(F));
        outs.emplace_back("d_tilde", d_T_tilde(F));
        for (auto& [name, out] : outs) {
          bool ok = true;
          try {
            StemFunction rebuilt(out.steps(), out.basis());
            for (const auto& [K, P] : out.components()) rebuilt.set_component(K, P);
            ok = rebuilt == out;
          } catch (const StemError&) {
            ok = false;
          }
          b.record(ok, std::string(name) + " on a random stem over " + kappa_label(steps));
        }
      }
    }
    r.prop("c9.props.parity", "every stem operator output satisfies the radial parity invariant",
           b);
  }

  if (r.want("c9.props.factor")) {
    Runner::Batch b;
    Rng rng(r.seed + 3);
    for (auto steps : {std::vector<int>{0, 3, 6}, {1, 3, 5}, {0, 2, 4, 6}}) {
      StepList T(steps);
      auto B = basis_for(T);
      for (int it = 0; it < 17; ++it) {
        StemFunction F = random_stem(rng, T, B);
        StemFunction lap = delta_T(F);
        b.record(d_T(dbar_T(F)) == lap, "d(dbar) over " + kappa_label(steps));
        b.record(dbar_T(d_T(F)) == lap, "dbar(d) over " + kappa_label(steps));
      }
    }
    r.prop("c9.props.factor", "the Laplacian factors through both Cauchy-Riemann operators", b);
  }

  if (r.want("c9.props.slice")) {
    Runner::Batch b;
    Rng rng(r.seed + 4);
    for (auto steps : {std::vector<int>{0, 3, 6}, {1, 3, 5}}) {
      StepList T(steps);
      auto B = basis_for(T);
      for (int it = 0; it < 6; ++it) {
        StemFunction F = random_stem(rng, T, B);
        CliffordPoly f = induced_poly(F);
        RationalForm db = dbar_T_x(f, T, B), d = d_T_x(f, T, B), lap = delta_T_x(f, T, B);
        for (int jt = 0; jt < 3; ++jt) {
          TorusPoint J = random_torus(T, B, rng.raw());
          SlicePoly fj = slice_restrict(f, T, B, J);
          std::string label = "stem " + std::to_string(it) + ", torus point " +
                              std::to_string(jt) + " over " + kappa_label(steps);
          b.record(db.is_polynomial() &&
                       slice_restrict(db.num, T, B, J).poly == dbar_J(fj, T, B),
                   "dbar: " + label);
          b.record(d.is_polynomial() && slice_restrict(d.num, T, B, J).poly == d_J(fj, T, B),
                   "d: " + label);
          b.record(lap.is_polynomial() &&
                       slice_restrict(lap.num, T, B, J).poly == delta_J(fj, T, B),
                   "delta: " + label);
        }
      }
    }
    r.prop("c9.props.slice", "operators restrict to the slice operators at rational torus points",
           b);
  }

  if (r.want("c9.props.represent")) {
    Runner::Batch b;
    Rng rng(r.seed + 5);
    for (auto steps : {std::vector<int>{0, 3, 6}, {1, 3, 5}}) {
      StepList T(steps);
      auto B = basis_for(T);
      for (int it = 0; it < 2; ++it) {
        StemFunction F = random_stem(rng, T, B);
        CliffordPoly f = induced_poly(F);
        for (int jt = 0; jt < 25; ++jt) {
          TorusPoint J = random_torus(T, B, rng.raw());
          StemFunction back = extract_stem(f, T, B, J);
          b.record(back == F && induced_poly(back) == f,
                   "stem " + std::to_string(it) + ", torus point " + std::to_string(jt) +
                       " over " + kappa_label(steps));
        }
      }
    }
    r.prop("c9.props.represent",
           "stem recovery from slice values is exact at random rational torus points", b);
  }

  if (r.want("c9.props.bessel")) {
    Runner::Batch b;
    for (int n = 0; n <= 8; ++n) {
      b.record(bessel_b(n, n) == 1, "b(n,n) at n=" + std::to_string(n));
      for (int ell = 0; ell <= n; ++ell) {
        std::string at = " at n=" + std::to_string(n) + ", l=" + std::to_string(ell);
        b.record(bessel_b(n + 1, ell) ==
                     (ell - 2 * n - 1) * bessel_b(n, ell) + bessel_b(n, ell - 1),
                 "three-term recurrence" + at);
        b.record(ell * (ell - 2 * n - 1) * bessel_b(n, ell) +
                         2 * (ell - n - 1) * bessel_b(n, ell - 1) ==
                     0,
                 "same-row identity" + at);
        if (ell <= n - 1)
          b.record(bessel_b(n - 1, ell - 1) == bessel_b(n, ell) + (ell + 1) * bessel_b(n, ell + 1),
                   "upward identity" + at);
      }
    }
    r.prop("c9.props.bessel", "radial expansion coefficient recurrences up to order 8", b);
  }

  if (r.want("c9.props.sigma_levels")) {
    Runner::Batch b;
    Rng rng(r.seed + 6);
    for (auto steps : {std::vector<int>{0, 3, 6}, {1, 3, 5}, {0, 2, 4, 6}}) {
      StepList T(steps);
      auto B = basis_for(T);
      for (int it = 0; it < 15; ++it) {
        StemFunction F = random_stem(rng, T, B);
        CliffordPoly f = induced_poly(F);
        for (int sigma = 1; sigma <= T.tau(); ++sigma) {
          RationalForm lhs = delta_T_x(f, T.suffix(sigma), B);
          b.record(lhs.is_polynomial() && lhs.num == induced_poly(delta_T_sigma(F, sigma)),
                   "sigma=" + std::to_string(sigma) + " over " + kappa_label(steps));
        }
      }
    }
    r.prop("c9.props.sigma_levels",
           "coarsened Laplacians agree between the stem and coordinate pipelines", b);
  }

  if (r.want("c9.props.fpower")) {
    Runner::Batch b;
    std::vector<std::pair<std::vector<int>, int>> pools = {
        {{0, 3, 6}, 4}, {{1, 4, 7}, 2}, {{0, 5, 6}, 2}, {{2, 4}, 2}};
    for (auto& [steps, kmax] : pools) {
      StepList T(steps);
      auto B = basis_for(T);
      for (auto& [kappa, f] : family_pool(T, B, kmax)) {
        StemFunction F = extract_stem(f, T, B);
        for (int n = 1; n <= 3; ++n) {
          StemFunction nested = F;
          for (int i = 0; i < n; ++i) nested = delta_T_sigma(nested, 1);
          bool ok = nested == f_power(F, n).scale(iterate_scale(T, n));
          b.record(ok, "kappa " + kappa_label(kappa) + ", n=" + std::to_string(n) + " over " +
                           kappa_label(steps));
        }
      }
    }
    r.prop("c9.props.fpower",
           "closed-form radial powers match iterated coarsened Laplacians for n up to 3", b);
  }

  if (r.want("c9.props.vanish")) {
    Runner::Batch b;
    std::vector<std::pair<std::vector<int>, int>> pools = {
        {{0, 3, 6}, 4}, {{1, 4, 7}, 3}, {{0, 5, 6}, 3}, {{0, 3}, 6},
        {{1, 4}, 4},    {{2, 5}, 3},    {{0, 1, 3}, 4}};
    for (auto& [steps, kmax] : pools) {
      StepList T(steps);
      auto B = basis_for(T);
      StepList T1 = T.suffix(1);
      int n1 = (T.t(1) - T.t(0) - 1) / 2;
      for (auto& [kappa, f] : family_pool(T, B, kmax)) {
        bool ok = true;
        CliffordPoly cur = f;
        for (int i = 0; i <= n1 && ok; ++i) {
          RationalForm form = delta_T_x(cur, T1, B);
          ok = form.is_polynomial();
          cur = form.num;
        }
        ok = ok && cur.is_zero();
        b.record(ok, "kappa " + kappa_label(kappa) + " over " + kappa_label(steps));
      }
    }
    r.prop("c9.props.vanish",
           "the coarsened Laplacian nilpotency order matches the first block gap", b);
  }
}

// c10: strong regularity and full certified transform chains for whole
// families.
void run_c10(Runner& r) {
  std::vector<std::tuple<const char*, std::vector<int>, int>> pools = {
      {"c10.closure.family036", {0, 3, 6}, 4}, {"c10.closure.family147", {1, 4, 7}, 3}};
  for (auto& [id, steps, kmax] : pools) {
    if (!r.want(id)) continue;
    StepList T(steps);
    auto B = basis_for(T);
    StepList flat({T.N()});
    Runner::Batch b;
    for (auto& [kappa, f] : family_pool(T, B, kmax)) {
      bool ok = is_T_regular(f, T, B) && is_t_function(f, T, B);
      if (ok) {
        try {
          CliffordPoly out = sigma_transform(f, T, B, T.tau());
          ok = is_T_regular(out, flat, B) && is_t_function(out, T, B);
        } catch (const std::exception&) {
          ok = false;
        }
      }
      b.record(ok, "kappa " + kappa_label(kappa));
    }
    r.prop(id,
           std::string("every member with degree up to ") + std::to_string(kmax) + " over " +
               kappa_label(steps) + " is strongly regular and certifies through all stages",
           b);
  }
}

}  // namespace

RunReport run_reference_suite(std::uint64_t seed, const std::string& filter) {
  Runner r(seed, filter);
  run_c1(r);
  run_c2(r);
  run_c3(r);
  run_c4(r);
  run_c5(r);
  run_c6(r);
  run_c7(r);
  run_c8(r);
  run_c9(r);
  run_c10(r);
  return r.rep;
}

std::string report_to_text(const RunReport& rep) {
  std::string out;
  for (const auto& c : rep.results) {
    out += (c.pass ? "[PASS] " : "[FAIL] ") + c.id + "  " + c.anchor + "\n";
    if (!c.pass) {
      out += "  expected: " + c.expected + "\n";
      out += "  computed: " + c.computed + "\n";
    }
  }
  out += "passed " + std::to_string(rep.passed) + ", failed " + std::to_string(rep.failed) +
         " (seed " + std::to_string(rep.seed);
  if (!rep.filter.empty()) out += ", filter '" + rep.filter + "'";
  out += ")\n";
  return out;
}

nlohmann::json report_to_json(const RunReport& rep) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : rep.results)
    checks.push_back({{"id", c.id},
                      {"anchor", c.anchor},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"pass", c.pass}});
  return {{"seed", rep.seed},     {"filter", rep.filter},     {"passed", rep.passed},
          {"failed", rep.failed}, {"all_pass", rep.all_pass()}, {"checks", checks}};
}

}  // namespace treg
