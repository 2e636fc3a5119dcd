#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "treg/fueter.hpp"
#include "treg/io.hpp"
#include "treg/ops.hpp"
#include "treg/suite.hpp"
#include "treg/tpoly.hpp"

using namespace treg;

namespace {

// Bad command-line input: exits 2. Failed mathematical checks exit 1.
struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "paravector:6", "vh:6,5" or "wh:6,6".
HypercomplexBasis parse_basis(const std::string& spec) {
  size_t colon = spec.find(':');
  if (colon == std::string::npos) throw UsageFailure("bad basis spec: " + spec);
  std::string kind = spec.substr(0, colon);
  std::vector<int> args;
  std::stringstream in(spec.substr(colon + 1));
  std::string tok;
  while (std::getline(in, tok, ','))
    try {
      args.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw UsageFailure("bad basis argument: " + tok);
    }
  try {
    if (kind == "paravector" && args.size() == 1) return HypercomplexBasis::paravector(args[0]);
    if (kind == "vh" && args.size() == 2) return HypercomplexBasis::grade_h(args[0], args[1]);
    if (kind == "wh" && args.size() == 2) return HypercomplexBasis::w_h(args[0], args[1]);
  } catch (const BasisError& e) {
    throw UsageFailure(e.what());
  }
  throw UsageFailure("bad basis spec: " + spec +
                     " (expected paravector:<m>, vh:<m>,<h> or wh:<m>,<h>)");
}

std::vector<int> parse_ints(const std::string& s, const char* what) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ','))
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw UsageFailure(std::string("bad ") + what + " entry: " + tok);
    }
  if (out.empty()) throw UsageFailure(std::string("empty ") + what);
  return out;
}

StepList parse_steps(const std::string& s) {
  try {
    return StepList(parse_ints(s, "steps"));
  } catch (const BasisError& e) {
    throw UsageFailure(e.what());
  }
}

nlohmann::json load_json(const std::string& file, const std::string& inline_text,
                         const char* what) {
  std::string text = inline_text;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw UsageFailure(std::string("cannot open ") + what + " file: " + file);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageFailure(std::string("bad ") + what + " JSON: " + e.what());
  }
}

// Shared input options: a family member --kappa (over --gen-steps when the
// polynomial was built over a finer list than it is checked against), or an
// explicit polynomial as JSON.
struct PolyInput {
  std::string kappa, gen_steps, scale = "1";
  std::string file, inline_json;

  void attach(CLI::App* cmd) {
    auto* k = cmd->add_option("--kappa", kappa, "family exponent, e.g. 2,1");
    cmd->add_option("--gen-steps", gen_steps,
                    "steps the --kappa member is generated over (default: --steps)");
    cmd->add_option("--scale", scale, "rational factor applied to the --kappa member");
    auto* f = cmd->add_option("--poly-file", file, "polynomial JSON file");
    auto* j = cmd->add_option("--poly-json", inline_json, "inline polynomial JSON");
    f->excludes(j)->excludes(k);
    j->excludes(k);
  }

  CliffordPoly load(const StepList& T, const HypercomplexBasis& B) const {
    if (!kappa.empty()) {
      StepList gen = gen_steps.empty() ? T : parse_steps(gen_steps);
      try {
        CliffordPoly p = t_kappa(gen, B, parse_ints(kappa, "kappa"));
        return p.scale(rat_from_string(scale));
      } catch (const std::invalid_argument& e) {
        throw UsageFailure(e.what());
      }
    }
    if (file.empty() && inline_json.empty())
      throw UsageFailure("need one of --kappa, --poly-file or --poly-json");
    try {
      return poly_from_json(load_json(file, inline_json, "polynomial"));
    } catch (const IoError& e) {
      throw UsageFailure(e.what());
    }
  }
};

struct StemInput {
  std::string file, inline_json;

  void attach(CLI::App* cmd) {
    auto* f = cmd->add_option("--stem-file", file, "stem JSON file");
    auto* j = cmd->add_option("--stem-json", inline_json, "inline stem JSON");
    f->excludes(j);
  }

  StemFunction load(const HypercomplexBasis& B) const {
    if (file.empty() && inline_json.empty())
      throw UsageFailure("need one of --stem-file or --stem-json");
    try {
      return stem_from_json(load_json(file, inline_json, "stem"), B);
    } catch (const IoError& e) {
      throw UsageFailure(e.what());
    }
  }
};

std::string render_poly(const CliffordPoly& p, bool expanded, const StepList& T,
                        const HypercomplexBasis& B) {
  return expanded ? poly_to_text(p) : grouped_text(p, T, B);
}

int g_exit = 0;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculus of T-regular functions over Clifford algebras"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");
  app.fallthrough();

  // tpoly: generate family members.
  auto* tp = app.add_subcommand("tpoly", "generate family polynomials");
  std::string tp_basis, tp_steps, tp_kappa, tp_scale = "1";
  int tp_family = -1;
  bool tp_expanded = false;
  tp->add_option("--basis", tp_basis, "paravector:<m>, vh:<m>,<h> or wh:<m>,<h>")->required();
  tp->add_option("--steps", tp_steps, "step list, e.g. 0,3,6")->required();
  auto* tpk = tp->add_option("--kappa", tp_kappa, "member exponent, e.g. 2,1");
  tp->add_option("--scale", tp_scale, "rational factor applied to the member");
  tp->add_option("--family", tp_family, "list every member of this total degree")
      ->excludes(tpk);
  tp->add_flag("--expanded", tp_expanded, "print the expanded canonical form");
  tp->callback([&] {
    auto B = parse_basis(tp_basis);
    StepList T = parse_steps(tp_steps);
    try {
      if (tp_family >= 0) {
        auto fam = family_Fk(T, B, tp_family);
        if (json) {
          nlohmann::json out = nlohmann::json::array();
          for (auto& [k, p] : fam) out.push_back({{"kappa", k}, {"poly", poly_to_json(p)}});
          std::cout << out.dump(2) << "\n";
        } else {
          for (auto& [k, p] : fam) {
            std::cout << "kappa (";
            for (size_t i = 0; i < k.size(); ++i) std::cout << (i ? "," : "") << k[i];
            std::cout << "): " << render_poly(p, tp_expanded, T, B) << "\n";
          }
        }
        return;
      }
      if (tp_kappa.empty()) throw UsageFailure("need --kappa or --family");
      CliffordPoly p =
          t_kappa(T, B, parse_ints(tp_kappa, "kappa")).scale(rat_from_string(tp_scale));
      if (json)
        std::cout << poly_to_json(p).dump(2) << "\n";
      else
        std::cout << render_poly(p, tp_expanded, T, B) << "\n";
    } catch (const std::invalid_argument& e) {
      throw UsageFailure(e.what());
    }
  });

  // verify: kernel membership with a printed residue on failure.
  auto* vf = app.add_subcommand("verify", "check regularity, harmonicity or the slice structure");
  std::string vf_mode, vf_basis, vf_steps;
  PolyInput vf_in;
  vf->add_option("mode", vf_mode, "regular, harmonic or tfunction")
      ->required()
      ->check(CLI::IsMember({"regular", "harmonic", "tfunction"}));
  vf->add_option("--basis", vf_basis, "basis spec")->required();
  vf->add_option("--steps", vf_steps, "step list the check runs against")->required();
  vf_in.attach(vf);
  vf->callback([&] {
    auto B = parse_basis(vf_basis);
    StepList T = parse_steps(vf_steps);
    CliffordPoly f = vf_in.load(T, B);
    CliffordPoly residue(f.vars(), f.sig());
    if (vf_mode == "regular")
      residue = dbar_T_x(f, T, B).num;
    else if (vf_mode == "harmonic")
      residue = delta_T_x(f, T, B).num;
    else
      residue = induced_poly(extract_stem(f, T, B)) - f;
    bool ok = residue.is_zero();
    if (json) {
      nlohmann::json out = {{"mode", vf_mode}, {"pass", ok}};
      if (!ok) out["residue"] = poly_to_json(residue);
      std::cout << out.dump(2) << "\n";
    } else if (ok) {
      std::cout << "PASS: " << vf_mode << "\n";
    } else {
      std::cout << "FAIL: " << vf_mode << ", residue:\n"
                << render_poly(residue, false, T, B) << "\n";
    }
    if (!ok) g_exit = 1;
  });

  // stem: extraction, induction, coarsening and the stem operators.
  auto* st = app.add_subcommand("stem", "work with stem functions");
  st->require_subcommand(1);

  auto* se = st->add_subcommand("extract", "extract the stem of a polynomial");
  std::string se_basis, se_steps;
  PolyInput se_in;
  se->add_option("--basis", se_basis, "basis spec")->required();
  se->add_option("--steps", se_steps, "step list")->required();
  se_in.attach(se);
  se->callback([&] {
    auto B = parse_basis(se_basis);
    StepList T = parse_steps(se_steps);
    StemFunction F = extract_stem(se_in.load(T, B), T, B);
    std::cout << (json ? stem_to_json(F).dump(2) : stem_to_text(F)) << "\n";
  });

  auto* si = st->add_subcommand("induce", "rebuild the polynomial a stem induces");
  std::string si_basis;
  bool si_expanded = false;
  StemInput si_in;
  si->add_option("--basis", si_basis, "basis spec")->required();
  si->add_flag("--expanded", si_expanded, "print the expanded canonical form");
  si_in.attach(si);
  si->callback([&] {
    auto B = parse_basis(si_basis);
    StemFunction F = si_in.load(B);
    CliffordPoly f = induced_poly(F);
    std::cout << (json ? poly_to_json(f).dump(2)
                       : render_poly(f, si_expanded, F.steps(), B))
              << "\n";
  });

  auto* sc = st->add_subcommand("tilde", "absorb leading blocks into the mirror");
  std::string sc_basis;
  int sc_count = 1;
  StemInput sc_in;
  sc->add_option("--basis", sc_basis, "basis spec")->required();
  sc->add_option("--count", sc_count, "number of coarsening steps (default 1)");
  sc_in.attach(sc);
  sc->callback([&] {
    auto B = parse_basis(sc_basis);
    try {
      StemFunction G = multitilde(sc_in.load(B), sc_count);
      std::cout << (json ? stem_to_json(G).dump(2) : stem_to_text(G)) << "\n";
    } catch (const StemError& e) {
      throw UsageFailure(e.what());
    }
  });

  auto* so = st->add_subcommand("op", "apply a stem operator");
  std::string so_basis, so_op;
  StemInput so_in;
  so->add_option("--basis", so_basis, "basis spec")->required();
  so->add_option("--op", so_op,
                 "dbar | d | delta | delta_sigma:<k> | dbar_tilde | d_tilde | fpower:<n>")
      ->required();
  so_in.attach(so);
  so->callback([&] {
    auto B = parse_basis(so_basis);
    StemFunction F = so_in.load(B);
    std::string name = so_op;
    int arg = 0;
    if (size_t colon = name.find(':'); colon != std::string::npos) {
      try {
        arg = std::stoi(name.substr(colon + 1));
      } catch (const std::exception&) {
        throw UsageFailure("bad operator argument in: " + so_op);
      }
      name = name.substr(0, colon);
    }
    StemFunction out(F.steps(), F.basis());
    try {
      if (name == "dbar")
        out = dbar_T(F);
      else if (name == "d")
        out = d_T(F);
      else if (name == "delta")
        out = delta_T(F);
      else if (name == "delta_sigma")
        out = delta_T_sigma(F, arg);
      else if (name == "dbar_tilde")
        out = dbar_T_tilde(F);
      else if (name == "d_tilde")
        out = d_T_tilde(F);
      else if (name == "fpower")
        out = f_power(F, arg);
      else
        throw UsageFailure("unknown stem operator: " + name);
    } catch (const StemError& e) {
      throw UsageFailure(e.what());
    }
    std::cout << (json ? stem_to_json(out).dump(2) : stem_to_text(out)) << "\n";
  });

  // fueter: certified transform chains and flat-list controls.
  auto* fu = app.add_subcommand("fueter", "run the certified transform pipeline");
  std::string fu_basis, fu_steps;
  int fu_sigma = 0;
  bool fu_control = false, fu_expanded = false;
  PolyInput fu_in;
  fu->add_option("--basis", fu_basis, "basis spec")->required();
  fu->add_option("--steps", fu_steps, "step list")->required();
  auto* fus = fu->add_option("--sigma", fu_sigma, "number of pipeline stages to run");
  fu->add_flag("--control", fu_control, "run the flat-list control instead")->excludes(fus);
  fu->add_flag("--expanded", fu_expanded, "print the expanded canonical form");
  fu_in.attach(fu);
  fu->callback([&] {
    auto B = parse_basis(fu_basis);
    StepList T = parse_steps(fu_steps);
    CliffordPoly f = fu_in.load(T, B);
    if (fu_control) {
      ControlReport rep = negative_control(f, T, B);
      if (json) {
        std::cout << nlohmann::json{{"laplacian", poly_to_json(rep.laplacian)},
                                    {"residue", poly_to_json(rep.residue)}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "flat laplacian: " << render_poly(rep.laplacian, fu_expanded, T, B) << "\n";
        std::cout << "residue:        " << render_poly(rep.residue, fu_expanded, T, B) << "\n";
      }
      return;
    }
    if (fus->count() == 0) throw UsageFailure("need --sigma or --control");
    CliffordPoly out = sigma_transform(f, T, B, fu_sigma);
    FueterPlan pl = plan(T, fu_sigma);
    if (json) {
      std::cout << nlohmann::json{{"sigma", fu_sigma},
                                  {"stage_orders", pl.n},
                                  {"certified", true},
                                  {"result", poly_to_json(out)}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << render_poly(out, fu_expanded, T, B) << "\n";
      std::cout << "certified regular over steps " << [&] {
        std::string s = "(";
        StepList ts = T.suffix(fu_sigma);
        for (int i = 0; i <= ts.tau(); ++i) s += (i ? "," : "") + std::to_string(ts.t(i));
        return s + ")";
      }() << "\n";
    }
  });

  // paper-suite: the full reproduction battery.
  auto* ps = app.add_subcommand("paper-suite", "run every reference identity and property suite");
  std::uint64_t ps_seed = kSuiteSeed;
  std::string ps_filter;
  ps->add_option("--seed", ps_seed, "seed for the randomized property suites");
  ps->add_option("--filter", ps_filter, "only run checks whose id matches (glob or substring)");
  ps->callback([&] {
    RunReport rep = run_reference_suite(ps_seed, ps_filter);
    if (json)
      std::cout << report_to_json(rep).dump(2) << "\n";
    else
      std::cout << report_to_text(rep);
    if (!rep.all_pass()) g_exit = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const FueterError& e) {
    std::cerr << "not certifiable: " << e.what() << "\n";
    return 1;
  } catch (const CertificationError& e) {
    std::cerr << "certification failed: " << e.what() << "\n";
    return 1;
  } catch (const UsageFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return g_exit;
}
