// evsnorm command-line front end: norm equivalence verdicts, evs axiom
// checking, non-equivalence witness generation and pairwise family scans.
//
// Exit codes
//   compare:      0 equivalent, 1 not equivalent, 2 undetermined
//   check-axioms: 0 all axioms pass, 1 some axiom fails
//   witness:      0 generated and validated
//   family-scan:  0 all pairs certified, 1 otherwise
//   64 usage/parse errors, 65 internal errors

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "evsnorm/axiom_checker.hpp"
#include "evsnorm/comparing.hpp"
#include "evsnorm/errors.hpp"
#include "evsnorm/json_writer.hpp"
#include "evsnorm/model_instances.hpp"
#include "evsnorm/norm_space.hpp"
#include "evsnorm/witness.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitInternal = 65;

struct RunConfig {
  std::uint64_t seed = 42;
  int dim = 2;
  std::string space = "rn";
  std::size_t n_samples = 16;
  std::size_t n_scalars = 8;
  double tol_opt = 1e-10;
  std::string format = "text";
  std::string output;
};

void emit(const RunConfig& cfg, const std::string& content) {
  if (cfg.output.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw evsnorm::EvsError("cannot open output file '" + cfg.output + "'");
  out << content;
}

std::string fmt6(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

double parse_p_value(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF") return evsnorm::kInfP;
  try {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw evsnorm::ParseError("bad exponent '" + text + "'");
    return v;
  } catch (const std::exception&) {
    throw evsnorm::ParseError("bad exponent '" + text + "'");
  }
}

evsnorm::SpaceSpec make_space(const RunConfig& cfg) {
  if (cfg.space == "c00") return evsnorm::SpaceSpec::c00();
  if (cfg.space == "rn") return evsnorm::SpaceSpec::rn(cfg.dim);
  throw evsnorm::ParseError("unknown space '" + cfg.space + "' (expected rn or c00)");
}

evsnorm::CompareConfig compare_config(const RunConfig& cfg) {
  evsnorm::CompareConfig c;
  c.seed = cfg.seed;
  c.tol_opt = cfg.tol_opt;
  return c;
}

std::string tri_text(evsnorm::TriBool t) {
  switch (t) {
    case evsnorm::TriBool::True: return "yes";
    case evsnorm::TriBool::False: return "no";
    default: return "undetermined";
  }
}

std::string result_text(const evsnorm::ComparingResult& r) {
  std::string s = "[" + fmt6(r.lower) + ", " + fmt6(r.upper) + "] (" +
                  (r.exact() ? "exact" : "bracketed") + ")";
  if (r.witness) s += " witness " + evsnorm::to_literal(*r.witness);
  return s;
}

int cmd_compare(const RunConfig& cfg, const std::string& f_spec, const std::string& g_spec) {
  evsnorm::NormExpr f = evsnorm::NormExpr::parse(f_spec);
  evsnorm::NormExpr g = evsnorm::NormExpr::parse(g_spec);
  evsnorm::SpaceSpec space = make_space(cfg);
  evsnorm::EquivalenceVerdict v = evsnorm::equivalence_verdict(f, g, space, compare_config(cfg));

  if (cfg.format == "json") {
    emit(cfg, v.to_json(f, g, space) + "\n");
  } else {
    std::string t;
    t += "f: " + f.to_text() + "\n";
    t += "g: " + g.to_text() + "\n";
    t += "space: " + space.name() + "\n";
    t += "C_f(g): " + result_text(v.c_fg) + "\n";
    t += "C_g(f): " + result_text(v.c_gf) + "\n";
    t += "psi: " + (v.psi_value.exact
                        ? fmt6(v.psi_value.lower)
                        : "[" + fmt6(v.psi_value.lower) + ", " + fmt6(v.psi_value.upper) + "]") +
         "\n";
    t += "equivalent: " + tri_text(v.equivalent) + "\n";
    if (v.sandwich) {
      t += "sandwich: " + fmt6(v.sandwich->first) + " * f <= g <= " + fmt6(v.sandwich->second) +
           " * f\n";
    }
    if (v.divergence_witness) {
      const auto& w = *v.divergence_witness;
      t += "witness family: " + w.family_id + "  (" + w.direction + ")\n";
      for (int n = 1; n <= 5; ++n) {
        t += "  n=" + std::to_string(n) + "  x=" + evsnorm::to_literal(w.generator(n)) +
             "  ratio=" + fmt6(w.evaluated_ratio(n)) + "\n";
      }
    }
    if (!v.note.empty()) t += "note: " + v.note + "\n";
    emit(cfg, t);
  }
  switch (v.equivalent) {
    case evsnorm::TriBool::True: return 0;
    case evsnorm::TriBool::False: return 1;
    default: return 2;
  }
}

int cmd_check_axioms(const RunConfig& cfg, const std::string& instance_id) {
  if (instance_id != "norms" && instance_id != "hyperspace" && instance_id != "cone")
    throw evsnorm::ParseError("unknown instance '" + instance_id +
                              "' (expected norms, hyperspace or cone)");
  auto inst = evsnorm::make_instance(instance_id, cfg.dim);
  evsnorm::AxiomReport rep =
      evsnorm::check_axioms(*inst, cfg.seed, cfg.n_samples, cfg.n_scalars);

  if (cfg.format == "json") {
    emit(cfg, rep.to_json() + "\n");
  } else {
    std::string t;
    t += "instance: " + rep.instance + "  seed: " + std::to_string(rep.seed) + "\n";
    static const char* names[] = {"A1", "A2", "A3", "A4", "A5", "A6"};
    for (std::size_t i = 0; i < 6; ++i) {
      const auto& a = rep.axioms[i];
      t += std::string(names[i]) + ": " + (a.pass ? "pass" : "FAIL") + "  (" +
           std::to_string(a.trials) + " trials)";
      if (a.counterexample) t += "  " + a.counterexample->detail;
      t += "\n";
    }
    auto prop = [&](const char* name, const evsnorm::CheckEntry& e) {
      t += std::string(name) + ": " + (e.pass ? "pass" : "fail") + "  (" +
           std::to_string(e.trials) + " trials)";
      if (e.counterexample) t += "  " + e.counterexample->detail;
      t += "\n";
    };
    t += "properties (informational):\n";
    prop("  single_primitive", rep.properties.single_primitive);
    prop("  zero_primitive", rep.properties.zero_primitive);
    prop("  homogeneous", rep.properties.homogeneous);
    prop("  convex", rep.properties.convex);
    prop("  balanced", rep.properties.balanced);
    emit(cfg, t);
  }
  return rep.axioms_pass() ? 0 : 1;
}

int cmd_witness(const RunConfig& cfg, const std::string& family, int n_terms, double p, double q) {
  if (n_terms < 1) throw evsnorm::BadParamsError("-N must be >= 1");
  evsnorm::WitnessSequence w = evsnorm::nonequivalence_witness(family, p, q);
  // Evaluated-versus-formula agreement is enforced before anything is printed.
  evsnorm::validate_witness(w, n_terms);
  std::string out;
  for (int n = 1; n <= n_terms; ++n) {
    evsnorm::JsonWriter jw;
    jw.begin_object();
    jw.key("n").value(n);
    jw.key("x").value(evsnorm::to_literal(w.generator(n)));
    jw.key("ratio").value(w.evaluated_ratio(n));
    jw.key("formula").value(w.ratio_formula(n));
    jw.end_object();
    out += jw.str() + "\n";
  }
  emit(cfg, out);
  return 0;
}

int cmd_family_scan(const RunConfig& cfg, const std::vector<std::string>& p_texts, int n_terms) {
  std::vector<double> ps;
  ps.reserve(p_texts.size());
  for (const auto& t : p_texts) ps.push_back(parse_p_value(t));
  evsnorm::FamilyScanReport rep = evsnorm::family_scan(ps, n_terms);
  if (cfg.format == "json") {
    emit(cfg, rep.to_json() + "\n");
  } else {
    std::string t = "family scan over " + std::to_string(ps.size()) + " exponents, " +
                    std::to_string(rep.pairs.size()) + " pairs, N=" +
                    std::to_string(rep.n_check) + "\n";
    for (const auto& e : rep.pairs) {
      t += "  p=" + fmt6(e.p) + " q=" + fmt6(e.q) + "  " + e.family_id + "  " + e.status;
      if (e.status == "nonequivalent_certified") t += "  last ratio " + fmt6(e.last_ratio);
      t += "\n";
    }
    emit(cfg, t);
  }
  return rep.all_certified() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"norm equivalence certification via comparing functions"};
  app.require_subcommand(1);

  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "deterministic seed (default 42)");
    sub->add_option("--dim", cfg.dim, "dimension of R^n")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output", cfg.output, "write the report to a file instead of stdout");
  };

  std::string f_spec, g_spec;
  CLI::App* compare = app.add_subcommand("compare", "decide equivalence of two norms");
  compare->add_option("f", f_spec, "first norm literal")->required();
  compare->add_option("g", g_spec, "second norm literal")->required();
  compare->add_option("--space", cfg.space, "underlying space: rn | c00")
      ->check(CLI::IsMember({"rn", "c00"}));
  compare->add_option("--tol", cfg.tol_opt, "pattern-search step floor");
  add_common(compare);

  std::string instance_id;
  CLI::App* axioms = app.add_subcommand("check-axioms", "run the evs axiom suite");
  axioms->add_option("instance", instance_id, "instance: norms | hyperspace | cone")->required();
  axioms->add_option("--samples", cfg.n_samples, "sample count")->check(CLI::PositiveNumber);
  add_common(axioms);

  std::string family;
  int n_terms = 16;
  std::string p_text = "0", q_text = "0";
  CLI::App* witness = app.add_subcommand("witness", "emit a non-equivalence witness sequence");
  witness->add_option("family", family, "c00_sup_vs_one | hamel_sup_vs_one | p_vs_q")->required();
  witness->add_option("-N", n_terms, "number of terms");
  witness->add_option("-p", p_text, "p exponent for p_vs_q (number or inf)");
  witness->add_option("-q", q_text, "q exponent for p_vs_q (number or inf)");
  add_common(witness);

  std::vector<std::string> p_list;
  int scan_n = 64;
  CLI::App* scan = app.add_subcommand("family-scan", "pairwise non-equivalence certification");
  scan->add_option("p", p_list, "exponents (numbers or inf)")->required()->expected(-1);
  scan->add_option("-N", scan_n, "ratio terms to verify per pair");
  add_common(scan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*compare) return cmd_compare(cfg, f_spec, g_spec);
    if (*axioms) return cmd_check_axioms(cfg, instance_id);
    if (*witness)
      return cmd_witness(cfg, family, n_terms, parse_p_value(p_text), parse_p_value(q_text));
    if (*scan) return cmd_family_scan(cfg, p_list, scan_n);
  } catch (const evsnorm::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const evsnorm::UnknownFamilyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const evsnorm::BadParamsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const evsnorm::InvalidPError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const evsnorm::DimensionMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const evsnorm::ZeroNormError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
