// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Runs against the library and the installed CLI binary (path injected by
// the build as EVSNORM_CLI_PATH).

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "evsnorm/axiom_checker.hpp"
#include "evsnorm/comparing.hpp"
#include "evsnorm/model_instances.hpp"
#include "evsnorm/norm_space.hpp"
#include "evsnorm/pattern_search.hpp"
#include "evsnorm/witness.hpp"
#include "oracle.hpp"

using namespace evsnorm;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << detail
            << "\n";
  if (!pass) ++g_failures;
}

struct CliResult {
  int exit_code;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(EVSNORM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  return {WEXITSTATUS(pclose(pipe)), out};
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

constexpr std::uint64_t kSeeds[] = {7, 11, 13, 42, 99};

// --- 1. axiom suite on the shipped instances + mutants, under 10 s --------

void criterion_1() {
  auto t0 = Clock::now();
  std::ostringstream why;
  bool ok = true;
  for (std::uint64_t seed : kSeeds) {
    for (int n : {2, 3, 5}) {
      auto inst = make_norm_instance(n);
      if (!check_axioms(*inst, seed, 16, 8).axioms_pass()) {
        ok = false;
        why << " norms-r" << n << "@" << seed;
      }
    }
    auto hyper = make_hyperspace_instance(2);
    if (!check_axioms(*hyper, seed, 16, 8).axioms_pass()) {
      ok = false;
      why << " hyperspace@" << seed;
    }
    auto cone = make_cone_instance(2);
    if (!check_axioms(*cone, seed, 16, 8).axioms_pass()) {
      ok = false;
      why << " cone@" << seed;
    }
  }
  for (int target = 1; target <= 6; ++target) {
    auto mutant = make_mutant_instance(target);
    AxiomReport rep = check_axioms(*mutant, 7, 16, 8);
    for (int axiom = 1; axiom <= 6; ++axiom) {
      bool pass = rep.axioms[axiom - 1].pass;
      if ((axiom == target) == pass) {
        ok = false;
        why << " mutant-a" << target << "/A" << axiom;
      }
    }
  }
  double elapsed = seconds_since(t0);
  if (elapsed >= 10.0) {
    ok = false;
    why << " runtime " << elapsed << "s";
  }
  std::ostringstream d;
  d << "axiom suite: N(R^n) n=2,3,5 + hyperspace + cone across 5 seeds, 6 mutants fail exactly "
       "their axiom ("
    << elapsed << " s" << why.str() << ")";
  report(1, ok, d.str());
}

// --- 2. Theorem 3.2 property suite on N(R^n) -------------------------------

void criterion_2() {
  auto inst = make_norm_instance(3);
  PropertyReport rep = check_properties(*inst, 42, 120, 25);
  bool ok = rep.all_pass();
  // The scalar-indexed properties must each have covered >= 1000
  // (element, scalar) combinations.
  ok = ok && rep.homogeneous.trials >= 1000 && rep.convex.trials >= 1000 &&
       rep.balanced.trials >= 1000;
  std::ostringstream d;
  d << "N(R^3) single-primitive/zero-primitive/homogeneous/convex/balanced all pass "
    << "(homogeneous " << rep.homogeneous.trials << ", convex " << rep.convex.trials
    << ", balanced " << rep.balanced.trials << " pairs)";
  report(2, ok, d.str());
}

// --- 3. C_{one}(sup) = 1/n against the closed form and the grid oracle -----

void criterion_3() {
  bool ok = true;
  std::ostringstream why;
  for (int n = 2; n <= 6; ++n) {
    ComparingResult r = comparing_function(NormExpr::one(), NormExpr::sup(), SpaceSpec::rn(n));
    if (!r.exact() || std::fabs(r.value() - 1.0 / n) > 1e-9) {
      ok = false;
      why << " closed-form n=" << n;
    }
    double grid = oracle::pq_comparing_oracle(kInfP, 1.0, n);
    if (std::fabs(grid - r.value()) > 1e-4) {
      ok = false;
      why << " oracle n=" << n << " (" << grid << ")";
    }
  }
  report(3, ok,
         "C_{||.||_1}(||.||_inf) = 1/n exactly for n=2..6; simplex-grid oracle agrees to 1e-4" +
             why.str());
}

// --- 4. p-q closed form and 32-start pattern search ------------------------

void criterion_4() {
  struct Case {
    double p, q;
    int n;
    double frozen;
  } cases[] = {
      {2.0, 1.0, 4, 0.5},
      {4.0, 1.0, 4, 0.35355339059327379},   // 4^(-3/4)
      {kInfP, 2.0, 5, 0.44721359549995793},  // 5^(-1/2)
  };
  bool ok = true;
  std::ostringstream why;
  for (const auto& c : cases) {
    ComparingResult r = comparing_exact_pq(c.p, c.q, c.n);
    if (std::fabs(r.value() - c.frozen) > 1e-9) {
      ok = false;
      why << " closed-form (" << c.p << "," << c.q << "," << c.n << ")";
    }
    NormExpr f = NormExpr::pnorm(c.q);
    NormExpr g = NormExpr::pnorm(c.p);
    SphereSearchConfig sc;
    sc.starts = 32;
    sc.use_probes = false;
    auto objective = [&](const Vec& x) { return eval(g, x) / eval(f, x); };
    SphereSearchResult s = minimize_on_sphere(objective, c.n, sc);
    if (std::fabs(s.value - c.frozen) > 1e-6) {
      ok = false;
      why << " search (" << c.p << "," << c.q << "," << c.n << ") off by "
          << std::fabs(s.value - c.frozen);
    }
  }
  report(4, ok,
         "C_{||.||_q}(||.||_p) = n^(1/p-1/q) for (2,1,4), (4,1,4), (inf,2,5); 32-start pattern "
         "search within 1e-6" +
             why.str());
}

// --- 5. witness family ratios, n = 1..64 -----------------------------------

void criterion_5() {
  bool ok = true;
  std::ostringstream why;
  auto check_family = [&](const WitnessSequence& w) {
    double prev = 2.0;
    for (int n = 1; n <= 64; ++n) {
      double formula = w.ratio_formula(n);
      double evaluated = w.evaluated_ratio(n);
      if (std::fabs(evaluated - formula) > 1e-12 * formula) {
        ok = false;
        why << " " << w.family_id << "@n=" << n;
        return;
      }
      if (!(formula < prev)) {
        ok = false;
        why << " " << w.family_id << " not decreasing at n=" << n;
        return;
      }
      prev = formula;
    }
  };
  check_family(nonequivalence_witness("c00_sup_vs_one"));
  check_family(nonequivalence_witness("hamel_sup_vs_one"));
  check_family(nonequivalence_witness("p_vs_q", 2.0, 1.0));
  check_family(nonequivalence_witness("p_vs_q", 3.0, 2.0));
  report(5, ok,
         "witness ratios match 2/(n+1) and n^(1/p-1/q) to 1e-12 relative for n=1..64, "
         "monotonically decreasing" +
             why.str());
}

// --- 6. equivalence verdicts with CLI exit codes ---------------------------

void criterion_6() {
  bool ok = true;
  std::ostringstream why;

  CliResult a = run_cli("compare \"p(1)\" \"sup\" --dim 3 --format json");
  if (a.exit_code != 0) {
    ok = false;
    why << " rn-pair exit " << a.exit_code;
  }
  EquivalenceVerdict va = equivalence_verdict(NormExpr::one(), NormExpr::sup(), SpaceSpec::rn(3));
  if (va.equivalent != TriBool::True || !va.sandwich) {
    ok = false;
    why << " rn-pair verdict";
  } else {
    std::mt19937_64 rng(60006);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    for (int t = 0; t < 1000; ++t) {
      Vec x({coord(rng), coord(rng), coord(rng)});
      double fx = eval(NormExpr::one(), x);
      double gx = eval(NormExpr::sup(), x);
      if (va.sandwich->first * fx > gx * (1 + 1e-9) + 1e-12 ||
          gx > va.sandwich->second * fx * (1 + 1e-9) + 1e-12) {
        ok = false;
        why << " sandwich violated";
        break;
      }
    }
  }

  CliResult b = run_cli("compare \"p(1)\" \"sup\" --space c00 --format json");
  if (b.exit_code != 1) {
    ok = false;
    why << " c00-pair exit " << b.exit_code;
  }
  if (b.output.find("\"witness_family\":{") == std::string::npos) {
    ok = false;
    why << " c00-pair witness missing";
  }

  CliResult c = run_cli("compare \"p(2)\" \"scale(7, p(2))\" --dim 3 --format json");
  if (c.exit_code != 0) {
    ok = false;
    why << " scaled-pair exit " << c.exit_code;
  }
  EquivalenceVerdict vc =
      equivalence_verdict(NormExpr::pnorm(2.0), evs_smul(7.0, NormExpr::pnorm(2.0)),
                          SpaceSpec::rn(3));
  if (!vc.psi_value.exact || vc.psi_value.value() != 1.0 / 7.0) {
    ok = false;
    why << " psi != 1/7";
  }
  report(6, ok,
         "verdicts: (one,sup,R^3) equivalent with validated sandwich, (one,sup,c00) "
         "non-equivalent with witness, (f,7f) equivalent with psi = 1/7; exit codes 0/1/0" +
             why.str());
}

// --- 7. comparing-function invariants on 200 random exact triples ----------

void criterion_7() {
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> pv(1.0, 5.0);
  std::uniform_real_distribution<double> av(0.25, 4.0);
  std::uniform_int_distribution<int> dims(2, 6);
  int violations = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = dims(rng);
    SpaceSpec space = SpaceSpec::rn(n);
    double pf = pv(rng);
    NormExpr f = NormExpr::pnorm(pf);
    bool above = rng() & 1;
    std::uniform_real_distribution<double> side(above ? pf : 1.0, above ? 5.0 : pf);
    double ag = av(rng), ah = av(rng);
    NormExpr g = evs_smul(ag, NormExpr::pnorm(side(rng)));
    NormExpr h = evs_smul(ah, NormExpr::pnorm(side(rng)));

    if (comparing_function(f, f, space).value() != 1.0) ++violations;

    double base = comparing_function(f, g, space).value();
    double scale = av(rng);
    double cov = comparing_function(f, evs_smul(scale, g), space).value();
    if (std::fabs(cov - scale * base) > 1e-12 * std::fabs(scale * base)) ++violations;
    double contra = comparing_function(evs_smul(scale, f), g, space).value();
    if (std::fabs(contra - base / scale) > 1e-12 * std::fabs(base / scale)) ++violations;

    ComparingResult sum = comparing_function(f, evs_add(g, h), space);
    ComparingResult cg = comparing_function(f, g, space);
    ComparingResult ch = comparing_function(f, h, space);
    if (!sum.exact() || !cg.exact() || !ch.exact()) {
      ++violations;
    } else if (sum.value() < cg.value() + ch.value() - 1e-12 * (cg.value() + ch.value())) {
      ++violations;
    }
  }
  std::ostringstream d;
  d << "reflexivity, scaling covariance/contravariance and superadditivity on 200 exact-path "
       "triples: "
    << violations << " violations";
  report(7, violations == 0, d.str());
}

// --- 8. the comparing constant sandwiches: C_f(g) f <= g --------------------

void criterion_8() {
  bool ok = true;
  std::ostringstream why;
  for (int n = 2; n <= 6; ++n) {
    if (!check_primitive_inequality(NormExpr::one(), NormExpr::sup(), SpaceSpec::rn(n))) {
      ok = false;
      why << " (one,sup,n=" << n << ")";
    }
  }
  struct Case {
    double p, q;
    int n;
  } cases[] = {{2.0, 1.0, 4}, {4.0, 1.0, 4}, {kInfP, 2.0, 5}};
  for (const auto& c : cases) {
    if (!check_primitive_inequality(NormExpr::pnorm(c.q), NormExpr::pnorm(c.p),
                                    SpaceSpec::rn(c.n))) {
      ok = false;
      why << " pq(" << c.p << "," << c.q << "," << c.n << ")";
    }
  }
  report(8, ok, "C_f(g) * f <= g holds at 1000 random probes for every exact pair" + why.str());
}

// --- 9. family scan over {1, 1.5, 2, 3, inf} under 5 s ---------------------

void criterion_9() {
  auto t0 = Clock::now();
  FamilyScanReport rep = family_scan({1.0, 1.5, 2.0, 3.0, kInfP}, 50);
  double elapsed = seconds_since(t0);
  bool ok = rep.pairs.size() == 10 && rep.all_certified() && elapsed < 5.0;
  std::ostringstream d;
  d << "family-scan certifies all 10 pairs non-equivalent in " << elapsed << " s";
  report(9, ok, d.str());
}

// --- 10. byte-identical JSON across reruns ---------------------------------

void criterion_10() {
  bool ok = true;
  std::ostringstream why;

  auto inst = make_norm_instance(2);
  if (check_axioms(*inst, 7, 16, 8).to_json() != check_axioms(*inst, 7, 16, 8).to_json()) {
    ok = false;
    why << " axiom-report";
  }
  SpaceSpec r3 = SpaceSpec::rn(3);
  auto verdict_json = [&](const NormExpr& f, const NormExpr& g, const SpaceSpec& s) {
    return equivalence_verdict(f, g, s).to_json(f, g, s);
  };
  if (verdict_json(NormExpr::one(), NormExpr::sup(), r3) !=
      verdict_json(NormExpr::one(), NormExpr::sup(), r3)) {
    ok = false;
    why << " verdict-rn";
  }
  if (verdict_json(NormExpr::one(), NormExpr::sup(), SpaceSpec::c00()) !=
      verdict_json(NormExpr::one(), NormExpr::sup(), SpaceSpec::c00())) {
    ok = false;
    why << " verdict-c00";
  }
  if (family_scan({1.0, 1.5, 2.0, 3.0, kInfP}, 50).to_json() !=
      family_scan({1.0, 1.5, 2.0, 3.0, kInfP}, 50).to_json()) {
    ok = false;
    why << " family-scan";
  }
  for (const char* args : {
           "compare \"p(1)\" \"sup\" --dim 3 --format json",
           "compare \"p(1)\" \"sup\" --space c00 --format json",
           "compare \"p(2)\" \"scale(7, p(2))\" --dim 3 --format json",
           "compare \"p(2; w=1,1,2)\" \"sup\" --dim 3 --format json",
           "check-axioms norms --dim 2 --seed 7 --format json",
           "check-axioms hyperspace --format json",
           "check-axioms cone --format json",
           "witness c00_sup_vs_one -N 64",
           "witness p_vs_q -p 3 -q 2 -N 64",
           "family-scan 1 1.5 2 3 inf -N 50 --format json",
       }) {
    CliResult a = run_cli(args);
    CliResult b = run_cli(args);
    if (a.output != b.output || a.exit_code != b.exit_code) {
      ok = false;
      why << " cli[" << args << "]";
    }
  }
  report(10, ok, "two seeded runs of every report are byte-identical" + why.str());
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (g_failures == 0) {
    std::cout << "acceptance: all 10 criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criterion(s) failed\n";
  return 1;
}
