#ifndef EVSNORM_COMPARING_HPP
#define EVSNORM_COMPARING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "evsnorm/norm_expr.hpp"
#include "evsnorm/space.hpp"
#include "evsnorm/witness.hpp"

namespace evsnorm {

enum class ResultStatus { Exact, Bracketed };
enum class Method { ClosedForm, Minimization };
enum class TriBool { True, False, Undetermined };

struct CompareConfig {
  std::uint64_t seed = 42;
  int starts = 32;
  double tol_opt = 1e-10;
  int max_iters = 10000;
  double eps_eq = 1e-9;
  bool use_probes = true;     // deterministic probe stage of the minimiser
  int sandwich_probes = 1000; // random points for sandwich validation
  int witness_check_n = 64;   // N for witness family validation
};

/// Value bracket for the comparing function C_f(g) = inf g(x)/f(x).
/// Always lower <= C_f(g) <= upper. Exact results come from closed forms and
/// have lower == upper; minimisation yields honest brackets with lower = 0
/// (sampling cannot certify an infimum). The witness, when present, attains
/// the upper bound.
struct ComparingResult {
  double lower = 0.0;
  double upper = 0.0;
  ResultStatus status = ResultStatus::Bracketed;
  Method method = Method::Minimization;
  std::optional<Point> witness;
  bool converged = true;

  bool exact() const { return status == ResultStatus::Exact; }
  double value() const;  // Exact results only; throws otherwise
  std::string json_fragment() const;
};

/// C_f(g) on N(X) for the given space. Closed forms cover identical cores,
/// scale wrappers, and uniform-weight p-norm leaves (including sums whose
/// leaf exponents all lie on one side of f's); anything else falls back to
/// multi-start pattern search on the unit sphere (R^n) or to probe brackets
/// (c00). Requires f != O.
ComparingResult comparing_function(const NormExpr& f, const NormExpr& g, const SpaceSpec& space,
                                   const CompareConfig& config = {});

/// Closed form for C_{||.||_q}(||.||_p) on R^n with unweighted norms:
/// n^(1/p - 1/q) when p > q (attained along all-ones), 1 when p <= q
/// (attained at a basis vector). Convention 1/inf = 0.
ComparingResult comparing_exact_pq(double p, double q, int n);

/// Comparing spectrum sigma_f(g): the scalars lambda with lambda f <= g,
/// a disc of radius C_f(g).
struct SpectrumDescriptor {
  ComparingResult radius;

  TriBool membership(double lambda, double eps_eq = 1e-9) const;
  std::string field_note() const;  // the scalar set the radius describes
};

SpectrumDescriptor spectrum(const NormExpr& f, const NormExpr& g, const SpaceSpec& space,
                            const CompareConfig& config = {});

/// Verifies C_f(g) * f(x) <= g(x) at the probe set plus random points
/// (the certified lower bound is used, so the check is sound for brackets).
bool check_primitive_inequality(const NormExpr& f, const NormExpr& g, const SpaceSpec& space,
                                const CompareConfig& config = {});

/// Whether g generates a topology at least as large as f's: decided by
/// C_f(g) != 0, with Undetermined for brackets that cannot settle the sign.
TriBool topology_comparison(const NormExpr& f, const NormExpr& g, const SpaceSpec& space,
                            const CompareConfig& config = {});

struct PsiValue {
  double lower = 0.0;
  double upper = 0.0;
  bool exact = false;

  double value() const { return lower; }
};

/// Psi(f,g) = min{C_f(g), C_g(f)}; zero exactly when the norms are
/// non-equivalent. Exact when the interval collapses.
PsiValue psi(const NormExpr& f, const NormExpr& g, const SpaceSpec& space,
             const CompareConfig& config = {});

struct EquivalenceVerdict {
  ComparingResult c_fg;
  ComparingResult c_gf;
  PsiValue psi_value;
  TriBool equivalent = TriBool::Undetermined;
  std::optional<std::pair<double, double>> sandwich;  // lambda f <= g <= mu f
  std::optional<WitnessSequence> divergence_witness;
  std::string note;

  /// Fixed-order verdict document:
  /// {f, g, space, c_fg, c_gf, psi, equivalent, sandwich, witness_family}.
  std::string to_json(const NormExpr& f, const NormExpr& g, const SpaceSpec& space) const;
};

/// Decides equivalence per the criterion C_f(g) C_g(f) != 0: equivalent with
/// validated sandwich constants when both values are exact and positive,
/// non-equivalent with a constructive witness sequence when a comparing
/// value is exactly zero, undetermined otherwise.
EquivalenceVerdict equivalence_verdict(const NormExpr& f, const NormExpr& g,
                                       const SpaceSpec& space, const CompareConfig& config = {});

}  // namespace evsnorm

#endif
