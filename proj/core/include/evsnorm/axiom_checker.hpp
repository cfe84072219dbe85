#ifndef EVSNORM_AXIOM_CHECKER_HPP
#define EVSNORM_AXIOM_CHECKER_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "evsnorm/evs_instance.hpp"

namespace evsnorm {

/// Replayable counterexample: sample indices into the seeded sample list plus
/// the scalars involved, with human-readable element literals alongside.
struct Counterexample {
  std::vector<std::size_t> sample_indices;
  std::vector<double> scalars;
  std::vector<std::string> elements;
  std::string detail;
};

struct CheckEntry {
  bool pass = true;
  std::int64_t trials = 0;
  std::optional<Counterexample> counterexample;
};

struct PropertyReport {
  CheckEntry single_primitive;
  CheckEntry zero_primitive;
  CheckEntry homogeneous;
  CheckEntry convex;
  CheckEntry balanced;

  bool all_pass() const {
    return single_primitive.pass && zero_primitive.pass && homogeneous.pass && convex.pass &&
           balanced.pass;
  }
};

struct AxiomReport {
  std::string instance;
  std::uint64_t seed = 0;
  std::array<CheckEntry, 6> axioms;  // A1..A6
  PropertyReport properties;
  // Count of sampled A3(iii) combinations where the inequality held strictly
  // (not serialised; the strictness of (alpha+beta)x <= alpha x + beta x is a
  // structural fact worth asserting in tests).
  std::int64_t a3_strict_count = 0;

  bool axioms_pass() const {
    for (const auto& a : axioms)
      if (!a.pass) return false;
    return true;
  }

  /// Stable JSON document: {instance, seed, axioms: {A1..A6}, properties:
  /// {...}} with fixed field order and 17-significant-digit floats.
  std::string to_json() const;
};

/// Evaluates axioms A1..A6 on all sampled combinations drawn from the
/// instance sampler (n_samples elements, n_scalars scalars). Throws
/// InstanceError when the sampler under-delivers and ToleranceError when an
/// equality lands in the indeterminate band. The report is deterministic for
/// a given (instance, seed); counterexamples are the lexicographically first
/// violating index combination.
AxiomReport check_axioms(const EvsInstance& instance, std::uint64_t seed, std::size_t n_samples,
                         std::size_t n_scalars);

/// Evaluates the derived element properties (single/zero primitivity,
/// homogeneity, convexity, balancedness) on all sampled (element, scalar)
/// combinations. Same preconditions and determinism as check_axioms.
PropertyReport check_properties(const EvsInstance& instance, std::uint64_t seed,
                                std::size_t n_samples, std::size_t n_scalars);

/// All elements of the candidate pool that are primitive and not refuted to
/// lie below x, deduplicated by instance equality. Empty result means the
/// pool witnesses an A6 violation and throws A6ViolationError.
std::vector<Element> primitives_of(const EvsInstance& instance, const Element& x,
                                   const std::vector<Element>& candidate_pool);

/// Deterministic scalar pool: 0, 1, -1, 0.5, -0.5, 2, -2, then seeded
/// uniform(-3, 3) values up to n_scalars.
std::vector<double> scalar_pool(std::uint64_t seed, std::size_t n_scalars);

}  // namespace evsnorm

#endif
