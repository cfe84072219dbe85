#ifndef EVSNORM_PATTERN_SEARCH_HPP
#define EVSNORM_PATTERN_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "evsnorm/vec.hpp"

namespace evsnorm {

struct SphereSearchConfig {
  std::uint64_t seed = 42;
  int starts = 32;
  double tol_opt = 1e-10;  // step-length floor
  int max_iters = 10000;   // per start
  bool use_probes = true;  // deterministic probe stage before descent
};

struct SphereSearchResult {
  Vec argmin;
  double value = 0.0;
  bool converged = true;  // false when any start hit max_iters
  std::int64_t evaluations = 0;
};

/// Minimises a scale-invariant objective over the euclidean unit sphere of
/// R^dim by multi-start pattern search: steps along the tangent projections
/// of +-e_i, projecting back to the sphere, halving the step on a failed
/// sweep, until the step falls below tol_opt. Deterministic for a given
/// config; ties break toward the smaller value, then the lexicographically
/// smaller point.
SphereSearchResult minimize_on_sphere(const std::function<double(const Vec&)>& objective, int dim,
                                      const SphereSearchConfig& config);

/// The deterministic probe set: signed basis vectors, the normalised
/// all-ones vector, and (for dim <= 10) every sign pattern of all-ones.
std::vector<Vec> sphere_probes(int dim);

}  // namespace evsnorm

#endif
