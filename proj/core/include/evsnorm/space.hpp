#ifndef EVSNORM_SPACE_HPP
#define EVSNORM_SPACE_HPP

#include <string>
#include <vector>

#include "evsnorm/vec.hpp"

namespace evsnorm {

/// Underlying linear space of a norm comparison: a fixed R^n or the sequence
/// space c00 of finitely supported vectors.
struct SpaceSpec {
  enum class Kind { Rn, C00 };

  Kind kind = Kind::Rn;
  int dim = 2;  // meaningful for Rn only

  static SpaceSpec rn(int n);
  static SpaceSpec c00() { return SpaceSpec{Kind::C00, 0}; }

  bool is_c00() const { return kind == Kind::C00; }
  std::string name() const;
};

/// Deterministic probe points used for sampled equality and order decisions.
/// Fixed per space; independent of sampler seeds.
std::vector<Point> probe_points(const SpaceSpec& space);

}  // namespace evsnorm

#endif
