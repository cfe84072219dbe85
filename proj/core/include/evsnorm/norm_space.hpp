#ifndef EVSNORM_NORM_SPACE_HPP
#define EVSNORM_NORM_SPACE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "evsnorm/evs_instance.hpp"
#include "evsnorm/norm_expr.hpp"
#include "evsnorm/space.hpp"

namespace evsnorm {

struct CompareConfig;  // comparing.hpp

inline constexpr double kEpsEq = 1e-9;
inline constexpr double kEpsAbs = 1e-12;

/// Pointwise-order decision between two norms, with the violating point when
/// refuted. A refutation witness always violates by a margin above eps_eq.
struct OrderDecision {
  Truth status;
  std::optional<Point> witness;

  bool refuted() const { return status == Truth::RefutedWithWitness; }
  bool holds() const { return status != Truth::RefutedWithWitness; }
  std::string witness_literal() const { return witness ? to_literal(*witness) : std::string(); }
};

/// Band-aware equality of two norm expressions on a probe set.
Eq norm_equal(const NormExpr& f, const NormExpr& g, const std::vector<Point>& probes,
              double eps_eq = kEpsEq);
Eq norm_equal(const NormExpr& f, const NormExpr& g, const SpaceSpec& space,
              double eps_eq = kEpsEq);

/// Cheap probe-based order used by the N(X) evs instance: certified only for
/// structural cases, refuted on a probe violation, sampled-true otherwise.
Ternary probe_leq(const NormExpr& f, const NormExpr& g, const std::vector<Point>& probes,
                  double eps_eq = kEpsEq);
Ternary probe_leq(const NormExpr& f, const NormExpr& g, const SpaceSpec& space,
                  double eps_eq = kEpsEq);

/// Full order decision f <= g, routed through the comparing function:
/// certified when a closed form proves inf g/f >= 1, refuted when
/// minimization finds a margin violation, sampled-true otherwise.
OrderDecision leq_norms(const NormExpr& f, const NormExpr& g, const SpaceSpec& space,
                        const CompareConfig& config);

/// Per-probe pointwise convergence of a finite prefix of a sequence of norms:
/// the last term is within tol at the probe and the error is non-increasing
/// over the final three terms.
std::vector<bool> converges_pointwise(const std::vector<NormExpr>& seq, const NormExpr& target,
                                      const std::vector<Point>& probes, double tol);

struct NormLawEntry {
  bool pass = true;
  std::int64_t trials = 0;
  std::string witness;
};

/// Sampled verification that an expression denotes a norm: definiteness,
/// absolute homogeneity and the triangle inequality.
struct NormLawReport {
  NormLawEntry definite;
  NormLawEntry homogeneous;
  NormLawEntry triangle;

  bool all_pass() const { return definite.pass && homogeneous.pass && triangle.pass; }
};

NormLawReport norm_axiom_check(const NormExpr& expr, const SpaceSpec& space, std::uint64_t seed,
                               std::size_t n_samples);

/// The evs N(R^dim): norm expressions under pointwise sum, modulus scalar
/// multiple and pointwise order, presented through the abstract instance
/// interface for the axiom checker.
std::unique_ptr<EvsInstance> make_norm_instance(int dim);

/// Casts an element of the norms instance back to its expression.
const NormExpr& as_norm(const Element& e);

}  // namespace evsnorm

#endif
