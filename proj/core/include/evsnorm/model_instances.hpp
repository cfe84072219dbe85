#ifndef EVSNORM_MODEL_INSTANCES_HPP
#define EVSNORM_MODEL_INSTANCES_HPP

#include <memory>
#include <string>
#include <vector>

#include "evsnorm/evs_instance.hpp"
#include "evsnorm/vec.hpp"

namespace evsnorm {

/// Nonempty finite point set in R^d under Minkowski sum and subset order;
/// the finite compact subclass of the hyperspace evs. Canonical form merges
/// points within eps_eq and stores them in lexicographic order.
/// Literal form: {[0,0],[1,0]}.
struct FinitePointSet {
  std::vector<Vec> points;

  static FinitePointSet make(std::vector<Vec> pts, double eps_eq = 1e-9);

  std::size_t size() const { return points.size(); }
  int dim() const { return points.empty() ? 0 : static_cast<int>(points[0].dim()); }
  std::string literal() const;
};

FinitePointSet minkowski_sum(const FinitePointSet& a, const FinitePointSet& b);
FinitePointSet set_scale(double alpha, const FinitePointSet& a);
Ternary subset_leq(const FinitePointSet& a, const FinitePointSet& b, double eps_eq = 1e-9);
Eq set_equal(const FinitePointSet& a, const FinitePointSet& b, double eps_eq = 1e-9);

/// Point of the product evs [0,inf) x R^m. Literal form: (r; [a1,...,am]).
struct ConePoint {
  double r = 0.0;
  Vec a;

  std::string literal() const;
};

ConePoint cone_add(const ConePoint& x, const ConePoint& y);
ConePoint cone_smul(double alpha, const ConePoint& x);
Ternary cone_leq(const ConePoint& x, const ConePoint& y, double eps_eq = 1e-9);
Eq cone_equal(const ConePoint& x, const ConePoint& y, double eps_eq = 1e-9);

/// Hyperspace evs of finite point sets in R^dim. When symmetric_samples is
/// set the sampler emits origin-containing sets symmetric about the origin
/// (the family on which balancedness survives sampled scalars in {0,1,-1}).
std::unique_ptr<EvsInstance> make_hyperspace_instance(int dim, bool symmetric_samples = false);

/// Product evs [0,inf) x R^dim with primitive space {0} x R^dim.
std::unique_ptr<EvsInstance> make_cone_instance(int dim);

/// Purpose-built broken instances, one per axiom (1..6); each fails exactly
/// its target axiom under check_axioms.
std::unique_ptr<EvsInstance> make_mutant_instance(int axiom);

/// Instance registry used by the CLI and tests: norms, hyperspace, cone.
std::unique_ptr<EvsInstance> make_instance(const std::string& id, int dim);

const FinitePointSet& as_point_set(const Element& e);
const ConePoint& as_cone_point(const Element& e);

}  // namespace evsnorm

#endif
