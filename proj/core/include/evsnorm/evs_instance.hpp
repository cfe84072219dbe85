#ifndef EVSNORM_EVS_INSTANCE_HPP
#define EVSNORM_EVS_INSTANCE_HPP

#include <any>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace evsnorm {

/// Opaque carrier element of an abstract evs instance.
using Element = std::any;

/// Three-valued answer for order decisions that may rest on finite sampling.
/// A refutation always carries a concrete re-checkable witness description.
enum class Truth {
  CertifiedTrue,
  RefutedWithWitness,
  SampledTrue,
};

struct Ternary {
  Truth state;
  std::string witness;  // literal of the violating point/element when refuted

  bool refuted() const { return state == Truth::RefutedWithWitness; }
  bool holds() const { return state != Truth::RefutedWithWitness; }
  bool certified() const { return state == Truth::CertifiedTrue; }

  static Ternary certified_true() { return {Truth::CertifiedTrue, {}}; }
  static Ternary sampled_true() { return {Truth::SampledTrue, {}}; }
  static Ternary refuted(std::string w) { return {Truth::RefutedWithWitness, std::move(w)}; }
};

/// Element equality decision with an explicit indeterminate band: differences
/// inside (eps_eq, 10*eps_eq) are neither accepted nor refuted and surface as
/// a ToleranceError in the checkers.
enum class Eq { Equal, Unequal, Indeterminate };

/// An ordered algebraic structure (carrier, +, scalar mult, partial order,
/// zero, primitivity oracle) presented to the axiom checker. Implementations
/// are immutable after construction and all operations are pure.
class EvsInstance {
 public:
  virtual ~EvsInstance() = default;

  virtual std::string id() const = 0;
  virtual Element zero() const = 0;
  virtual Element add(const Element& x, const Element& y) const = 0;
  virtual Element smul(double alpha, const Element& x) const = 0;
  virtual Ternary leq(const Element& x, const Element& y) const = 0;
  virtual Eq equal(const Element& x, const Element& y) const = 0;
  virtual bool is_primitive(const Element& x) const = 0;

  /// Deterministic sample list for a seed; must contain the zero element and,
  /// when the carrier has one, at least one non-primitive element.
  virtual std::vector<Element> sample(std::uint64_t seed, std::size_t count) const = 0;

  virtual std::string describe(const Element& x) const = 0;
};

}  // namespace evsnorm

#endif
