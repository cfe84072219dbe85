#ifndef EVSNORM_NORM_EXPR_HPP
#define EVSNORM_NORM_EXPR_HPP

#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evsnorm/vec.hpp"

namespace evsnorm {

inline constexpr double kInfP = std::numeric_limits<double>::infinity();

/// Closed expression tree for an element of the norm space N(X).
///
/// Leaves are weighted p-norms, p in [1, inf]; `sup` is the p = inf leaf and
/// `one` the p = 1 leaf. Nodes are pointwise sums and modulus scalar
/// multiples. Trees are immutable and kept in a normal form: sums are
/// flattened, zero children dropped, children canonically sorted and
/// singleton sums collapsed; scales carry a positive factor, fold when
/// nested, disappear at 1 and annihilate at 0. Normalising an already
/// normalised tree is the identity.
///
/// Canonical text form (also the CLI grammar):
///   zero | one | sup | sup(w=1,2) | p(2) | p(2; w=1,1,4) | p(inf)
///   | scale(2, p(1)) | sum(p(1), sup, ...)
class NormExpr {
 public:
  enum class Kind { Zero, Leaf, Scale, Sum };
  struct Node;  // defined in norm_expr.cpp; trees share immutable nodes

  /// The constant zero function O.
  NormExpr();

  static NormExpr zero();
  static NormExpr pnorm(double p);
  static NormExpr pnorm(double p, std::vector<double> weights);
  static NormExpr one() { return pnorm(1.0); }
  static NormExpr sup() { return pnorm(kInfP); }
  static NormExpr sup(std::vector<double> weights) { return pnorm(kInfP, std::move(weights)); }

  Kind kind() const;
  bool is_zero() const { return kind() == Kind::Zero; }

  // Leaf access.
  double leaf_p() const;
  const std::vector<double>& leaf_weights() const;  // empty = default weight 1
  bool leaf_has_weights() const;

  // Scale access.
  double scale_factor() const;
  NormExpr scale_child() const;

  // Sum access.
  std::size_t sum_arity() const;
  NormExpr sum_child(std::size_t i) const;

  bool structurally_equal(const NormExpr& other) const;

  /// Total order on normalised trees; fixes the sort of sum children.
  static int compare(const NormExpr& a, const NormExpr& b);

  std::string to_text() const;
  static NormExpr parse(std::string_view text);

 private:
  explicit NormExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;

  friend NormExpr evs_add(const NormExpr& f, const NormExpr& g);
  friend NormExpr evs_smul(double alpha, const NormExpr& f);
  friend double eval(const NormExpr& expr, const Vec& x);
  friend double eval(const NormExpr& expr, const SparseVec& x);
};

/// Pointwise sum: eval(evs_add(f,g), x) == eval(f,x) + eval(g,x).
NormExpr evs_add(const NormExpr& f, const NormExpr& g);

/// Modulus scalar multiple: eval(evs_smul(a,f), x) == |a| * eval(f,x).
NormExpr evs_smul(double alpha, const NormExpr& f);

double eval(const NormExpr& expr, const Vec& x);
double eval(const NormExpr& expr, const SparseVec& x);
double eval(const NormExpr& expr, const Point& x);

}  // namespace evsnorm

#endif
