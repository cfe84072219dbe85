#include "evsnorm/norm_space.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "evsnorm/comparing.hpp"
#include "evsnorm/errors.hpp"

namespace evsnorm {

SpaceSpec SpaceSpec::rn(int n) {
  if (n < 1) throw DimensionMismatchError("R^n requires n >= 1");
  return SpaceSpec{Kind::Rn, n};
}

std::string SpaceSpec::name() const {
  return is_c00() ? "c00" : "r" + std::to_string(dim);
}

std::vector<Point> probe_points(const SpaceSpec& space) {
  std::vector<Point> probes;
  if (!space.is_c00()) {
    const int n = space.dim;
    for (int i = 0; i < n; ++i) {
      std::vector<double> e(n, 0.0);
      e[i] = 1.0;
      probes.emplace_back(Vec(e));
    }
    probes.emplace_back(Vec(std::vector<double>(n, 1.0)));
    {
      std::vector<double> ramp(n);
      for (int i = 0; i < n; ++i) ramp[i] = static_cast<double>(i + 1);
      probes.emplace_back(Vec(ramp));
    }
    {
      std::vector<double> alt(n);
      for (int i = 0; i < n; ++i) alt[i] = (i % 2 == 0) ? 1.0 : -1.0;
      probes.emplace_back(Vec(alt));
    }
    // Fixed-seed generic directions; not tied to any sampler seed.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(n));
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int k = 0; k < 6; ++k) {
      std::vector<double> v(n);
      double s = 0.0;
      for (int i = 0; i < n; ++i) {
        v[i] = gauss(rng);
        s += v[i] * v[i];
      }
      s = std::sqrt(s);
      for (int i = 0; i < n; ++i) v[i] /= (s > 0 ? s : 1.0);
      probes.emplace_back(Vec(v));
    }
  } else {
    auto basis = [](int i) {
      return SparseVec(std::map<int, double>{{i, 1.0}});
    };
    probes.emplace_back(basis(1));
    probes.emplace_back(basis(2));
    probes.emplace_back(basis(5));
    auto ramp = [](int n) {
      std::map<int, double> m;
      for (int i = 1; i <= n; ++i) m[i] = static_cast<double>(i);
      return SparseVec(m);
    };
    probes.emplace_back(ramp(2));
    probes.emplace_back(ramp(3));
    probes.emplace_back(ramp(6));
    auto ones = [](int n) {
      std::map<int, double> m;
      for (int i = 1; i <= n; ++i) m[i] = 1.0;
      return SparseVec(m);
    };
    probes.emplace_back(ones(2));
    probes.emplace_back(ones(4));
    probes.emplace_back(SparseVec(std::map<int, double>{{1, 3.0}, {3, -1.0}, {7, 0.5}}));
  }
  return probes;
}

namespace {

// Equality of evaluations with the indeterminate band (eps, 10*eps).
Eq band_compare(double a, double b, double eps_eq) {
  double diff = std::fabs(a - b);
  double thr = std::max(eps_eq * std::max(std::fabs(a), std::fabs(b)), kEpsAbs);
  if (diff <= thr) return Eq::Equal;
  if (diff <= 10.0 * thr) return Eq::Indeterminate;
  return Eq::Unequal;
}

}  // namespace

Eq norm_equal(const NormExpr& f, const NormExpr& g, const std::vector<Point>& probes,
              double eps_eq) {
  if (f.structurally_equal(g)) return Eq::Equal;
  bool band = false;
  for (const Point& x : probes) {
    switch (band_compare(eval(f, x), eval(g, x), eps_eq)) {
      case Eq::Equal: break;
      case Eq::Indeterminate: band = true; break;
      case Eq::Unequal: return Eq::Unequal;
    }
  }
  return band ? Eq::Indeterminate : Eq::Equal;
}

Eq norm_equal(const NormExpr& f, const NormExpr& g, const SpaceSpec& space, double eps_eq) {
  return norm_equal(f, g, probe_points(space), eps_eq);
}

Ternary probe_leq(const NormExpr& f, const NormExpr& g, const std::vector<Point>& probes,
                  double eps_eq) {
  if (f.is_zero()) return Ternary::certified_true();
  if (f.structurally_equal(g)) return Ternary::certified_true();
  for (const Point& x : probes) {
    double a = eval(f, x);
    double b = eval(g, x);
    if (a > b + std::max(eps_eq * std::max(a, b), kEpsAbs)) {
      return Ternary::refuted(to_literal(x));
    }
  }
  return Ternary::sampled_true();
}

Ternary probe_leq(const NormExpr& f, const NormExpr& g, const SpaceSpec& space, double eps_eq) {
  return probe_leq(f, g, probe_points(space), eps_eq);
}

OrderDecision leq_norms(const NormExpr& f, const NormExpr& g, const SpaceSpec& space,
                        const CompareConfig& config) {
  if (f.is_zero()) return {Truth::CertifiedTrue, std::nullopt};
  if (g.is_zero()) {
    // f <= O forces f = O; any probe where f is positive refutes.
    for (const Point& x : probe_points(space)) {
      if (eval(f, x) > kEpsAbs) return {Truth::RefutedWithWitness, x};
    }
    return {Truth::SampledTrue, std::nullopt};
  }
  ComparingResult r = comparing_function(f, g, space, config);
  auto margin_refutes = [&](const Point& w) {
    double a = eval(f, w);
    double b = eval(g, w);
    return a > b * (1.0 + config.eps_eq) + kEpsAbs;
  };
  if (r.status == ResultStatus::Exact && r.value() >= 1.0)
    return {Truth::CertifiedTrue, std::nullopt};
  if (r.witness && margin_refutes(*r.witness)) return {Truth::RefutedWithWitness, r.witness};
  // The comparing witness may be missing (an unattained infimum) or inside
  // the margin; a probe violation still refutes.
  for (const Point& x : probe_points(space)) {
    if (margin_refutes(x)) return {Truth::RefutedWithWitness, x};
  }
  return {Truth::SampledTrue, std::nullopt};
}

std::vector<bool> converges_pointwise(const std::vector<NormExpr>& seq, const NormExpr& target,
                                      const std::vector<Point>& probes, double tol) {
  if (seq.empty()) throw InstanceError("converges_pointwise requires a nonempty sequence");
  if (probes.empty()) throw InstanceError("converges_pointwise requires probe points");
  std::vector<bool> out;
  out.reserve(probes.size());
  for (const Point& x : probes) {
    double t = eval(target, x);
    std::vector<double> errs;
    errs.reserve(seq.size());
    for (const NormExpr& fk : seq) errs.push_back(std::fabs(eval(fk, x) - t));
    bool ok = errs.back() < tol;
    std::size_t window = std::min<std::size_t>(3, errs.size());
    for (std::size_t k = errs.size() - window; k + 1 < errs.size(); ++k) {
      if (errs[k + 1] > errs[k]) ok = false;
    }
    out.push_back(ok);
  }
  return out;
}

NormLawReport norm_axiom_check(const NormExpr& expr, const SpaceSpec& space, std::uint64_t seed,
                               std::size_t n_samples) {
  if (expr.is_zero()) throw ZeroNormError("norm_axiom_check requires a non-zero expression");
  if (space.is_c00()) throw InstanceError("norm_axiom_check samples fixed-dimension points");
  NormLawReport rep;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::uniform_real_distribution<double> lam(-3.0, 3.0);
  const int n = space.dim;
  auto random_point = [&] {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = coord(rng);
    return Vec(v);
  };
  for (std::size_t s = 0; s < n_samples; ++s) {
    Vec x = random_point();
    Vec y = random_point();
    double l = lam(rng);

    ++rep.definite.trials;
    bool x_nonzero = std::any_of(x.coords.begin(), x.coords.end(),
                                 [](double c) { return std::fabs(c) > 1e-6; });
    if (x_nonzero && !(eval(expr, x) > 0.0) && rep.definite.pass) {
      rep.definite.pass = false;
      rep.definite.witness = to_literal(x);
    }

    ++rep.homogeneous.trials;
    double lhs = eval(expr, Vec([&] {
                        std::vector<double> v = x.coords;
                        for (double& c : v) c *= l;
                        return v;
                      }()));
    double rhs = std::fabs(l) * eval(expr, x);
    if (band_compare(lhs, rhs, kEpsEq) == Eq::Unequal && rep.homogeneous.pass) {
      rep.homogeneous.pass = false;
      rep.homogeneous.witness = to_literal(x) + " lambda=" + format_double(l);
    }

    ++rep.triangle.trials;
    Vec xy([&] {
      std::vector<double> v = x.coords;
      for (int i = 0; i < n; ++i) v[i] += y.coords[i];
      return v;
    }());
    double sum_side = eval(expr, x) + eval(expr, y);
    double joint = eval(expr, xy);
    if (joint > sum_side + std::max(kEpsEq * sum_side, kEpsAbs) && rep.triangle.pass) {
      rep.triangle.pass = false;
      rep.triangle.witness = to_literal(x) + " " + to_literal(y);
    }
  }
  {
    // Zero maps to zero.
    Vec origin(std::vector<double>(n, 0.0));
    ++rep.definite.trials;
    if (std::fabs(eval(expr, origin)) > kEpsAbs && rep.definite.pass) {
      rep.definite.pass = false;
      rep.definite.witness = to_literal(origin);
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// N(R^dim) as an evs instance
// ---------------------------------------------------------------------------

namespace {

std::size_t leaf_count(const NormExpr& e) {
  switch (e.kind()) {
    case NormExpr::Kind::Zero: return 0;
    case NormExpr::Kind::Leaf: return 1;
    case NormExpr::Kind::Scale: return leaf_count(e.scale_child());
    case NormExpr::Kind::Sum: {
      std::size_t s = 0;
      for (std::size_t i = 0; i < e.sum_arity(); ++i) s += leaf_count(e.sum_child(i));
      return s;
    }
  }
  return 0;
}

class NormEvs final : public EvsInstance {
 public:
  explicit NormEvs(int dim) : space_(SpaceSpec::rn(dim)), probes_(probe_points(space_)) {}

  std::string id() const override { return "norms-" + space_.name(); }

  Element zero() const override { return NormExpr::zero(); }

  Element add(const Element& x, const Element& y) const override {
    return evs_add(as_norm(x), as_norm(y));
  }

  Element smul(double alpha, const Element& x) const override {
    return evs_smul(alpha, as_norm(x));
  }

  Ternary leq(const Element& x, const Element& y) const override {
    return probe_leq(as_norm(x), as_norm(y), probes_);
  }

  Eq equal(const Element& x, const Element& y) const override {
    return norm_equal(as_norm(x), as_norm(y), probes_);
  }

  bool is_primitive(const Element& x) const override {
    // O is the only minimal element of N(X); an expression vanishes
    // identically iff it normalises to the Zero node.
    return as_norm(x).is_zero();
  }

  std::vector<Element> sample(std::uint64_t seed, std::size_t count) const override {
    std::vector<NormExpr> pool;
    pool.push_back(NormExpr::zero());
    pool.push_back(NormExpr::one());
    pool.push_back(NormExpr::pnorm(2.0));
    pool.push_back(NormExpr::sup());
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> pval(1.0, 4.0);
    std::uniform_real_distribution<double> wval(0.5, 2.0);
    std::uniform_real_distribution<double> aval(0.25, 2.5);
    auto pick = [&]() -> const NormExpr& {
      std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
      return pool[d(rng)];
    };
    while (pool.size() < count) {
      double roll = unit(rng);
      if (roll < 0.35) {
        double p = unit(rng) < 0.3 ? kInfP : pval(rng);
        if (unit(rng) < 0.4) {
          std::vector<double> w(static_cast<std::size_t>(space_.dim));
          for (double& wi : w) wi = wval(rng);
          pool.push_back(NormExpr::pnorm(p, std::move(w)));
        } else {
          pool.push_back(NormExpr::pnorm(p));
        }
      } else if (roll < 0.70) {
        const NormExpr& a = pick();
        const NormExpr& b = pick();
        if (leaf_count(a) + leaf_count(b) > 10) continue;
        pool.push_back(evs_add(a, b));
      } else {
        pool.push_back(evs_smul(aval(rng), pick()));
      }
    }
    pool.resize(count);
    std::vector<Element> out(pool.begin(), pool.end());
    return out;
  }

  std::string describe(const Element& x) const override { return as_norm(x).to_text(); }

 private:
  SpaceSpec space_;
  std::vector<Point> probes_;
};

}  // namespace

const NormExpr& as_norm(const Element& e) { return std::any_cast<const NormExpr&>(e); }

std::unique_ptr<EvsInstance> make_norm_instance(int dim) {
  return std::make_unique<NormEvs>(dim);
}

}  // namespace evsnorm
