#include "evsnorm/model_instances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "evsnorm/errors.hpp"
#include "evsnorm/norm_space.hpp"

namespace evsnorm {

namespace {

double point_dist(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace

FinitePointSet FinitePointSet::make(std::vector<Vec> pts, double eps_eq) {
  if (pts.empty()) throw InstanceError("a finite point set must be nonempty");
  for (const Vec& p : pts) {
    if (p.dim() != pts[0].dim())
      throw DimensionMismatchError("point set members must share a dimension");
  }
  std::sort(pts.begin(), pts.end(), lex_less);
  FinitePointSet out;
  for (const Vec& p : pts) {
    bool dup = false;
    for (const Vec& q : out.points) {
      if (point_dist(p, q) <= eps_eq) {
        dup = true;
        break;
      }
    }
    if (!dup) out.points.push_back(p);
  }
  return out;
}

std::string FinitePointSet::literal() const {
  std::string s = "{";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) s += ",";
    s += to_literal(points[i]);
  }
  s += "}";
  return s;
}

FinitePointSet minkowski_sum(const FinitePointSet& a, const FinitePointSet& b) {
  if (a.dim() != b.dim()) throw DimensionMismatchError("Minkowski sum needs equal dimensions");
  std::vector<Vec> sums;
  sums.reserve(a.size() * b.size());
  for (const Vec& x : a.points) {
    for (const Vec& y : b.points) {
      std::vector<double> c(x.coords);
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += y[i];
      sums.push_back(Vec(std::move(c)));
    }
  }
  return FinitePointSet::make(std::move(sums));
}

FinitePointSet set_scale(double alpha, const FinitePointSet& a) {
  std::vector<Vec> scaled;
  scaled.reserve(a.size());
  for (const Vec& x : a.points) {
    std::vector<double> c(x.coords);
    for (double& v : c) v *= alpha;
    scaled.push_back(Vec(std::move(c)));
  }
  return FinitePointSet::make(std::move(scaled));
}

Ternary subset_leq(const FinitePointSet& a, const FinitePointSet& b, double eps_eq) {
  if (a.dim() != b.dim()) throw DimensionMismatchError("subset order needs equal dimensions");
  for (const Vec& x : a.points) {
    bool matched = false;
    for (const Vec& y : b.points) {
      if (point_dist(x, y) <= eps_eq) {
        matched = true;
        break;
      }
    }
    if (!matched) return Ternary::refuted(to_literal(x));
  }
  return Ternary::certified_true();
}

Eq set_equal(const FinitePointSet& a, const FinitePointSet& b, double eps_eq) {
  if (a.dim() != b.dim()) return Eq::Unequal;
  // Mutual tolerant inclusion rather than positional comparison: float noise
  // of a few ulp must not reorder near-tied points into a false mismatch.
  bool band = false;
  auto covered = [&](const FinitePointSet& from, const FinitePointSet& to) {
    for (const Vec& x : from.points) {
      double best = std::numeric_limits<double>::infinity();
      for (const Vec& y : to.points) best = std::min(best, point_dist(x, y));
      if (best <= eps_eq) continue;
      if (best <= 10.0 * eps_eq) {
        band = true;
        continue;
      }
      return false;
    }
    return true;
  };
  if (!covered(a, b) || !covered(b, a)) return Eq::Unequal;
  return band ? Eq::Indeterminate : Eq::Equal;
}

std::string ConePoint::literal() const {
  return "(" + format_double(r) + "; " + to_literal(a) + ")";
}

ConePoint cone_add(const ConePoint& x, const ConePoint& y) {
  if (x.a.dim() != y.a.dim()) throw DimensionMismatchError("cone points need equal V dimension");
  std::vector<double> c(x.a.coords);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += y.a[i];
  return ConePoint{x.r + y.r, Vec(std::move(c))};
}

ConePoint cone_smul(double alpha, const ConePoint& x) {
  std::vector<double> c(x.a.coords);
  for (double& v : c) v *= alpha;
  return ConePoint{std::fabs(alpha) * x.r, Vec(std::move(c))};
}

namespace {

bool vec_close(const Vec& a, const Vec& b, double eps) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    double thr = std::max(eps * std::max(std::fabs(a[i]), std::fabs(b[i])), 1e-12);
    if (std::fabs(a[i] - b[i]) > thr) return false;
  }
  return true;
}

}  // namespace

Ternary cone_leq(const ConePoint& x, const ConePoint& y, double eps_eq) {
  if (x.a.dim() != y.a.dim()) throw DimensionMismatchError("cone points need equal V dimension");
  double slack = std::max(eps_eq * std::max(std::fabs(x.r), std::fabs(y.r)), 1e-12);
  if (x.r <= y.r + slack && vec_close(x.a, y.a, eps_eq)) return Ternary::certified_true();
  return Ternary::refuted(x.literal() + " !<= " + y.literal());
}

Eq cone_equal(const ConePoint& x, const ConePoint& y, double eps_eq) {
  if (x.a.dim() != y.a.dim()) return Eq::Unequal;
  auto component = [&](double u, double v) {
    double diff = std::fabs(u - v);
    double thr = std::max(eps_eq * std::max(std::fabs(u), std::fabs(v)), 1e-12);
    if (diff <= thr) return Eq::Equal;
    if (diff <= 10.0 * thr) return Eq::Indeterminate;
    return Eq::Unequal;
  };
  bool band = false;
  switch (component(x.r, y.r)) {
    case Eq::Unequal: return Eq::Unequal;
    case Eq::Indeterminate: band = true; break;
    case Eq::Equal: break;
  }
  for (std::size_t i = 0; i < x.a.dim(); ++i) {
    switch (component(x.a[i], y.a[i])) {
      case Eq::Unequal: return Eq::Unequal;
      case Eq::Indeterminate: band = true; break;
      case Eq::Equal: break;
    }
  }
  return band ? Eq::Indeterminate : Eq::Equal;
}

// ---------------------------------------------------------------------------
// Hyperspace instance
// ---------------------------------------------------------------------------

namespace {

class HyperspaceEvs final : public EvsInstance {
 public:
  HyperspaceEvs(int dim, bool symmetric) : dim_(dim), symmetric_(symmetric) {
    if (dim < 1) throw DimensionMismatchError("hyperspace requires dim >= 1");
  }

  std::string id() const override {
    return std::string("hyperspace-r") + std::to_string(dim_) + (symmetric_ ? "-sym" : "");
  }

  Element zero() const override {
    return FinitePointSet::make({Vec(std::vector<double>(dim_, 0.0))});
  }

  Element add(const Element& x, const Element& y) const override {
    return minkowski_sum(as_point_set(x), as_point_set(y));
  }

  Element smul(double alpha, const Element& x) const override {
    return set_scale(alpha, as_point_set(x));
  }

  Ternary leq(const Element& x, const Element& y) const override {
    return subset_leq(as_point_set(x), as_point_set(y));
  }

  Eq equal(const Element& x, const Element& y) const override {
    return set_equal(as_point_set(x), as_point_set(y));
  }

  bool is_primitive(const Element& x) const override { return as_point_set(x).size() == 1; }

  std::vector<Element> sample(std::uint64_t seed, std::size_t count) const override {
    std::vector<Element> out;
    out.push_back(zero());
    std::mt19937_64 rng(seed);
    // Half-integer coordinates keep Minkowski sums and scalings by the
    // designated scalars exactly representable.
    std::uniform_int_distribution<int> half(-6, 6);
    std::uniform_int_distribution<int> sz(1, 4);
    auto random_point = [&] {
      std::vector<double> c(dim_);
      for (double& v : c) v = half(rng) * 0.5;
      return Vec(std::move(c));
    };
    while (out.size() < count) {
      std::vector<Vec> pts;
      int k = sz(rng);
      for (int i = 0; i < k; ++i) pts.push_back(random_point());
      if (symmetric_) {
        std::vector<Vec> sym;
        sym.push_back(Vec(std::vector<double>(dim_, 0.0)));
        for (const Vec& p : pts) {
          sym.push_back(p);
          std::vector<double> neg(p.coords);
          for (double& v : neg) v = -v;
          sym.push_back(Vec(std::move(neg)));
        }
        out.push_back(FinitePointSet::make(std::move(sym)));
        continue;
      }
      FinitePointSet s = FinitePointSet::make(std::move(pts));
      if (s.size() > 1 && out.size() + 1 == count) {
        // No room left for the companion singleton that keeps a sampled
        // primitive below every multi-point set; emit a singleton instead.
        out.push_back(FinitePointSet::make({s.points[0]}));
        continue;
      }
      out.push_back(s);
      if (s.size() > 1) out.push_back(FinitePointSet::make({s.points[0]}));
    }
    return out;
  }

  std::string describe(const Element& x) const override { return as_point_set(x).literal(); }

 private:
  int dim_;
  bool symmetric_;
};

// ---------------------------------------------------------------------------
// Cone instance [0,inf) x R^m
// ---------------------------------------------------------------------------

class ConeEvs : public EvsInstance {
 public:
  explicit ConeEvs(int dim) : dim_(dim) {
    if (dim < 1) throw DimensionMismatchError("cone requires dim >= 1");
  }

  std::string id() const override { return "cone-r" + std::to_string(dim_); }

  Element zero() const override { return ConePoint{0.0, Vec(std::vector<double>(dim_, 0.0))}; }

  Element add(const Element& x, const Element& y) const override {
    return cone_add(as_cone_point(x), as_cone_point(y));
  }

  Element smul(double alpha, const Element& x) const override {
    return cone_smul(alpha, as_cone_point(x));
  }

  Ternary leq(const Element& x, const Element& y) const override {
    return cone_leq(as_cone_point(x), as_cone_point(y));
  }

  Eq equal(const Element& x, const Element& y) const override {
    return cone_equal(as_cone_point(x), as_cone_point(y));
  }

  bool is_primitive(const Element& x) const override { return as_cone_point(x).r <= 1e-12; }

  std::vector<Element> sample(std::uint64_t seed, std::size_t count) const override {
    std::vector<Element> out;
    out.push_back(zero());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> quarter(-8, 8);
    std::uniform_int_distribution<int> rq(1, 6);
    while (out.size() < count) {
      std::vector<double> c(dim_);
      for (double& v : c) v = quarter(rng) * 0.25;
      Vec a(std::move(c));
      if (out.size() + 1 == count) {
        out.push_back(ConePoint{0.0, a});
        break;
      }
      // Every non-primitive sample travels with its primitive companion
      // (0, a) so A6 can be witnessed from the sample pool.
      out.push_back(ConePoint{rq(rng) * 0.5, a});
      out.push_back(ConePoint{0.0, a});
    }
    return out;
  }

  std::string describe(const Element& x) const override { return as_cone_point(x).literal(); }

 protected:
  int dim_;
};

// ---------------------------------------------------------------------------
// Mutants: each breaks exactly one axiom of the cone instance.
// ---------------------------------------------------------------------------

class MutantCone final : public ConeEvs {
 public:
  explicit MutantCone(int axiom) : ConeEvs(2), axiom_(axiom) {
    if (axiom < 1 || axiom > 6) throw InstanceError("mutant axiom index must be 1..6");
  }

  std::string id() const override { return "mutant-a" + std::to_string(axiom_); }

  Element add(const Element& xe, const Element& ye) const override {
    const ConePoint& x = as_cone_point(xe);
    const ConePoint& y = as_cone_point(ye);
    ConePoint plain = cone_add(x, y);
    switch (axiom_) {
      case 1:
        // Asymmetric radial part r + 2s: kills commutativity (and the left
        // identity), leaves every other axiom intact.
        return ConePoint{x.r + 2.0 * y.r, plain.a};
      case 3:
        // r + s + rs distributes over neither scalar sum nor product.
        return ConePoint{x.r + y.r + x.r * y.r, plain.a};
      case 4:
        // Saturating radial flag in {0,1}.
        return ConePoint{std::min(plain.r, 1.0), plain.a};
      default:
        return plain;
    }
  }

  Element smul(double alpha, const Element& xe) const override {
    const ConePoint& x = as_cone_point(xe);
    if (axiom_ == 4) {
      // The flag ignores scalars entirely, so 0 * x keeps a raised flag and
      // A4's "alpha = 0 implies theta" direction fails.
      ConePoint out = cone_smul(alpha, x);
      return ConePoint{x.r, out.a};
    }
    return cone_smul(alpha, x);
  }

  Ternary leq(const Element& xe, const Element& ye) const override {
    const ConePoint& x = as_cone_point(xe);
    const ConePoint& y = as_cone_point(ye);
    if (axiom_ == 2) {
      // One extra one-way ray between the two tagged vectors. Adding any
      // generic z moves both tags off the ray, so order compatibility with
      // addition breaks while the order remains a partial order.
      if (vec_close(x.a, tag1(), 1e-9) && vec_close(y.a, tag2(), 1e-9) && x.r <= y.r - 1.0)
        return Ternary::certified_true();
    }
    return cone_leq(x, y);
  }

  bool is_primitive(const Element& xe) const override {
    const ConePoint& x = as_cone_point(xe);
    if (axiom_ == 5) return x.r <= 0.5;  // falsely claims small radii minimal
    return x.r <= 1e-12;
  }

  std::vector<Element> sample(std::uint64_t seed, std::size_t count) const override {
    std::vector<Element> out;
    out.push_back(zero());
    if (axiom_ == 2) {
      out.push_back(ConePoint{1.0, tag1()});
      out.push_back(ConePoint{2.0, tag2()});
      out.push_back(ConePoint{0.0, tag1()});
      out.push_back(ConePoint{0.0, tag2()});
    }
    if (axiom_ == 5) {
      Vec a(std::vector<double>{0.75, -1.25});
      out.push_back(ConePoint{0.5, a});
      out.push_back(ConePoint{0.0, a});
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> quarter(-8, 8);
    std::uniform_int_distribution<int> rq(1, 6);
    while (out.size() < count) {
      std::vector<double> c(dim_);
      for (double& v : c) v = quarter(rng) * 0.25;
      bool zero_vec = std::all_of(c.begin(), c.end(), [](double v) { return v == 0.0; });
      if (zero_vec) continue;
      Vec a(std::move(c));
      double r = axiom_ == 4 ? 1.0 : rq(rng) * 0.5;
      if (axiom_ == 6) {
        // Deliberately starved of primitive companions.
        out.push_back(ConePoint{r, a});
        continue;
      }
      if (out.size() + 1 == count) {
        out.push_back(ConePoint{0.0, a});
        break;
      }
      out.push_back(ConePoint{r, a});
      out.push_back(ConePoint{0.0, a});
    }
    return out;
  }

 private:
  int axiom_;

  static const Vec& tag1() {
    static const Vec v(std::vector<double>{0.123, 0.456});
    return v;
  }
  static const Vec& tag2() {
    static const Vec v(std::vector<double>{-0.789, 0.321});
    return v;
  }
};

}  // namespace

const FinitePointSet& as_point_set(const Element& e) {
  return std::any_cast<const FinitePointSet&>(e);
}

const ConePoint& as_cone_point(const Element& e) { return std::any_cast<const ConePoint&>(e); }

std::unique_ptr<EvsInstance> make_hyperspace_instance(int dim, bool symmetric_samples) {
  return std::make_unique<HyperspaceEvs>(dim, symmetric_samples);
}

std::unique_ptr<EvsInstance> make_cone_instance(int dim) {
  return std::make_unique<ConeEvs>(dim);
}

std::unique_ptr<EvsInstance> make_mutant_instance(int axiom) {
  return std::make_unique<MutantCone>(axiom);
}

std::unique_ptr<EvsInstance> make_instance(const std::string& id, int dim) {
  if (id == "norms") return make_norm_instance(dim);
  if (id == "hyperspace") return make_hyperspace_instance(dim);
  if (id == "cone") return make_cone_instance(dim);
  throw InstanceError("unknown instance '" + id + "' (expected norms, hyperspace or cone)");
}

}  // namespace evsnorm
