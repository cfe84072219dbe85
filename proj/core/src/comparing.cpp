#include "evsnorm/comparing.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "evsnorm/errors.hpp"
#include "evsnorm/json_writer.hpp"
#include "evsnorm/norm_space.hpp"
#include "evsnorm/pattern_search.hpp"

namespace evsnorm {

namespace {

struct ScaledCore {
  double coef;
  NormExpr core;
};

ScaledCore peel_scale(const NormExpr& e) {
  if (e.kind() == NormExpr::Kind::Scale) return {e.scale_factor(), e.scale_child()};
  return {1.0, e};
}

struct UniformTerm {
  double coef;
  double p;
};

// A (possibly scaled) leaf with uniform weights folds to coef * ||.||_p.
std::optional<UniformTerm> uniform_scaled_leaf(const NormExpr& e) {
  auto [coef, core] = peel_scale(e);
  if (core.kind() != NormExpr::Kind::Leaf) return std::nullopt;
  const auto& w = core.leaf_weights();
  if (!w.empty()) {
    double w0 = w[0];
    for (double wi : w)
      if (wi != w0) return std::nullopt;
    coef *= core.leaf_p() == kInfP ? w0 : std::pow(w0, 1.0 / core.leaf_p());
  }
  return UniformTerm{coef, core.leaf_p()};
}

std::optional<std::vector<UniformTerm>> sum_of_uniform_leaves(const NormExpr& e) {
  std::vector<UniformTerm> terms;
  auto [coef, core] = peel_scale(e);
  if (core.kind() == NormExpr::Kind::Sum) {
    for (std::size_t i = 0; i < core.sum_arity(); ++i) {
      auto t = uniform_scaled_leaf(core.sum_child(i));
      if (!t) return std::nullopt;
      t->coef *= coef;
      terms.push_back(*t);
    }
    return terms;
  }
  auto t = uniform_scaled_leaf(e);
  if (!t) return std::nullopt;
  terms.push_back(*t);
  return terms;
}

void validate_expr_for_space(const NormExpr& e, const SpaceSpec& space) {
  switch (e.kind()) {
    case NormExpr::Kind::Zero:
      return;
    case NormExpr::Kind::Leaf:
      if (e.leaf_has_weights()) {
        if (space.is_c00())
          throw DimensionMismatchError("weighted norm leaves are not defined on c00");
        if (e.leaf_weights().size() != static_cast<std::size_t>(space.dim))
          throw DimensionMismatchError("weight vector length does not match space dimension");
      }
      return;
    case NormExpr::Kind::Scale:
      validate_expr_for_space(e.scale_child(), space);
      return;
    case NormExpr::Kind::Sum:
      for (std::size_t i = 0; i < e.sum_arity(); ++i)
        validate_expr_for_space(e.sum_child(i), space);
      return;
  }
}

Point first_basis_point(const SpaceSpec& space) {
  if (space.is_c00()) return SparseVec(std::map<int, double>{{1, 1.0}});
  std::vector<double> e(space.dim, 0.0);
  e[0] = 1.0;
  return Vec(std::move(e));
}

Point normalized_ones(int dim) {
  std::vector<double> v(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
  return Vec(std::move(v));
}

ComparingResult exact_result(double value, std::optional<Point> witness) {
  ComparingResult r;
  r.lower = value;
  r.upper = value;
  r.status = ResultStatus::Exact;
  r.method = Method::ClosedForm;
  r.witness = std::move(witness);
  return r;
}

double pq_factor(double p, double q, int n) {
  // inf ||x||_p / ||x||_q on R^n; 1/inf = 0.
  double ip = p == kInfP ? 0.0 : 1.0 / p;
  double iq = q == kInfP ? 0.0 : 1.0 / q;
  if (p > q) return std::pow(static_cast<double>(n), ip - iq);
  return 1.0;
}

ComparingResult c00_probe_bracket(const NormExpr& f, const NormExpr& g) {
  // No minimiser exists on an infinite-dimensional carrier; report the best
  // ratio over a deterministic probe family as an honest upper bound.
  ComparingResult r;
  r.status = ResultStatus::Bracketed;
  r.method = Method::Minimization;
  r.lower = 0.0;
  bool first = true;
  auto consider = [&](const SparseVec& x) {
    double ratio = eval(g, x) / eval(f, x);
    if (first || ratio < r.upper) {
      r.upper = ratio;
      r.witness = x;
      first = false;
    }
  };
  consider(SparseVec(std::map<int, double>{{1, 1.0}}));
  for (int n = 2; n <= 32; ++n) {
    std::map<int, double> ramp, flat;
    for (int i = 1; i <= n; ++i) {
      ramp[i] = static_cast<double>(i);
      flat[i] = static_cast<double>(n);
    }
    consider(SparseVec(std::move(ramp)));
    consider(SparseVec(std::move(flat)));
  }
  return r;
}

std::vector<Point> random_points(const SpaceSpec& space, std::size_t count, std::uint64_t seed) {
  std::vector<Point> pts;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  if (!space.is_c00()) {
    while (pts.size() < count) {
      std::vector<double> v(space.dim);
      double m = 0.0;
      for (double& c : v) {
        c = coord(rng);
        m = std::max(m, std::fabs(c));
      }
      if (m < 1e-3) continue;
      pts.emplace_back(Vec(std::move(v)));
    }
  } else {
    std::uniform_int_distribution<int> support(1, 8);
    while (pts.size() < count) {
      int k = support(rng);
      std::map<int, double> m;
      double mx = 0.0;
      for (int i = 1; i <= k; ++i) {
        double c = coord(rng);
        if (c != 0.0) m[i] = c;
        mx = std::max(mx, std::fabs(c));
      }
      if (m.empty() || mx < 1e-3) continue;
      pts.emplace_back(SparseVec(std::move(m)));
    }
  }
  return pts;
}

}  // namespace

double ComparingResult::value() const {
  if (!exact()) throw EvsError("value() called on a bracketed comparing result");
  return lower;
}

std::string ComparingResult::json_fragment() const {
  JsonWriter w;
  w.begin_object();
  w.key("lower").value(lower);
  w.key("upper").value(upper);
  w.key("status").value(exact() ? "exact" : "bracketed");
  w.key("witness");
  if (witness) {
    w.value(to_literal(*witness));
  } else {
    w.null();
  }
  w.end_object();
  return w.str();
}

ComparingResult comparing_exact_pq(double p, double q, int n) {
  if (std::isnan(p) || p < 1.0 || std::isnan(q) || q < 1.0)
    throw InvalidPError("comparing_exact_pq requires p, q >= 1");
  if (n < 1) throw DimensionMismatchError("comparing_exact_pq requires n >= 1");
  if (p > q) return exact_result(pq_factor(p, q, n), normalized_ones(n));
  return exact_result(1.0, first_basis_point(SpaceSpec::rn(n)));
}

ComparingResult comparing_function(const NormExpr& f, const NormExpr& g, const SpaceSpec& space,
                                   const CompareConfig& config) {
  if (f.is_zero()) throw ZeroNormError("comparing function is defined relative to f != O");
  validate_expr_for_space(f, space);
  validate_expr_for_space(g, space);

  if (g.is_zero()) return exact_result(0.0, first_basis_point(space));

  auto [a, f_core] = peel_scale(f);
  auto [b, g_core] = peel_scale(g);
  if (f_core.structurally_equal(g_core)) {
    // Constant ratio b/a everywhere; any nonzero point attains it.
    return exact_result(b / a, first_basis_point(space));
  }

  auto fu = uniform_scaled_leaf(f);
  auto gt = sum_of_uniform_leaves(g);
  if (fu && gt) {
    if (!space.is_c00()) {
      const int n = space.dim;
      bool all_ge = std::all_of(gt->begin(), gt->end(),
                                [&](const UniformTerm& t) { return t.p >= fu->p; });
      bool all_le = std::all_of(gt->begin(), gt->end(),
                                [&](const UniformTerm& t) { return t.p <= fu->p; });
      if (all_ge) {
        // Every term is minimised along the all-ones direction.
        double num = 0.0;
        for (const auto& t : *gt) num += t.coef * pq_factor(t.p, fu->p, n);
        return exact_result(num / fu->coef, normalized_ones(n));
      }
      if (all_le) {
        // Every term is minimised at a standard basis vector.
        double num = 0.0;
        for (const auto& t : *gt) num += t.coef;
        return exact_result(num / fu->coef, first_basis_point(space));
      }
    } else {
      if (gt->size() == 1) {
        if ((*gt)[0].p > fu->p) {
          // Ratio decays to zero along wide flat supports; the infimum is 0
          // and is not attained, so no witness point is recorded.
          return exact_result(0.0, std::nullopt);
        }
        return exact_result((*gt)[0].coef / fu->coef, first_basis_point(space));
      }
      bool all_le = std::all_of(gt->begin(), gt->end(),
                                [&](const UniformTerm& t) { return t.p <= fu->p; });
      if (all_le) {
        double num = 0.0;
        for (const auto& t : *gt) num += t.coef;
        return exact_result(num / fu->coef, first_basis_point(space));
      }
    }
  }

  if (space.is_c00()) return c00_probe_bracket(f, g);

  SphereSearchConfig sc;
  sc.seed = config.seed;
  sc.starts = config.starts;
  sc.tol_opt = config.tol_opt;
  sc.max_iters = config.max_iters;
  sc.use_probes = config.use_probes;
  auto objective = [&](const Vec& x) { return eval(g, x) / eval(f, x); };
  SphereSearchResult s = minimize_on_sphere(objective, space.dim, sc);

  ComparingResult r;
  r.lower = 0.0;
  r.upper = s.value;
  r.status = ResultStatus::Bracketed;
  r.method = Method::Minimization;
  r.witness = s.argmin;
  r.converged = s.converged;
  return r;
}

TriBool SpectrumDescriptor::membership(double lambda, double eps_eq) const {
  double m = std::fabs(lambda);
  if (m <= radius.lower + eps_eq) return TriBool::True;
  if (m > radius.upper + eps_eq) return TriBool::False;
  return radius.exact() ? TriBool::True : TriBool::Undetermined;
}

std::string SpectrumDescriptor::field_note() const {
  if (radius.exact())
    return "scalars with |lambda| <= " + format_double(radius.value());
  return "scalars with |lambda| <= C, C in [" + format_double(radius.lower) + ", " +
         format_double(radius.upper) + "]";
}

SpectrumDescriptor spectrum(const NormExpr& f, const NormExpr& g, const SpaceSpec& space,
                            const CompareConfig& config) {
  ComparingResult r = comparing_function(f, g, space, config);
  if (!std::isfinite(r.upper)) throw InstanceError("comparing spectrum is unbounded");
  return SpectrumDescriptor{std::move(r)};
}

bool check_primitive_inequality(const NormExpr& f, const NormExpr& g, const SpaceSpec& space,
                                const CompareConfig& config) {
  ComparingResult r = comparing_function(f, g, space, config);
  double c = r.lower;  // certified part of the bracket
  std::vector<Point> pts = probe_points(space);
  std::vector<Point> extra = random_points(space, 1000, config.seed ^ 0x9d2c5680ULL);
  pts.insert(pts.end(), extra.begin(), extra.end());
  for (const Point& x : pts) {
    double lhs = c * eval(f, x);
    double rhs = eval(g, x);
    if (lhs > rhs * (1.0 + config.eps_eq) + kEpsAbs) return false;
  }
  return true;
}

TriBool topology_comparison(const NormExpr& f, const NormExpr& g, const SpaceSpec& space,
                            const CompareConfig& config) {
  if (g.is_zero()) throw ZeroNormError("topology comparison requires g != O");
  ComparingResult r = comparing_function(f, g, space, config);
  if (r.exact()) return r.value() > 0.0 ? TriBool::True : TriBool::False;
  return TriBool::Undetermined;
}

PsiValue psi(const NormExpr& f, const NormExpr& g, const SpaceSpec& space,
             const CompareConfig& config) {
  ComparingResult r1 = comparing_function(f, g, space, config);
  ComparingResult r2 = comparing_function(g, f, space, config);
  PsiValue v;
  v.lower = std::min(r1.lower, r2.lower);
  v.upper = std::min(r1.upper, r2.upper);
  v.exact = v.lower == v.upper;
  return v;
}

namespace {

// Attaches the constructive family whose ratio drives C_f(g) to zero,
// rescaled to the actual (possibly scaled) pair.
WitnessSequence zero_direction_family(const NormExpr& f, const NormExpr& g) {
  auto fu = uniform_scaled_leaf(f);
  auto gu = uniform_scaled_leaf(g);
  if (!fu || !gu || !(gu->p > fu->p))
    throw UnknownFamilyError("no registered witness family for this pair");
  WitnessSequence w;
  if (fu->p == 1.0 && gu->p == kInfP) {
    w = nonequivalence_witness("c00_sup_vs_one");
  } else {
    w = nonequivalence_witness("p_vs_q", gu->p, fu->p);
  }
  double scale = gu->coef / fu->coef;
  if (scale != 1.0) {
    auto base = w.ratio_formula;
    w.ratio_formula = [base, scale](int n) { return scale * base(n); };
  }
  w.ratio_num = g;
  w.ratio_den = f;
  w.direction = "C[" + f.to_text() + "](" + g.to_text() + ") -> 0";
  return w;
}

bool validate_sandwich(const NormExpr& f, const NormExpr& g, const SpaceSpec& space,
                       double lambda, double mu, const CompareConfig& config) {
  std::vector<Point> pts =
      random_points(space, static_cast<std::size_t>(config.sandwich_probes),
                    config.seed ^ 0xb5297a4dULL);
  for (const Point& x : pts) {
    double fx = eval(f, x);
    double gx = eval(g, x);
    if (lambda * fx > gx * (1.0 + config.eps_eq) + kEpsAbs) return false;
    if (gx > mu * fx * (1.0 + config.eps_eq) + kEpsAbs) return false;
  }
  return true;
}

}  // namespace

EquivalenceVerdict equivalence_verdict(const NormExpr& f, const NormExpr& g,
                                       const SpaceSpec& space, const CompareConfig& config) {
  if (f.is_zero() || g.is_zero())
    throw ZeroNormError("equivalence is decided between non-zero norms");
  EquivalenceVerdict v;
  v.c_fg = comparing_function(f, g, space, config);
  v.c_gf = comparing_function(g, f, space, config);
  v.psi_value.lower = std::min(v.c_fg.lower, v.c_gf.lower);
  v.psi_value.upper = std::min(v.c_fg.upper, v.c_gf.upper);
  v.psi_value.exact = v.psi_value.lower == v.psi_value.upper;

  bool fg_zero = v.c_fg.exact() && v.c_fg.value() == 0.0;
  bool gf_zero = v.c_gf.exact() && v.c_gf.value() == 0.0;
  if (fg_zero || gf_zero) {
    v.equivalent = TriBool::False;
    WitnessSequence w = fg_zero ? zero_direction_family(f, g) : zero_direction_family(g, f);
    validate_witness(w, config.witness_check_n);
    v.divergence_witness = std::move(w);
    return v;
  }
  if (v.c_fg.exact() && v.c_gf.exact()) {
    double lambda = v.c_fg.value();
    double mu = 1.0 / v.c_gf.value();
    if (validate_sandwich(f, g, space, lambda, mu, config)) {
      v.equivalent = TriBool::True;
      v.sandwich = std::make_pair(lambda, mu);
    } else {
      v.equivalent = TriBool::Undetermined;
      v.note = "sandwich validation failed on random probes";
    }
    return v;
  }
  v.equivalent = TriBool::Undetermined;
  return v;
}

std::string EquivalenceVerdict::to_json(const NormExpr& f, const NormExpr& g,
                                        const SpaceSpec& space) const {
  JsonWriter w;
  w.begin_object();
  w.key("f").value(f.to_text());
  w.key("g").value(g.to_text());
  w.key("space").value(space.name());
  w.key("c_fg").raw(c_fg.json_fragment());
  w.key("c_gf").raw(c_gf.json_fragment());
  w.key("psi");
  if (psi_value.exact) {
    w.value(psi_value.lower);
  } else {
    w.begin_array().value(psi_value.lower).value(psi_value.upper).end_array();
  }
  w.key("equivalent");
  switch (equivalent) {
    case TriBool::True: w.value(true); break;
    case TriBool::False: w.value(false); break;
    case TriBool::Undetermined: w.value("undetermined"); break;
  }
  w.key("sandwich");
  if (sandwich) {
    w.begin_array().value(sandwich->first).value(sandwich->second).end_array();
  } else {
    w.null();
  }
  w.key("witness_family");
  if (divergence_witness) {
    const auto& fam = *divergence_witness;
    w.begin_object();
    w.key("family").value(fam.family_id);
    w.key("direction").value(fam.direction);
    w.key("p");
    if (fam.family_id == "p_vs_q") {
      w.value(fam.p);
    } else {
      w.null();
    }
    w.key("q");
    if (fam.family_id == "p_vs_q") {
      w.value(fam.q);
    } else {
      w.null();
    }
    w.key("first_terms").begin_array();
    for (int n = 1; n <= 5; ++n) {
      w.begin_object();
      w.key("n").value(n);
      w.key("x").value(to_literal(fam.generator(n)));
      w.key("ratio").value(fam.evaluated_ratio(n));
      w.end_object();
    }
    w.end_array();
    w.end_object();
  } else {
    w.null();
  }
  w.end_object();
  return w.str();
}

}  // namespace evsnorm
