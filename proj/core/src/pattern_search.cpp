#include "evsnorm/pattern_search.hpp"

#include <cmath>
#include <random>

#include "evsnorm/errors.hpp"

namespace evsnorm {

namespace {

Vec normalized(std::vector<double> v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  s = std::sqrt(s);
  if (s == 0.0) throw InstanceError("cannot project the origin onto the sphere");
  for (double& c : v) c /= s;
  return Vec(std::move(v));
}

bool better(double va, const Vec& a, double vb, const Vec& b) {
  if (va != vb) return va < vb;
  return lex_less(a, b);
}

}  // namespace

std::vector<Vec> sphere_probes(int dim) {
  std::vector<Vec> probes;
  for (int i = 0; i < dim; ++i) {
    for (double s : {1.0, -1.0}) {
      std::vector<double> e(dim, 0.0);
      e[i] = s;
      probes.push_back(Vec(e));
    }
  }
  probes.push_back(normalized(std::vector<double>(dim, 1.0)));
  if (dim <= 10) {
    for (std::uint64_t mask = 1; mask < (1ULL << dim); ++mask) {
      std::vector<double> v(dim);
      for (int i = 0; i < dim; ++i) v[i] = (mask >> i) & 1 ? -1.0 : 1.0;
      probes.push_back(normalized(std::move(v)));
    }
  }
  return probes;
}

SphereSearchResult minimize_on_sphere(const std::function<double(const Vec&)>& objective, int dim,
                                      const SphereSearchConfig& config) {
  if (dim < 1) throw DimensionMismatchError("sphere search requires dim >= 1");
  SphereSearchResult best;
  bool have_best = false;
  std::int64_t evals = 0;
  auto eval_at = [&](const Vec& x) {
    ++evals;
    return objective(x);
  };
  auto consider = [&](const Vec& x, double v) {
    if (!have_best || better(v, x, best.value, best.argmin)) {
      best.argmin = x;
      best.value = v;
      have_best = true;
    }
  };

  if (config.use_probes) {
    for (const Vec& x : sphere_probes(dim)) consider(x, eval_at(x));
  }

  // All start points are drawn up front so the result cannot depend on how
  // the starts are scheduled.
  std::mt19937_64 rng(config.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Vec> starts;
  for (int s = 0; s < config.starts; ++s) {
    std::vector<double> v(dim);
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (int i = 0; i < dim; ++i) {
        v[i] = gauss(rng);
        norm2 += v[i] * v[i];
      }
    } while (norm2 == 0.0);
    starts.push_back(normalized(v));
  }

  bool all_converged = true;
  for (const Vec& start : starts) {
    Vec x = start;
    double fx = eval_at(x);
    double step = 0.5;
    int iters = 0;
    while (step >= config.tol_opt) {
      if (++iters > config.max_iters) {
        all_converged = false;
        break;
      }
      bool improved = false;
      for (int i = 0; i < dim && !improved; ++i) {
        // Tangent projection of the coordinate direction at x.
        std::vector<double> d(dim);
        double dot = x[i];
        double len2 = 0.0;
        for (int j = 0; j < dim; ++j) {
          d[j] = (j == i ? 1.0 : 0.0) - dot * x[j];
          len2 += d[j] * d[j];
        }
        if (len2 < 1e-30) continue;
        double len = std::sqrt(len2);
        for (double sign : {1.0, -1.0}) {
          std::vector<double> y(dim);
          for (int j = 0; j < dim; ++j) y[j] = x[j] + sign * step * d[j] / len;
          Vec yn = normalized(std::move(y));
          double fy = eval_at(yn);
          if (fy < fx - 1e-18) {
            x = yn;
            fx = fy;
            improved = true;
            break;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    consider(x, fx);
  }

  best.converged = all_converged;
  best.evaluations = evals;
  if (!have_best) throw InstanceError("sphere search evaluated no candidate points");
  return best;
}

}  // namespace evsnorm
