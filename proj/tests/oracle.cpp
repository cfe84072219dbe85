#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace oracle {

double lp_norm(const std::vector<double>& x, double p) {
  if (p == std::numeric_limits<double>::infinity()) {
    double m = 0.0;
    for (double c : x) m = std::max(m, std::fabs(c));
    return m;
  }
  if (p == 1.0) {
    double s = 0.0;
    for (double c : x) s += std::fabs(c);
    return s;
  }
  if (p == 2.0) {
    double s = 0.0;
    for (double c : x) s += c * c;
    return std::sqrt(s);
  }
  double s = 0.0;
  for (double c : x) s += std::pow(std::fabs(c), p);
  return std::pow(s, 1.0 / p);
}

namespace {

using Objective = std::function<double(const std::vector<double>&)>;

struct Best {
  double value = std::numeric_limits<double>::infinity();
  std::vector<double> argmin;

  void consider(const std::vector<double>& x, double v) {
    if (v < value) {
      value = v;
      argmin = x;
    }
  }
};

// Compositions of K into n non-increasing parts (permutation symmetry of the
// norm pair makes the sorted wedge of the simplex sufficient).
void sorted_compositions(int i, int n, int remaining, int cap, int K, std::vector<int>& parts,
                         const Objective& num, const Objective& den, Best& best,
                         std::vector<double>& scratch) {
  if (i == n - 1) {
    if (remaining > cap) return;
    parts[i] = remaining;
    for (int j = 0; j < n; ++j) scratch[j] = static_cast<double>(parts[j]) / K;
    best.consider(scratch, num(scratch) / den(scratch));
    return;
  }
  int slots = n - i;
  int k_min = (remaining + slots - 1) / slots;
  for (int k = std::min(cap, remaining); k >= k_min; --k) {
    parts[i] = k;
    sorted_compositions(i + 1, n, remaining - k, k, K, parts, num, den, best, scratch);
  }
}

// Full (unsorted) box scan around a candidate, pitch h, half-width 2*prev_h.
// The final coordinate is determined by the simplex constraint and is left
// unconstrained: enumerated coordinates moving together must be free to push
// the slack coordinate out of the stale box.
void box_scan(int i, int n, double acc, std::vector<double>& x,
              const std::vector<double>& center, double prev_h, double h, const Objective& num,
              const Objective& den, Best& best) {
  if (i == n - 1) {
    double last = 1.0 - acc;
    if (last < -1e-15) return;
    last = std::max(last, 0.0);
    x[i] = last;
    if (std::all_of(x.begin(), x.end(), [](double c) { return c == 0.0; })) return;
    best.consider(x, num(x) / den(x));
    return;
  }
  double lo = std::max(0.0, center[i] - 2.0 * prev_h);
  double hi = std::min(1.0, center[i] + 2.0 * prev_h);
  for (double v = lo; v <= hi + 1e-15; v += h) {
    if (acc + v > 1.0 + 1e-15) break;
    x[i] = v;
    box_scan(i + 1, n, acc + v, x, center, prev_h, h, num, den, best);
  }
}

}  // namespace

GridResult min_ratio_on_simplex(const Objective& num, const Objective& den, int n,
                                double initial_resolution, int refine_levels) {
  Best best;
  int K = static_cast<int>(std::lround(1.0 / initial_resolution));
  {
    std::vector<int> parts(n, 0);
    std::vector<double> scratch(n, 0.0);
    sorted_compositions(0, n, K, K, K, parts, num, den, best, scratch);
  }
  double h = 1.0 / K;
  for (int level = 0; level < refine_levels; ++level) {
    double h_next = h / 5.0;
    Best refined = best;
    // Permutation symmetry again: sorting the incumbent descending parks the
    // smallest coordinate in the slack slot, so a coordinate lagging behind
    // the optimum never pins the box.
    std::sort(refined.argmin.begin(), refined.argmin.end(), std::greater<double>());
    std::vector<double> x(n, 0.0);
    box_scan(0, n, 0.0, x, refined.argmin, h, h_next, num, den, refined);
    best = refined;
    h = h_next;
  }
  return GridResult{best.value, best.argmin};
}

double pq_comparing_oracle(double p, double q, int n) {
  double res = n <= 3 ? 1e-3 : (n == 4 ? 5e-3 : 1e-2);
  auto num = [p](const std::vector<double>& x) { return lp_norm(x, p); };
  auto den = [q](const std::vector<double>& x) { return lp_norm(x, q); };
  return min_ratio_on_simplex(num, den, n, res, 8).value;
}

}  // namespace oracle
