#ifndef EVSNORM_TESTS_ORACLE_HPP
#define EVSNORM_TESTS_ORACLE_HPP

// Test-side brute-force oracle for inf ||x||_p / ||x||_q over nonzero x.
// Independent of the library: it carries its own p-norm evaluation and
// minimises by grid enumeration on the unit simplex (both norms are sign-
// and permutation-symmetric, and the ratio is scale-invariant, so the
// simplex {x >= 0, sum x = 1} covers all directions). A coarse pass at the
// requested resolution is followed by pure grid refinement around the best
// cell; no descent logic is shared with the implementation under test.

#include <functional>
#include <vector>

namespace oracle {

// p >= 1; use infinity() for the sup norm.
double lp_norm(const std::vector<double>& x, double p);

struct GridResult {
  double value;
  std::vector<double> argmin;  // on the simplex
};

// Minimises ratio(x) = num(x) / den(x) over the unit simplex in dimension n.
// initial_resolution is the coarse grid pitch; refine_levels successive
// passes shrink the pitch 5x around the incumbent cell.
GridResult min_ratio_on_simplex(const std::function<double(const std::vector<double>&)>& num,
                                const std::function<double(const std::vector<double>&)>& den,
                                int n, double initial_resolution, int refine_levels);

// Convenience wrapper: inf ||x||_p / ||x||_q on R^n by grid search.
double pq_comparing_oracle(double p, double q, int n);

}  // namespace oracle

#endif
