#ifndef EVSNORM_WITNESS_HPP
#define EVSNORM_WITNESS_HPP

#include <functional>
#include <string>
#include <vector>

#include "evsnorm/norm_expr.hpp"
#include "evsnorm/vec.hpp"

namespace evsnorm {

/// Constructive non-equivalence certificate: explicit vectors x_n whose norm
/// ratio num(x_n)/den(x_n) matches a closed formula that decreases
/// monotonically to 0, driving the comparing value C_den(num) to 0.
struct WitnessSequence {
  std::string family_id;
  std::function<SparseVec(int)> generator;     // n >= 1 -> x_n
  std::function<double(int)> ratio_formula;    // analytic ratio at n
  NormExpr ratio_num;                          // numerator norm g
  NormExpr ratio_den;                          // denominator norm f (C_f(g) -> 0)
  std::string direction;                       // human-readable description
  double p = 0.0;                              // p_vs_q parameters when applicable
  double q = 0.0;
  int first_monotone_index = 1;

  double evaluated_ratio(int n) const;
};

/// Families:
///   c00_sup_vs_one    x_n = (1,2,...,n,0,...),  ratio 2/(n+1)
///   hamel_sup_vs_one  same coordinates read as Hamel coefficients
///   p_vs_q            x_n = n(e_1+...+e_n),     ratio n^(1/p-1/q), needs p > q
WitnessSequence nonequivalence_witness(const std::string& family, double p = 0.0, double q = 0.0);

/// Checks |evaluated_ratio(n) - ratio_formula(n)| <= eps_rel * ratio_formula(n)
/// for n = 1..n_check and monotone decrease past first_monotone_index.
/// Throws InstanceError with the offending n on failure.
void validate_witness(const WitnessSequence& w, int n_check, double eps_rel = 1e-12);

struct FamilyScanEntry {
  double p = 0.0;
  double q = 0.0;
  std::string family_id;
  std::string status;  // "nonequivalent_certified" | "error"
  std::string error;
  double last_ratio = 0.0;
};

struct FamilyScanReport {
  std::vector<double> p_values;
  int n_check = 0;
  std::vector<FamilyScanEntry> pairs;

  bool all_certified() const;
  std::string to_json() const;
};

/// For every pair p > q from a distinct list of exponents, certifies
/// non-equivalence of the p- and q-norms on an infinite-dimensional carrier
/// via the witness family ratio decay.
FamilyScanReport family_scan(const std::vector<double>& p_values, int n_check);

}  // namespace evsnorm

#endif
