#include "evsnorm/witness.hpp"

#include <cmath>
#include <set>

#include "evsnorm/errors.hpp"
#include "evsnorm/json_writer.hpp"

namespace evsnorm {

namespace {

SparseVec ramp_vector(int n) {
  std::map<int, double> m;
  for (int i = 1; i <= n; ++i) m[i] = static_cast<double>(i);
  return SparseVec(std::move(m));
}

SparseVec flat_vector(int n) {
  std::map<int, double> m;
  for (int i = 1; i <= n; ++i) m[i] = static_cast<double>(n);
  return SparseVec(std::move(m));
}

std::string p_text(double p) { return p == kInfP ? "inf" : format_double(p); }

}  // namespace

double WitnessSequence::evaluated_ratio(int n) const {
  SparseVec x = generator(n);
  return eval(ratio_num, x) / eval(ratio_den, x);
}

WitnessSequence nonequivalence_witness(const std::string& family, double p, double q) {
  WitnessSequence w;
  w.family_id = family;
  if (family == "c00_sup_vs_one" || family == "hamel_sup_vs_one") {
    w.generator = [](int n) { return ramp_vector(n); };
    w.ratio_formula = [](int n) { return 2.0 / (n + 1.0); };
    w.ratio_num = NormExpr::sup();
    w.ratio_den = NormExpr::one();
    w.direction = "C[p(1)](sup) -> 0";
    return w;
  }
  if (family == "p_vs_q") {
    if (std::isnan(p) || std::isnan(q) || p < 1.0 || q < 1.0)
      throw BadParamsError("p_vs_q requires p, q >= 1");
    if (!(p > q)) throw BadParamsError("p_vs_q requires p > q");
    w.p = p;
    w.q = q;
    w.generator = [](int n) { return flat_vector(n); };
    w.ratio_formula = [p, q](int n) {
      return std::pow(static_cast<double>(n), 1.0 / p - 1.0 / q);
    };
    w.ratio_num = NormExpr::pnorm(p);
    w.ratio_den = NormExpr::pnorm(q);
    w.direction = "C[p(" + p_text(q) + ")](p(" + p_text(p) + ")) -> 0";
    return w;
  }
  throw UnknownFamilyError("unknown witness family '" + family + "'");
}

void validate_witness(const WitnessSequence& w, int n_check, double eps_rel) {
  if (n_check < 1) throw BadParamsError("witness validation requires n_check >= 1");
  double prev = 0.0;
  for (int n = 1; n <= n_check; ++n) {
    double formula = w.ratio_formula(n);
    double evaluated = w.evaluated_ratio(n);
    if (std::fabs(evaluated - formula) > eps_rel * formula)
      throw InstanceError("witness family '" + w.family_id + "': evaluated ratio " +
                          format_double(evaluated) + " != formula " + format_double(formula) +
                          " at n=" + std::to_string(n));
    if (n > w.first_monotone_index && !(formula < prev))
      throw InstanceError("witness family '" + w.family_id +
                          "': ratio not strictly decreasing at n=" + std::to_string(n));
    prev = formula;
  }
}

bool FamilyScanReport::all_certified() const {
  for (const auto& e : pairs)
    if (e.status != "nonequivalent_certified") return false;
  return true;
}

std::string FamilyScanReport::to_json() const {
  JsonWriter w;
  w.begin_object();
  w.key("p_values").begin_array();
  for (double p : p_values) w.value(p);
  w.end_array();
  w.key("n_check").value(n_check);
  w.key("pairs").begin_array();
  for (const auto& e : pairs) {
    w.begin_object();
    w.key("p").value(e.p);
    w.key("q").value(e.q);
    w.key("family").value(e.family_id);
    w.key("status").value(e.status);
    if (e.status == "error") w.key("error").value(e.error);
    w.key("last_ratio").value(e.last_ratio);
    w.end_object();
  }
  w.end_array();
  w.key("all_certified").value(all_certified());
  w.end_object();
  return w.str();
}

FamilyScanReport family_scan(const std::vector<double>& p_values, int n_check) {
  for (double p : p_values) {
    if (std::isnan(p) || p < 1.0) throw InvalidPError("family_scan requires exponents >= 1");
  }
  std::set<double> distinct(p_values.begin(), p_values.end());
  if (distinct.size() != p_values.size())
    throw BadParamsError("family_scan requires distinct exponents");
  if (n_check < 1) throw BadParamsError("family_scan requires n_check >= 1");

  FamilyScanReport rep;
  rep.p_values = p_values;
  rep.n_check = n_check;
  for (std::size_t i = 0; i < p_values.size(); ++i) {
    for (std::size_t j = i + 1; j < p_values.size(); ++j) {
      double hi = std::max(p_values[i], p_values[j]);
      double lo = std::min(p_values[i], p_values[j]);
      FamilyScanEntry entry;
      entry.p = hi;
      entry.q = lo;
      entry.family_id = "p_vs_q";
      try {
        WitnessSequence w = nonequivalence_witness("p_vs_q", hi, lo);
        validate_witness(w, n_check);
        entry.status = "nonequivalent_certified";
        entry.last_ratio = w.ratio_formula(n_check);
      } catch (const EvsError& err) {
        entry.status = "error";
        entry.error = err.what();
      }
      rep.pairs.push_back(entry);
    }
  }
  return rep;
}

}  // namespace evsnorm
