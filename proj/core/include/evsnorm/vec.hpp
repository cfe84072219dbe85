#ifndef EVSNORM_VEC_HPP
#define EVSNORM_VEC_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace evsnorm {

/// Dense real vector, a point of R^n. Literal form: [1,2,3].
struct Vec {
  std::vector<double> coords;

  Vec() = default;
  explicit Vec(std::vector<double> c);

  std::size_t dim() const { return coords.size(); }
  double operator[](std::size_t i) const { return coords[i]; }

  bool operator==(const Vec&) const = default;
};

/// Finitely supported vector with unbounded index set (an element of c00).
/// Keys are 1-based; zero values are never stored. Literal form: {1:1, 2:2}.
struct SparseVec {
  std::map<int, double> entries;

  SparseVec() = default;
  explicit SparseVec(std::map<int, double> e);

  bool operator==(const SparseVec&) const = default;
};

using Point = std::variant<Vec, SparseVec>;

Vec parse_vec(std::string_view text);
SparseVec parse_sparse_vec(std::string_view text);
Point parse_point(std::string_view text);

std::string to_literal(const Vec& v);
std::string to_literal(const SparseVec& v);
std::string to_literal(const Point& p);

/// Lexicographic comparison used wherever a deterministic point order is needed.
bool lex_less(const Vec& a, const Vec& b);

/// %.17g rendering shared by literals and JSON reports.
std::string format_double(double x);

}  // namespace evsnorm

#endif
