#include "evsnorm/vec.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "evsnorm/errors.hpp"

namespace evsnorm {

Vec::Vec(std::vector<double> c) : coords(std::move(c)) {
  for (double x : coords) {
    if (!std::isfinite(x)) throw ParseError("vector coordinate is not finite");
  }
}

SparseVec::SparseVec(std::map<int, double> e) : entries(std::move(e)) {
  for (auto it = entries.begin(); it != entries.end();) {
    if (it->first < 1) throw ParseError("sparse vector index must be >= 1");
    if (!std::isfinite(it->second)) throw ParseError("sparse vector value is not finite");
    if (it->second == 0.0) {
      it = entries.erase(it);
    } else {
      ++it;
    }
  }
}

std::string format_double(double x) {
  if (x == 0.0) return "0";  // canonicalise -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!eat(c)) throw ParseError(std::string("expected '") + c + "' in " + what);
  }
  bool done() {
    skip_ws();
    return pos == text.size();
  }
  double number(const char* what) {
    skip_ws();
    const char* begin = text.data() + pos;
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin) throw ParseError(std::string("expected number in ") + what);
    pos += static_cast<std::size_t>(end - begin);
    if (!std::isfinite(v)) throw ParseError(std::string("non-finite number in ") + what);
    return v;
  }
};

}  // namespace

Vec parse_vec(std::string_view text) {
  Cursor c{text};
  c.expect('[', "vector literal");
  std::vector<double> coords;
  if (!c.eat(']')) {
    for (;;) {
      coords.push_back(c.number("vector literal"));
      if (c.eat(']')) break;
      c.expect(',', "vector literal");
    }
  }
  if (!c.done()) throw ParseError("trailing characters after vector literal");
  if (coords.empty()) throw ParseError("vector literal must have at least one coordinate");
  return Vec(std::move(coords));
}

SparseVec parse_sparse_vec(std::string_view text) {
  Cursor c{text};
  c.expect('{', "sparse vector literal");
  std::map<int, double> entries;
  if (!c.eat('}')) {
    for (;;) {
      double idx = c.number("sparse vector literal");
      int i = static_cast<int>(idx);
      if (static_cast<double>(i) != idx || i < 1)
        throw ParseError("sparse vector index must be a positive integer");
      c.expect(':', "sparse vector literal");
      double v = c.number("sparse vector literal");
      if (entries.count(i)) throw ParseError("duplicate sparse vector index");
      entries[i] = v;
      if (c.eat('}')) break;
      c.expect(',', "sparse vector literal");
    }
  }
  if (!c.done()) throw ParseError("trailing characters after sparse vector literal");
  return SparseVec(std::move(entries));
}

Point parse_point(std::string_view text) {
  Cursor c{text};
  c.skip_ws();
  if (c.pos < text.size() && text[c.pos] == '{') return parse_sparse_vec(text);
  return parse_vec(text);
}

std::string to_literal(const Vec& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (i) out += ",";
    out += format_double(v.coords[i]);
  }
  out += "]";
  return out;
}

std::string to_literal(const SparseVec& v) {
  std::string out = "{";
  bool first = true;
  for (const auto& [i, x] : v.entries) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(i);
    out += ":";
    out += format_double(x);
  }
  out += "}";
  return out;
}

std::string to_literal(const Point& p) {
  return std::visit([](const auto& v) { return to_literal(v); }, p);
}

bool lex_less(const Vec& a, const Vec& b) {
  if (a.coords.size() != b.coords.size()) return a.coords.size() < b.coords.size();
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (a.coords[i] != b.coords[i]) return a.coords[i] < b.coords[i];
  }
  return false;
}

}  // namespace evsnorm
