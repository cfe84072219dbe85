#include "evsnorm/norm_expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>

#include "evsnorm/errors.hpp"

namespace evsnorm {

struct NormExpr::Node {
  Kind kind;
  // Leaf
  double p = 0.0;
  std::vector<double> weights;  // empty = all ones
  // Scale
  double factor = 0.0;
  // Scale child / Sum children
  std::vector<std::shared_ptr<const Node>> children;
};

namespace {

using NodePtr = std::shared_ptr<const NormExpr::Node>;

const NodePtr& zero_node() {
  static const NodePtr n = [] {
    auto z = std::make_shared<NormExpr::Node>();
    z->kind = NormExpr::Kind::Zero;
    return z;
  }();
  return n;
}

int kind_rank(NormExpr::Kind k) {
  switch (k) {
    case NormExpr::Kind::Zero: return 0;
    case NormExpr::Kind::Leaf: return 1;
    case NormExpr::Kind::Scale: return 2;
    case NormExpr::Kind::Sum: return 3;
  }
  return 4;
}

int cmp_double(double a, double b) {
  if (a < b) return -1;
  if (a > b) return 1;
  return 0;
}

int cmp_nodes(const NodePtr& a, const NodePtr& b) {
  if (a == b) return 0;
  if (int c = cmp_double(kind_rank(a->kind), kind_rank(b->kind))) return c;
  switch (a->kind) {
    case NormExpr::Kind::Zero:
      return 0;
    case NormExpr::Kind::Leaf: {
      if (int c = cmp_double(a->p, b->p)) return c;
      if (int c = cmp_double(static_cast<double>(a->weights.size()),
                             static_cast<double>(b->weights.size())))
        return c;
      for (std::size_t i = 0; i < a->weights.size(); ++i) {
        if (int c = cmp_double(a->weights[i], b->weights[i])) return c;
      }
      return 0;
    }
    case NormExpr::Kind::Scale: {
      if (int c = cmp_nodes(a->children[0], b->children[0])) return c;
      return cmp_double(a->factor, b->factor);
    }
    case NormExpr::Kind::Sum: {
      if (int c = cmp_double(static_cast<double>(a->children.size()),
                             static_cast<double>(b->children.size())))
        return c;
      for (std::size_t i = 0; i < a->children.size(); ++i) {
        if (int c = cmp_nodes(a->children[i], b->children[i])) return c;
      }
      return 0;
    }
  }
  return 0;
}

NodePtr make_scale(double factor, NodePtr child);

NodePtr make_sum(std::vector<NodePtr> children) {
  std::vector<NodePtr> flat;
  for (auto& c : children) {
    if (c->kind == NormExpr::Kind::Zero) continue;
    if (c->kind == NormExpr::Kind::Sum) {
      flat.insert(flat.end(), c->children.begin(), c->children.end());
    } else {
      flat.push_back(std::move(c));
    }
  }
  if (flat.empty()) return zero_node();
  if (flat.size() == 1) return flat[0];
  std::stable_sort(flat.begin(), flat.end(),
                   [](const NodePtr& a, const NodePtr& b) { return cmp_nodes(a, b) < 0; });
  auto n = std::make_shared<NormExpr::Node>();
  n->kind = NormExpr::Kind::Sum;
  n->children = std::move(flat);
  return n;
}

NodePtr make_scale(double factor, NodePtr child) {
  if (!std::isfinite(factor)) throw ParseError("scale factor must be finite");
  factor = std::fabs(factor);
  if (factor == 0.0 || child->kind == NormExpr::Kind::Zero) return zero_node();
  if (child->kind == NormExpr::Kind::Scale) {
    factor *= child->factor;
    child = child->children[0];
  }
  if (factor == 1.0) return child;
  auto n = std::make_shared<NormExpr::Node>();
  n->kind = NormExpr::Kind::Scale;
  n->factor = factor;
  n->children = {std::move(child)};
  return n;
}

NodePtr make_leaf(double p, std::vector<double> weights) {
  if (std::isnan(p) || p < 1.0) throw InvalidPError("p-norm exponent must satisfy p >= 1");
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) throw ParseError("norm weights must be positive finite");
  }
  // All-ones weights are the default; dropping them keeps trees canonical.
  if (!weights.empty() && std::all_of(weights.begin(), weights.end(),
                                      [](double w) { return w == 1.0; })) {
    weights.clear();
  }
  auto n = std::make_shared<NormExpr::Node>();
  n->kind = NormExpr::Kind::Leaf;
  n->p = p;
  n->weights = std::move(weights);
  return n;
}

double eval_node(const NormExpr::Node& n, const Vec& x);
double eval_node(const NormExpr::Node& n, const SparseVec& x);

double leaf_value(const NormExpr::Node& n, const Vec& x) {
  if (!n.weights.empty() && n.weights.size() != x.dim())
    throw DimensionMismatchError("weight vector dimension does not match point dimension");
  const bool weighted = !n.weights.empty();
  if (n.p == kInfP) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) {
      double t = (weighted ? n.weights[i] : 1.0) * std::fabs(x[i]);
      m = std::max(m, t);
    }
    return m;
  }
  if (n.p == 1.0) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) s += (weighted ? n.weights[i] : 1.0) * std::fabs(x[i]);
    return s;
  }
  if (n.p == 2.0 && !weighted) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) s += x[i] * x[i];
    return std::sqrt(s);
  }
  double s = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i)
    s += (weighted ? n.weights[i] : 1.0) * std::pow(std::fabs(x[i]), n.p);
  return std::pow(s, 1.0 / n.p);
}

double leaf_value(const NormExpr::Node& n, const SparseVec& x) {
  if (!n.weights.empty())
    throw DimensionMismatchError("weighted norm leaves require a fixed-dimension point");
  if (n.p == kInfP) {
    double m = 0.0;
    for (const auto& [i, v] : x.entries) m = std::max(m, std::fabs(v));
    return m;
  }
  if (n.p == 1.0) {
    double s = 0.0;
    for (const auto& [i, v] : x.entries) s += std::fabs(v);
    return s;
  }
  double s = 0.0;
  for (const auto& [i, v] : x.entries) s += std::pow(std::fabs(v), n.p);
  return std::pow(s, 1.0 / n.p);
}

template <class P>
double eval_node_impl(const NormExpr::Node& n, const P& x) {
  switch (n.kind) {
    case NormExpr::Kind::Zero:
      return 0.0;
    case NormExpr::Kind::Leaf:
      return leaf_value(n, x);
    case NormExpr::Kind::Scale:
      return n.factor * eval_node(*n.children[0], x);
    case NormExpr::Kind::Sum: {
      double s = 0.0;
      for (const auto& c : n.children) s += eval_node(*c, x);
      return s;
    }
  }
  return 0.0;
}

double eval_node(const NormExpr::Node& n, const Vec& x) { return eval_node_impl(n, x); }
double eval_node(const NormExpr::Node& n, const SparseVec& x) { return eval_node_impl(n, x); }

}  // namespace

NormExpr::NormExpr() : node_(zero_node()) {}

NormExpr NormExpr::zero() { return NormExpr(zero_node()); }

NormExpr NormExpr::pnorm(double p) { return NormExpr(make_leaf(p, {})); }

NormExpr NormExpr::pnorm(double p, std::vector<double> weights) {
  return NormExpr(make_leaf(p, std::move(weights)));
}

NormExpr::Kind NormExpr::kind() const { return node_->kind; }

double NormExpr::leaf_p() const { return node_->p; }

const std::vector<double>& NormExpr::leaf_weights() const { return node_->weights; }

bool NormExpr::leaf_has_weights() const { return !node_->weights.empty(); }

double NormExpr::scale_factor() const { return node_->factor; }

NormExpr NormExpr::scale_child() const { return NormExpr(node_->children[0]); }

std::size_t NormExpr::sum_arity() const { return node_->children.size(); }

NormExpr NormExpr::sum_child(std::size_t i) const { return NormExpr(node_->children[i]); }

bool NormExpr::structurally_equal(const NormExpr& other) const {
  return cmp_nodes(node_, other.node_) == 0;
}

int NormExpr::compare(const NormExpr& a, const NormExpr& b) { return cmp_nodes(a.node_, b.node_); }

NormExpr evs_add(const NormExpr& f, const NormExpr& g) {
  return NormExpr(make_sum({f.node_, g.node_}));
}

NormExpr evs_smul(double alpha, const NormExpr& f) {
  return NormExpr(make_scale(alpha, f.node_));
}

double eval(const NormExpr& expr, const Vec& x) { return eval_node(*expr.node_, x); }
double eval(const NormExpr& expr, const SparseVec& x) { return eval_node(*expr.node_, x); }
double eval(const NormExpr& expr, const Point& x) {
  return std::visit([&](const auto& p) { return eval(expr, p); }, x);
}

// ---------------------------------------------------------------------------
// Text form
// ---------------------------------------------------------------------------

namespace {

std::string p_to_text(double p) { return p == kInfP ? "inf" : format_double(p); }

void node_to_text(const NormExpr::Node& n, std::string& out) {
  switch (n.kind) {
    case NormExpr::Kind::Zero:
      out += "zero";
      return;
    case NormExpr::Kind::Leaf: {
      if (n.p == kInfP) {
        out += "sup";
        if (!n.weights.empty()) {
          out += "(w=";
          for (std::size_t i = 0; i < n.weights.size(); ++i) {
            if (i) out += ",";
            out += format_double(n.weights[i]);
          }
          out += ")";
        }
        return;
      }
      out += "p(";
      out += p_to_text(n.p);
      if (!n.weights.empty()) {
        out += "; w=";
        for (std::size_t i = 0; i < n.weights.size(); ++i) {
          if (i) out += ",";
          out += format_double(n.weights[i]);
        }
      }
      out += ")";
      return;
    }
    case NormExpr::Kind::Scale:
      out += "scale(";
      out += format_double(n.factor);
      out += ", ";
      node_to_text(*n.children[0], out);
      out += ")";
      return;
    case NormExpr::Kind::Sum:
      out += "sum(";
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i) out += ", ";
        node_to_text(*n.children[i], out);
      }
      out += ")";
      return;
  }
}

struct ExprCursor {
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
  void expect(char c) {
    if (!eat(c)) throw ParseError(std::string("expected '") + c + "' in norm expression");
  }
  bool eat_word(std::string_view w) {
    skip_ws();
    if (text.substr(pos, w.size()) == w) {
      std::size_t after = pos + w.size();
      if (after < text.size() &&
          (std::isalnum(static_cast<unsigned char>(text[after])) || text[after] == '_'))
        return false;
      pos = after;
      return true;
    }
    return false;
  }
  double number() {
    skip_ws();
    const char* begin = text.data() + pos;
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin) throw ParseError("expected number in norm expression");
    pos += static_cast<std::size_t>(end - begin);
    return v;
  }
  double p_value() {
    skip_ws();
    if (eat_word("inf")) return kInfP;
    return number();
  }
  std::vector<double> weight_list() {
    std::vector<double> w;
    w.push_back(number());
    while (eat(',')) w.push_back(number());
    return w;
  }
};

NodePtr parse_expr(ExprCursor& c);

NodePtr parse_expr(ExprCursor& c) {
  c.skip_ws();
  if (c.eat_word("zero")) return zero_node();
  if (c.eat_word("one")) return make_leaf(1.0, {});
  if (c.eat_word("sup")) {
    std::vector<double> w;
    std::size_t mark = c.pos;
    if (c.eat('(')) {
      if (c.eat_word("w")) {
        c.expect('=');
        w = c.weight_list();
        c.expect(')');
      } else {
        c.pos = mark;  // '(' belonged to an outer construct
      }
    }
    return make_leaf(kInfP, std::move(w));
  }
  if (c.eat_word("p")) {
    c.expect('(');
    double p = c.p_value();
    std::vector<double> w;
    if (c.eat(';')) {
      if (!c.eat_word("w")) throw ParseError("expected w= after ';' in p(...)");
      c.expect('=');
      w = c.weight_list();
    }
    c.expect(')');
    return make_leaf(p, std::move(w));
  }
  if (c.eat_word("scale")) {
    c.expect('(');
    double a = c.number();
    c.expect(',');
    NodePtr child = parse_expr(c);
    c.expect(')');
    return make_scale(a, std::move(child));
  }
  if (c.eat_word("sum")) {
    c.expect('(');
    std::vector<NodePtr> children;
    children.push_back(parse_expr(c));
    while (c.eat(',')) children.push_back(parse_expr(c));
    c.expect(')');
    return make_sum(std::move(children));
  }
  throw ParseError("unrecognised norm expression near position " + std::to_string(c.pos));
}

}  // namespace

std::string NormExpr::to_text() const {
  std::string out;
  node_to_text(*node_, out);
  return out;
}

NormExpr NormExpr::parse(std::string_view text) {
  ExprCursor c{text};
  NodePtr n = parse_expr(c);
  c.skip_ws();
  if (c.pos != text.size()) throw ParseError("trailing characters after norm expression");
  return NormExpr(std::move(n));
}

}  // namespace evsnorm
