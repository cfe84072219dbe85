#include "evsnorm/axiom_checker.hpp"

#include <cmath>
#include <random>
#include <string>

#include "evsnorm/errors.hpp"
#include "evsnorm/json_writer.hpp"

namespace evsnorm {

namespace {

struct Recorder {
  CheckEntry entry;

  void trial() { ++entry.trials; }

  void fail(Counterexample ce) {
    // Keep scanning after the first violation so trials reflect the full
    // combination count, but report only the lexicographically first one.
    if (entry.pass) {
      entry.pass = false;
      entry.counterexample = std::move(ce);
    }
  }
};

struct Ctx {
  const EvsInstance& inst;
  std::vector<Element> samples;
  std::vector<double> scalars;
  Element theta;
  std::vector<bool> sample_is_zero;
  std::vector<bool> sample_is_primitive;

  bool eq(const Element& a, const Element& b, const std::string& where) const {
    switch (inst.equal(a, b)) {
      case Eq::Equal: return true;
      case Eq::Unequal: return false;
      case Eq::Indeterminate:
        throw ToleranceError("equality indeterminate (within the eps_eq band) in " + where);
    }
    return false;
  }

  Counterexample ce(std::vector<std::size_t> idx, std::vector<double> sc,
                    std::string detail) const {
    Counterexample c;
    c.sample_indices = std::move(idx);
    c.scalars = std::move(sc);
    for (std::size_t i : c.sample_indices) c.elements.push_back(inst.describe(samples[i]));
    c.detail = std::move(detail);
    return c;
  }
};

Ctx make_ctx(const EvsInstance& inst, std::uint64_t seed, std::size_t n_samples,
             std::size_t n_scalars) {
  if (n_samples < 3) throw InstanceError("check requires n_samples >= 3");
  Ctx ctx{inst, inst.sample(seed, n_samples), scalar_pool(seed, n_scalars), inst.zero(), {}, {}};
  if (ctx.samples.size() < n_samples)
    throw InstanceError("sampler for '" + inst.id() + "' yielded " +
                        std::to_string(ctx.samples.size()) + " of " + std::to_string(n_samples) +
                        " requested elements");
  ctx.sample_is_zero.reserve(ctx.samples.size());
  ctx.sample_is_primitive.reserve(ctx.samples.size());
  for (const auto& x : ctx.samples) {
    ctx.sample_is_zero.push_back(ctx.eq(x, ctx.theta, "zero detection"));
    ctx.sample_is_primitive.push_back(inst.is_primitive(x));
  }
  return ctx;
}

// A1: commutative semigroup with identity theta.
CheckEntry check_a1(const Ctx& c) {
  Recorder r;
  const std::size_t n = c.samples.size();
  for (std::size_t i = 0; i < n; ++i) {
    r.trial();
    if (!c.eq(c.inst.add(c.samples[i], c.theta), c.samples[i], "A1 right identity"))
      r.fail(c.ce({i}, {}, "A1: add(x, theta) != x"));
    r.trial();
    if (!c.eq(c.inst.add(c.theta, c.samples[i]), c.samples[i], "A1 left identity"))
      r.fail(c.ce({i}, {}, "A1: add(theta, x) != x"));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      r.trial();
      if (!c.eq(c.inst.add(c.samples[i], c.samples[j]), c.inst.add(c.samples[j], c.samples[i]),
                "A1 commutativity"))
        r.fail(c.ce({i, j}, {}, "A1: add(x, y) != add(y, x)"));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        r.trial();
        Element lhs = c.inst.add(c.inst.add(c.samples[i], c.samples[j]), c.samples[k]);
        Element rhs = c.inst.add(c.samples[i], c.inst.add(c.samples[j], c.samples[k]));
        if (!c.eq(lhs, rhs, "A1 associativity"))
          r.fail(c.ce({i, j, k}, {}, "A1: (x + y) + z != x + (y + z)"));
      }
    }
  }
  return r.entry;
}

// A2: x <= y implies x + z <= y + z and alpha x <= alpha y.
CheckEntry check_a2(const Ctx& c) {
  Recorder r;
  const std::size_t n = c.samples.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!c.inst.leq(c.samples[i], c.samples[j]).holds()) continue;
      for (std::size_t k = 0; k < n; ++k) {
        r.trial();
        Ternary t = c.inst.leq(c.inst.add(c.samples[i], c.samples[k]),
                               c.inst.add(c.samples[j], c.samples[k]));
        if (t.refuted())
          r.fail(c.ce({i, j, k}, {}, "A2: x <= y but x + z <= y + z refuted (" + t.witness + ")"));
      }
      for (double a : c.scalars) {
        r.trial();
        Ternary t = c.inst.leq(c.inst.smul(a, c.samples[i]), c.inst.smul(a, c.samples[j]));
        if (t.refuted())
          r.fail(c.ce({i, j}, {a},
                      "A2: x <= y but alpha*x <= alpha*y refuted (" + t.witness + ")"));
      }
    }
  }
  return r.entry;
}

// A3: (i) alpha(x+y) = alpha x + alpha y, (ii) alpha(beta x) = (alpha beta) x,
// (iii) (alpha+beta) x <= alpha x + beta x, (iv) 1 x = x.
CheckEntry check_a3(const Ctx& c, std::int64_t* strict_count) {
  Recorder r;
  const std::size_t n = c.samples.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (double a : c.scalars) {
        r.trial();
        Element lhs = c.inst.smul(a, c.inst.add(c.samples[i], c.samples[j]));
        Element rhs = c.inst.add(c.inst.smul(a, c.samples[i]), c.inst.smul(a, c.samples[j]));
        if (!c.eq(lhs, rhs, "A3(i)"))
          r.fail(c.ce({i, j}, {a}, "A3(i): alpha(x + y) != alpha x + alpha y"));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (double a : c.scalars) {
      for (double b : c.scalars) {
        r.trial();
        Element lhs = c.inst.smul(a, c.inst.smul(b, c.samples[i]));
        Element rhs = c.inst.smul(a * b, c.samples[i]);
        if (!c.eq(lhs, rhs, "A3(ii)"))
          r.fail(c.ce({i}, {a, b}, "A3(ii): alpha(beta x) != (alpha beta) x"));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (double a : c.scalars) {
      for (double b : c.scalars) {
        r.trial();
        Element lhs = c.inst.smul(a + b, c.samples[i]);
        Element rhs = c.inst.add(c.inst.smul(a, c.samples[i]), c.inst.smul(b, c.samples[i]));
        Ternary t = c.inst.leq(lhs, rhs);
        if (t.refuted()) {
          r.fail(c.ce({i}, {a, b},
                      "A3(iii): (alpha+beta) x <= alpha x + beta x refuted (" + t.witness + ")"));
        } else if (strict_count && !c.eq(lhs, rhs, "A3(iii) strictness")) {
          ++*strict_count;
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    r.trial();
    if (!c.eq(c.inst.smul(1.0, c.samples[i]), c.samples[i], "A3(iv)"))
      r.fail(c.ce({i}, {1.0}, "A3(iv): 1 x != x"));
  }
  return r.entry;
}

// A4: alpha x = theta iff alpha = 0 or x = theta.
CheckEntry check_a4(const Ctx& c) {
  Recorder r;
  for (std::size_t i = 0; i < c.samples.size(); ++i) {
    for (double a : c.scalars) {
      r.trial();
      bool is_theta = c.eq(c.inst.smul(a, c.samples[i]), c.theta, "A4");
      bool expected = (a == 0.0) || c.sample_is_zero[i];
      if (is_theta != expected) {
        r.fail(c.ce({i}, {a},
                    is_theta ? "A4: alpha x = theta with alpha != 0 and x != theta"
                             : "A4: alpha x != theta although alpha = 0 or x = theta"));
      }
    }
  }
  return r.entry;
}

// A5: x + (-1)x = theta iff x is primitive; primitive elements must also be
// minimal among the samples.
CheckEntry check_a5(const Ctx& c) {
  Recorder r;
  const std::size_t n = c.samples.size();
  for (std::size_t i = 0; i < n; ++i) {
    r.trial();
    Element lhs = c.inst.add(c.samples[i], c.inst.smul(-1.0, c.samples[i]));
    bool vanishes = c.eq(lhs, c.theta, "A5");
    if (vanishes != c.sample_is_primitive[i]) {
      r.fail(c.ce({i}, {},
                  vanishes ? "A5: x + (-1)x = theta but is_primitive(x) is false"
                           : "A5: is_primitive(x) but x + (-1)x != theta"));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!c.sample_is_primitive[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      r.trial();
      if (c.inst.leq(c.samples[j], c.samples[i]).holds() &&
          !c.eq(c.samples[j], c.samples[i], "A5 minimality")) {
        r.fail(c.ce({i, j}, {}, "A5: sampled y lies strictly below a claimed primitive"));
      }
    }
  }
  return r.entry;
}

// A6: every sampled x has a sampled primitive p with p <= x.
CheckEntry check_a6(const Ctx& c) {
  Recorder r;
  const std::size_t n = c.samples.size();
  for (std::size_t i = 0; i < n; ++i) {
    r.trial();
    bool found = false;
    for (std::size_t j = 0; j < n && !found; ++j) {
      if (c.sample_is_primitive[j] && c.inst.leq(c.samples[j], c.samples[i]).holds()) found = true;
    }
    if (!found && c.inst.is_primitive(c.theta) && c.inst.leq(c.theta, c.samples[i]).holds())
      found = true;
    if (!found) r.fail(c.ce({i}, {}, "A6: no sampled primitive lies below x"));
  }
  return r.entry;
}

std::vector<Element> primitive_pool(const Ctx& c, const Element& x,
                                    const std::vector<Element>& pool, Recorder* r) {
  std::vector<Element> found;
  for (const auto& p : pool) {
    if (r) r->trial();
    if (!c.inst.is_primitive(p)) continue;
    if (!c.inst.leq(p, x).holds()) continue;
    bool dup = false;
    for (const auto& q : found) {
      if (c.eq(p, q, "primitive dedup")) {
        dup = true;
        break;
      }
    }
    if (!dup) found.push_back(p);
  }
  return found;
}

PropertyReport run_properties(const Ctx& c) {
  PropertyReport rep;
  const std::size_t n = c.samples.size();

  {
    Recorder r;
    for (std::size_t i = 0; i < n; ++i) {
      for (double a : c.scalars) {
        r.trial();
        if (!c.eq(c.inst.smul(a, c.samples[i]), c.inst.smul(std::fabs(a), c.samples[i]),
                  "homogeneous"))
          r.fail(c.ce({i}, {a}, "homogeneous: alpha x != |alpha| x"));
      }
    }
    rep.homogeneous = r.entry;
  }
  {
    Recorder r;
    for (std::size_t i = 0; i < n; ++i) {
      for (double a : c.scalars) {
        if (a < 0.0) continue;
        for (double b : c.scalars) {
          if (b < 0.0) continue;
          r.trial();
          Element lhs = c.inst.smul(a + b, c.samples[i]);
          Element rhs = c.inst.add(c.inst.smul(a, c.samples[i]), c.inst.smul(b, c.samples[i]));
          if (!c.eq(lhs, rhs, "convex"))
            r.fail(c.ce({i}, {a, b}, "convex: (alpha+beta) x != alpha x + beta x"));
        }
      }
    }
    rep.convex = r.entry;
  }
  {
    Recorder r;
    for (std::size_t i = 0; i < n; ++i) {
      for (double a : c.scalars) {
        if (std::fabs(a) > 1.0) continue;
        r.trial();
        Ternary t = c.inst.leq(c.inst.smul(a, c.samples[i]), c.samples[i]);
        if (t.refuted())
          r.fail(c.ce({i}, {a}, "balanced: alpha x <= x refuted (" + t.witness + ")"));
      }
    }
    rep.balanced = r.entry;
  }
  {
    Recorder rs, rz;
    std::vector<Element> pool = c.samples;
    pool.push_back(c.theta);
    for (std::size_t i = 0; i < n; ++i) {
      rs.trial();
      rz.trial();
      std::vector<Element> prim = primitive_pool(c, c.samples[i], pool, nullptr);
      if (prim.size() != 1) {
        rs.fail(c.ce({i}, {},
                     "single primitive: P_x has " + std::to_string(prim.size()) +
                         " distinct sampled members"));
      }
      bool zero_only = prim.size() == 1 && c.eq(prim[0], c.theta, "zero primitive");
      if (!zero_only)
        rz.fail(c.ce({i}, {}, "zero primitive: P_x != {theta} on sampled candidates"));
    }
    rep.single_primitive = rs.entry;
    rep.zero_primitive = rz.entry;
  }
  return rep;
}

void entry_to_json(JsonWriter& w, const CheckEntry& e) {
  w.begin_object();
  w.key("status").value(e.pass ? "pass" : "fail");
  w.key("counterexample");
  if (e.counterexample) {
    const auto& ce = *e.counterexample;
    w.begin_object();
    w.key("sample_indices").begin_array();
    for (std::size_t i : ce.sample_indices) w.value(static_cast<std::int64_t>(i));
    w.end_array();
    w.key("scalars").begin_array();
    for (double s : ce.scalars) w.value(s);
    w.end_array();
    w.key("elements").begin_array();
    for (const auto& e2 : ce.elements) w.value(e2);
    w.end_array();
    w.key("detail").value(ce.detail);
    w.end_object();
  } else {
    w.null();
  }
  w.key("trials").value(e.trials);
  w.end_object();
}

}  // namespace

std::vector<double> scalar_pool(std::uint64_t seed, std::size_t n_scalars) {
  static const double designated[] = {0.0, 1.0, -1.0, 0.5, -0.5, 2.0, -2.0};
  std::vector<double> pool;
  for (double d : designated) {
    if (pool.size() >= n_scalars) break;
    pool.push_back(d);
  }
  std::mt19937_64 rng(seed ^ 0x5ca1ab1edeadbeefULL);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  while (pool.size() < n_scalars) pool.push_back(dist(rng));
  return pool;
}

AxiomReport check_axioms(const EvsInstance& instance, std::uint64_t seed, std::size_t n_samples,
                         std::size_t n_scalars) {
  Ctx c = make_ctx(instance, seed, n_samples, n_scalars);
  AxiomReport rep;
  rep.instance = instance.id();
  rep.seed = seed;
  rep.axioms[0] = check_a1(c);
  rep.axioms[1] = check_a2(c);
  rep.axioms[2] = check_a3(c, &rep.a3_strict_count);
  rep.axioms[3] = check_a4(c);
  rep.axioms[4] = check_a5(c);
  rep.axioms[5] = check_a6(c);
  rep.properties = run_properties(c);
  return rep;
}

PropertyReport check_properties(const EvsInstance& instance, std::uint64_t seed,
                                std::size_t n_samples, std::size_t n_scalars) {
  Ctx c = make_ctx(instance, seed, n_samples, n_scalars);
  return run_properties(c);
}

std::vector<Element> primitives_of(const EvsInstance& instance, const Element& x,
                                   const std::vector<Element>& candidate_pool) {
  Ctx c{instance, candidate_pool, {}, instance.zero(), {}, {}};
  std::vector<Element> found = primitive_pool(c, x, candidate_pool, nullptr);
  if (found.empty())
    throw A6ViolationError("no primitive element below x in the candidate pool (A6 violated)");
  return found;
}

std::string AxiomReport::to_json() const {
  JsonWriter w;
  w.begin_object();
  w.key("instance").value(instance);
  w.key("seed").value(static_cast<std::uint64_t>(seed));
  w.key("axioms").begin_object();
  static const char* names[] = {"A1", "A2", "A3", "A4", "A5", "A6"};
  for (std::size_t i = 0; i < 6; ++i) {
    w.key(names[i]);
    entry_to_json(w, axioms[i]);
  }
  w.end_object();
  w.key("properties").begin_object();
  w.key("single_primitive");
  entry_to_json(w, properties.single_primitive);
  w.key("zero_primitive");
  entry_to_json(w, properties.zero_primitive);
  w.key("homogeneous");
  entry_to_json(w, properties.homogeneous);
  w.key("convex");
  entry_to_json(w, properties.convex);
  w.key("balanced");
  entry_to_json(w, properties.balanced);
  w.end_object();
  w.end_object();
  return w.str();
}

}  // namespace evsnorm
