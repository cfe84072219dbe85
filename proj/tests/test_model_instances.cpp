#include <doctest.h>

#include <random>

#include "evsnorm/errors.hpp"
#include "evsnorm/model_instances.hpp"

using namespace evsnorm;

namespace {

FinitePointSet set1d(std::initializer_list<double> xs) {
  std::vector<Vec> pts;
  for (double x : xs) pts.push_back(Vec({x}));
  return FinitePointSet::make(std::move(pts));
}

}  // namespace

TEST_CASE("minkowski_sum") {
  SUBCASE("the singleton at the origin is the identity") {
    FinitePointSet a = set1d({0.0});
    FinitePointSet b = set1d({3.5});
    CHECK(minkowski_sum(a, b).points == b.points);
  }
  SUBCASE("enumeration in R^1") {
    FinitePointSet s = minkowski_sum(set1d({0.0, 1.0}), set1d({0.0, 2.0}));
    CHECK(s.size() == 4);
    CHECK(s.literal() == "{[0],[1],[2],[3]}");
  }
  SUBCASE("coincident sums merge") {
    FinitePointSet seg = FinitePointSet::make({Vec({0.0, 0.0}), Vec({1.0, 0.0})});
    FinitePointSet s = minkowski_sum(seg, seg);
    CHECK(s.size() == 3);
    CHECK(s.literal() == "{[0,0],[1,0],[2,0]}");
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(minkowski_sum(set1d({0.0}), FinitePointSet::make({Vec({0.0, 0.0})})),
                    DimensionMismatchError);
  }
}

TEST_CASE("minkowski sum cardinality, commutativity and associativity") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coord(-4, 4);
  std::uniform_int_distribution<int> size(1, 5);
  auto random_set = [&] {
    std::vector<Vec> pts;
    int k = size(rng);
    for (int i = 0; i < k; ++i)
      pts.push_back(Vec({coord(rng) * 0.5, coord(rng) * 0.5}));
    return FinitePointSet::make(std::move(pts));
  };
  for (int trial = 0; trial < 60; ++trial) {
    FinitePointSet a = random_set();
    FinitePointSet b = random_set();
    FinitePointSet c = random_set();
    FinitePointSet ab = minkowski_sum(a, b);
    CHECK(ab.size() <= a.size() * b.size());
    CHECK(set_equal(ab, minkowski_sum(b, a)) == Eq::Equal);
    CHECK(set_equal(minkowski_sum(ab, c), minkowski_sum(a, minkowski_sum(b, c))) == Eq::Equal);
  }
}

TEST_CASE("set_scale") {
  FinitePointSet a = FinitePointSet::make({Vec({1.0, 0.0}), Vec({0.0, 1.0})});
  CHECK(set_scale(2.0, a).literal() == "{[0,2],[2,0]}");
  FinitePointSet zero = set_scale(0.0, a);
  CHECK(zero.size() == 1);
  CHECK(zero.points[0] == Vec({0.0, 0.0}));
  CHECK(set_scale(-1.0, set1d({0.0, 1.0})).literal() == "{[-1],[0]}");
}

TEST_CASE("subset_leq") {
  CHECK(subset_leq(set1d({0.0}), set1d({0.0, 1.0})).certified());
  Ternary t = subset_leq(set1d({0.0, 2.0}), set1d({0.0, 1.0}));
  REQUIRE(t.refuted());
  CHECK(t.witness == "[2]");
  FinitePointSet a = set1d({-1.0, 0.5});
  CHECK(subset_leq(a, a).certified());
}

TEST_CASE("hyperspace A3(iii) strictness witness") {
  // (1+1){0,1} = {0,2} is a proper subset of {0,1} + {0,1} = {0,1,2}.
  FinitePointSet a = set1d({0.0, 1.0});
  FinitePointSet lhs = set_scale(2.0, a);
  FinitePointSet rhs = minkowski_sum(a, a);
  CHECK(subset_leq(lhs, rhs).certified());
  CHECK(set_equal(lhs, rhs) == Eq::Unequal);
  CHECK(rhs.literal() == "{[0],[1],[2]}");
}

TEST_CASE("canonicalisation merges near-duplicates and orders points") {
  FinitePointSet s = FinitePointSet::make(
      {Vec({1.0, 0.0}), Vec({1.0 + 1e-12, 0.0}), Vec({-1.0, 0.0})});
  CHECK(s.size() == 2);
  CHECK(s.literal() == "{[-1,0],[1,0]}");
}

TEST_CASE("cone operations") {
  Vec a({1.0, 2.0});
  Vec b({0.5, -1.0});
  SUBCASE("addition") {
    ConePoint s = cone_add(ConePoint{1.0, a}, ConePoint{2.0, b});
    CHECK(s.r == 3.0);
    CHECK(s.a == Vec({1.5, 1.0}));
  }
  SUBCASE("scalar multiplication uses the modulus on the radial part only") {
    ConePoint s = cone_smul(-2.0, ConePoint{1.0, a});
    CHECK(s.r == 2.0);
    CHECK(s.a == Vec({-2.0, -4.0}));
  }
  SUBCASE("order needs equal vector parts") {
    CHECK(cone_leq(ConePoint{1.0, a}, ConePoint{2.0, a}).certified());
    CHECK(cone_leq(ConePoint{1.0, a}, ConePoint{2.0, b}).refuted());
    CHECK(cone_leq(ConePoint{2.0, a}, ConePoint{1.0, a}).refuted());
  }
  SUBCASE("literal") { CHECK(ConePoint{1.5, b}.literal() == "(1.5; [0.5,-1])"); }
}

TEST_CASE("hyperspace primitivity is singleton-ness; cone primitivity is r = 0") {
  auto hyper = make_hyperspace_instance(2);
  CHECK(hyper->is_primitive(FinitePointSet::make({Vec({2.0, 1.0})})));
  CHECK_FALSE(hyper->is_primitive(FinitePointSet::make({Vec({0.0, 0.0}), Vec({1.0, 0.0})})));

  auto cone = make_cone_instance(2);
  CHECK(cone->is_primitive(ConePoint{0.0, Vec({5.0, -1.0})}));
  CHECK_FALSE(cone->is_primitive(ConePoint{0.25, Vec({5.0, -1.0})}));
}

TEST_CASE("instance registry") {
  CHECK(make_instance("norms", 3)->id() == "norms-r3");
  CHECK(make_instance("hyperspace", 2)->id() == "hyperspace-r2");
  CHECK(make_instance("cone", 4)->id() == "cone-r4");
  CHECK_THROWS_AS(make_instance("frobnicator", 2), InstanceError);
}
