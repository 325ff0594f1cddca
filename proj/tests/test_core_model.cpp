#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/graph.hpp"
#include "test_util.hpp"

using namespace gcg;

TEST_CASE("euclidean_distance matches the worked example") {
  const Dataset ds = test::load_table3();
  const auto& a1 = ds.objects[test::id_of(ds, "A1")];
  const auto& c1 = ds.objects[test::id_of(ds, "C1")];
  const auto& c2 = ds.objects[test::id_of(ds, "C2")];
  const auto& d2 = ds.objects[test::id_of(ds, "D2")];

  CHECK(euclidean_distance(a1, a1, 2) == 0.0);
  CHECK(euclidean_distance(a1, c1, 2) == doctest::Approx(1.5).epsilon(1e-12));
  // sqrt(1^2 + 1.5^2)
  CHECK(euclidean_distance(d2, c2, 2) ==
        doctest::Approx(1.8027756377319946).epsilon(1e-12));
  CHECK(euclidean_distance(a1, c1, 2) == euclidean_distance(c1, a1, 2));
}

TEST_CASE("euclidean_distance satisfies the triangle inequality") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> coord(-50.0, 50.0);
  for (int trial = 0; trial < 2000; ++trial) {
    SpatialObject a, b, c;
    const int dims = (trial % 2) ? 2 : 3;
    for (int d = 0; d < dims; ++d) {
      a.coords[d] = coord(rng);
      b.coords[d] = coord(rng);
      c.coords[d] = coord(rng);
    }
    const double ab = euclidean_distance(a, b, dims);
    const double bc = euclidean_distance(b, c, dims);
    const double ac = euclidean_distance(a, c, dims);
    CHECK(ac <= ab + bc + 1e-9);
  }
}

TEST_CASE("edge_count") {
  CHECK(edge_count(2) == 1);
  CHECK(edge_count(3) == 3);
  CHECK(edge_count(22) == 231);
  CHECK_THROWS_AS(edge_count(1), input_error);
  CHECK_THROWS_AS(edge_count(0), input_error);
}

TEST_CASE("edge_count equals brute-force pair enumeration up to n=100") {
  for (std::uint64_t n = 2; n <= 100; ++n) {
    std::uint64_t pairs = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      for (std::uint64_t j = i + 1; j < n; ++j) ++pairs;
    }
    CHECK(edge_count(n) == pairs);
  }
}

TEST_CASE("is_complete on the worked example, tau=2") {
  const Dataset ds = test::load_table3();
  const NeighborGraph g = build_graph_all_pairs(ds, 2.0);

  const std::vector<ObjectId> abc{test::id_of(ds, "A1"), test::id_of(ds, "B1"),
                                  test::id_of(ds, "C1")};
  CHECK(g.is_complete(abc));

  // A2-D2 exceeds tau, so list 7 of the example is not complete
  const std::vector<ObjectId> list7{
      test::id_of(ds, "C2"), test::id_of(ds, "A2"), test::id_of(ds, "B2"),
      test::id_of(ds, "B3"), test::id_of(ds, "D2")};
  CHECK_FALSE(g.is_complete(list7));

  const std::vector<ObjectId> singleton{test::id_of(ds, "A1")};
  CHECK(g.is_complete(singleton));

  const std::vector<ObjectId> unknown{999};
  CHECK_THROWS_AS(g.is_complete(unknown), input_error);
}

TEST_CASE("neighbor graph is symmetric, irreflexive and closed at tau") {
  const Dataset ds = test::random_points(120, 2, 10.0, 7);
  const NeighborGraph g = build_graph_all_pairs(ds, 1.0);
  for (std::size_t a = 0; a < g.size(); ++a) {
    CHECK_FALSE(g.adjacent(static_cast<ObjectId>(a), static_cast<ObjectId>(a)));
    for (std::size_t b = 0; b < g.size(); ++b) {
      const auto oa = static_cast<ObjectId>(a);
      const auto ob = static_cast<ObjectId>(b);
      CHECK(g.adjacent(oa, ob) == g.adjacent(ob, oa));
      if (a != b) {
        const double d = euclidean_distance(ds.objects[a], ds.objects[b], 2);
        CHECK(g.adjacent(oa, ob) == (d <= 1.0));
      }
    }
  }
}

TEST_CASE("type labels reject reserved characters") {
  CHECK(valid_type_label("Main-Early"));
  CHECK(valid_type_label("A"));
  CHECK_FALSE(valid_type_label(""));
  CHECK_FALSE(valid_type_label("-A"));
  CHECK_FALSE(valid_type_label("A+"));
}
