#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "core/cliques.hpp"
#include "core/grid.hpp"
#include "test_util.hpp"

using namespace gcg;

namespace {

// Regular pentagon with tau between side and diagonal: the neighborhood
// graph is a 5-cycle, where no closed neighborhood is a clique.
Dataset pentagon() {
  Dataset ds;
  ds.dims = 2;
  ds.intern_type("A");
  for (int i = 0; i < 5; ++i) {
    const double angle = 2.0 * std::numbers::pi * i / 5.0;
    ds.objects.push_back({"v" + std::to_string(i), 0,
                          {std::cos(angle), std::sin(angle), 0.0}});
  }
  return ds;
}

}  // namespace

TEST_CASE("neighborhood lists reproduce the worked example, tau=2") {
  const Dataset ds = test::load_table3();
  const NeighborGraph g = build_graph_grid(ds, 2.0);
  const auto lists = build_neighborhoods(g);

  // one list per object, all ten objects have at least one neighbor
  CHECK(lists.size() == 10);
  for (const auto& nl : lists) {
    CHECK(std::binary_search(nl.members.begin(), nl.members.end(), nl.center));
  }

  // distinct member sets, duplicates collapsed
  std::set<std::set<std::string>> distinct;
  for (const auto& nl : lists) {
    std::set<std::string> names;
    for (ObjectId m : nl.members) names.insert(ds.objects[m].id);
    distinct.insert(std::move(names));
  }
  const std::set<std::set<std::string>> expected{
      {"A1", "B1", "C1"},
      {"A3", "D1"},
      {"A2", "B2", "B3", "C2"},
      {"A2", "B2", "B3", "C2", "D2"},
      {"C2", "D2"}};
  CHECK(distinct == expected);

  // the closed neighborhood of C2 is the example's list 7
  const auto c2 = test::id_of(ds, "C2");
  for (const auto& nl : lists) {
    if (nl.center != c2) continue;
    std::set<std::string> names;
    for (ObjectId m : nl.members) names.insert(ds.objects[m].id);
    CHECK(names == std::set<std::string>{"A2", "B2", "B3", "C2", "D2"});
  }
}

TEST_CASE("isolated objects produce no neighborhood list") {
  Dataset ds;
  ds.dims = 2;
  ds.intern_type("A");
  ds.objects.push_back({"a", 0, {0.0, 0.0, 0.0}});
  ds.objects.push_back({"b", 0, {50.0, 50.0, 0.0}});
  const NeighborGraph g = build_graph_grid(ds, 1.0);
  CHECK(build_neighborhoods(g).empty());
}

TEST_CASE("neighborhood membership is symmetric") {
  const Dataset ds = test::random_points(150, 2, 10.0, 99);
  const NeighborGraph g = build_graph_grid(ds, 1.2);
  const auto lists = build_neighborhoods(g);
  std::map<ObjectId, std::set<ObjectId>> members_of;
  for (const auto& nl : lists) {
    members_of[nl.center] =
        std::set<ObjectId>(nl.members.begin(), nl.members.end());
  }
  for (const auto& [center, members] : members_of) {
    for (ObjectId m : members) {
      if (m == center) continue;
      CHECK(members_of.at(m).contains(center));
    }
  }
}

TEST_CASE("mining the worked example yields the four pruned lists") {
  const Dataset ds = test::load_table3();
  const NeighborGraph g = build_graph_grid(ds, 2.0);
  const CliqueSet mined = mine_maximal_cliques(g);

  const std::set<std::set<std::string>> expected{{"A1", "B1", "C1"},
                                                 {"A3", "D1"},
                                                 {"A2", "B2", "B3", "C2"},
                                                 {"C2", "D2"}};
  CHECK(test::named(mined, ds) == expected);
  CHECK(test::named(brute_force_maximal_cliques(g), ds) == expected);

  const auto hist = cardinality_histogram(mined);
  CHECK(hist == std::map<std::size_t, std::size_t>{{2, 2}, {3, 1}, {4, 1}});
}

TEST_CASE("a 5-cycle yields its five edges as maximal cliques") {
  const Dataset ds = pentagon();
  const NeighborGraph g = build_graph_grid(ds, 1.5);
  // sanity: every vertex has exactly two neighbors
  for (const auto& row : g.adj) CHECK(row.size() == 2);

  const CliqueSet mined = mine_maximal_cliques(g);
  CHECK(mined.size() == 5);
  for (const auto& c : mined) CHECK(c.size() == 2);
  CHECK(mined == brute_force_maximal_cliques(g));

  // the literal whole-list pruning finds nothing here; its documented gap
  CliqueMinerOptions faithful;
  faithful.faithful_prune = true;
  CHECK(mine_maximal_cliques(g, faithful).empty());
}

TEST_CASE("faithful pruning still reproduces the worked example") {
  const Dataset ds = test::load_table3();
  const NeighborGraph g = build_graph_grid(ds, 2.0);
  CliqueMinerOptions faithful;
  faithful.faithful_prune = true;
  const std::set<std::set<std::string>> expected{{"A1", "B1", "C1"},
                                                 {"A3", "D1"},
                                                 {"A2", "B2", "B3", "C2"},
                                                 {"C2", "D2"}};
  CHECK(test::named(mine_maximal_cliques(g, faithful), ds) == expected);
}

TEST_CASE("a fully connected set is one clique") {
  Dataset ds;
  ds.dims = 2;
  ds.intern_type("A");
  ds.objects.push_back({"a", 0, {0.0, 0.0, 0.0}});
  ds.objects.push_back({"b", 0, {0.1, 0.0, 0.0}});
  ds.objects.push_back({"c", 0, {0.0, 0.1, 0.0}});
  ds.objects.push_back({"d", 0, {0.1, 0.1, 0.0}});
  const NeighborGraph g = build_graph_grid(ds, 1.0);
  const CliqueSet mined = mine_maximal_cliques(g);
  REQUIRE(mined.size() == 1);
  CHECK(mined[0].size() == 4);
}

TEST_CASE("empty graph mines to nothing") {
  NeighborGraph g;
  g.tau = 1.0;
  CHECK(mine_maximal_cliques(g).empty());
  CHECK(brute_force_maximal_cliques(g).empty());
}

TEST_CASE("oracle refuses graphs above its size limit") {
  const Dataset ds = test::random_points(40, 2, 10.0, 3);
  const NeighborGraph g = build_graph_grid(ds, 1.0);
  CHECK_THROWS_AS(brute_force_maximal_cliques(g, 10), input_error);
}

TEST_CASE("miner and oracle agree on random geometric graphs") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const int dims = seed % 2 ? 3 : 2;
    const std::size_t n = 40 + 13 * seed;
    const double tau = 0.6 + 0.2 * (seed % 4);
    const Dataset ds = test::random_points(n, dims, 5.0, 1000 + seed);
    const NeighborGraph g = build_graph_grid(ds, tau);
    CHECK(mine_maximal_cliques(g) == brute_force_maximal_cliques(g));
  }
}

TEST_CASE("mined cliques are complete, maximal and cover every edge") {
  const Dataset ds = test::random_points(120, 2, 5.0, 77);
  const NeighborGraph g = build_graph_grid(ds, 1.0);
  const CliqueSet mined = mine_maximal_cliques(g);

  for (const auto& c : mined) {
    CHECK(c.size() >= 2);
    CHECK(g.is_complete(c));
    // maximality: no outside object extends the clique
    for (std::size_t o = 0; o < g.size(); ++o) {
      const auto oid = static_cast<ObjectId>(o);
      if (std::binary_search(c.begin(), c.end(), oid)) continue;
      Clique extended = c;
      extended.push_back(oid);
      std::sort(extended.begin(), extended.end());
      CHECK_FALSE(g.is_complete(extended));
    }
  }

  // completeness: every edge lies in some clique
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (ObjectId b : g.adj[a]) {
      if (b < a) continue;
      bool covered = false;
      for (const auto& c : mined) {
        if (std::binary_search(c.begin(), c.end(), static_cast<ObjectId>(a)) &&
            std::binary_search(c.begin(), c.end(), b)) {
          covered = true;
          break;
        }
      }
      CHECK(covered);
    }
  }

  // no clique is a subset of another
  for (std::size_t i = 0; i < mined.size(); ++i) {
    for (std::size_t j = 0; j < mined.size(); ++j) {
      if (i == j) continue;
      CHECK_FALSE(std::includes(mined[j].begin(), mined[j].end(),
                                mined[i].begin(), mined[i].end()));
    }
  }
}

TEST_CASE("results are identical across worker counts") {
  const Dataset ds = test::random_points(300, 2, 8.0, 5);
  const NeighborGraph g = build_graph_grid(ds, 0.8);
  CliqueMinerOptions one, eight;
  one.threads = 1;
  eight.threads = 8;
  CHECK(mine_maximal_cliques(g, one) == mine_maximal_cliques(g, eight));
}

TEST_CASE("cardinality_histogram sums to the clique count") {
  CHECK(cardinality_histogram({}).empty());
  const Dataset ds = test::random_points(200, 2, 6.0, 21);
  const NeighborGraph g = build_graph_grid(ds, 0.7);
  const CliqueSet mined = mine_maximal_cliques(g);
  std::size_t total = 0;
  for (const auto& [card, count] : cardinality_histogram(mined)) {
    total += count;
    CHECK(card >= 2);
  }
  CHECK(total == mined.size());
}
