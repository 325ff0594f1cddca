#ifndef GCG_CORE_CLIQUES_HPP
#define GCG_CORE_CLIQUES_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "core/graph.hpp"
#include "core/types.hpp"

namespace gcg {

// A point's closed neighborhood: the center plus every object within tau.
struct NeighborhoodList {
  ObjectId center = 0;
  std::vector<ObjectId> members;  // sorted ascending, includes center
};

// Canonical clique collection: each clique sorted ascending, cliques sorted
// lexicographically, no duplicates, no clique a subset of another.
using Clique = std::vector<ObjectId>;
using CliqueSet = std::vector<Clique>;

struct CliqueMinerOptions {
  int threads = 1;
  // Reproduce the literal per-list pruning (drop a whole neighborhood list
  // when any pair violates tau) instead of per-list clique enumeration.
  // Misses cliques on graphs where no closed neighborhood is itself a
  // clique; kept for comparison runs only.
  bool faithful_prune = false;
};

// One list per object with at least one neighbor, ordered by center id.
std::vector<NeighborhoodList> build_neighborhoods(const NeighborGraph& g);

// Exact maximal cliques of size >= 2, via per-neighborhood enumeration of
// maximal cliques containing the center, followed by canonical dedupe and a
// size-descending subset filter. Output is independent of thread count.
CliqueSet mine_maximal_cliques(const NeighborGraph& g,
                               const CliqueMinerOptions& opts = {});

// Independent oracle: pivoting recursive enumeration over the whole graph,
// no grid or neighborhood splitting. Refuses graphs above `limit` vertices.
CliqueSet brute_force_maximal_cliques(const NeighborGraph& g,
                                      std::size_t limit = 500);

// Counts per clique cardinality.
std::map<std::size_t, std::size_t> cardinality_histogram(const CliqueSet& cs);

// Sorts members, orders cliques lexicographically and drops duplicates.
void canonicalize(CliqueSet& cs);

}  // namespace gcg

#endif
