#ifndef GCG_CORE_GRAPH_HPP
#define GCG_CORE_GRAPH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "core/types.hpp"

namespace gcg {

// L2 distance over the first `dims` components.
double euclidean_distance(const SpatialObject& a, const SpatialObject& b,
                          int dims);

// Number of edges of a complete graph on `cardinality` vertices,
// n * (n - 1) / 2. Requires cardinality >= 2.
std::uint64_t edge_count(std::uint64_t cardinality);

// tau-neighborhood graph: an edge between a and b iff d(a,b) <= tau
// (closed threshold, exact IEEE comparison). Immutable after build.
struct NeighborGraph {
  double tau = 0.0;
  std::vector<std::vector<ObjectId>> adj;  // sorted ascending, no self edges

  std::size_t size() const { return adj.size(); }
  bool adjacent(ObjectId a, ObjectId b) const;

  // True iff every distinct pair in `members` is adjacent. Singletons and
  // the empty set are trivially complete.
  bool is_complete(std::span<const ObjectId> members) const;
};

// All-pairs construction. O(n^2); used by oracles and small inputs.
NeighborGraph build_graph_all_pairs(const Dataset& ds, double tau);

}  // namespace gcg

#endif
