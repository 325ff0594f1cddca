#include "core/graph.hpp"

#include <algorithm>
#include <cmath>

namespace gcg {

double euclidean_distance(const SpatialObject& a, const SpatialObject& b,
                          int dims) {
  double sum = 0.0;
  for (int d = 0; d < dims; ++d) {
    const double diff = a.coords[d] - b.coords[d];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

std::uint64_t edge_count(std::uint64_t cardinality) {
  if (cardinality < 2) {
    throw input_error("edge_count requires cardinality >= 2");
  }
  return cardinality * (cardinality - 1) / 2;
}

bool NeighborGraph::adjacent(ObjectId a, ObjectId b) const {
  if (a == b) return false;
  const auto& na = adj[a];
  return std::binary_search(na.begin(), na.end(), b);
}

bool NeighborGraph::is_complete(std::span<const ObjectId> members) const {
  for (ObjectId m : members) {
    if (m >= adj.size()) throw input_error("is_complete: unknown object id");
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!adjacent(members[i], members[j])) return false;
    }
  }
  return true;
}

NeighborGraph build_graph_all_pairs(const Dataset& ds, double tau) {
  if (tau <= 0.0) throw input_error("tau must be positive");
  NeighborGraph g;
  g.tau = tau;
  const std::size_t n = ds.objects.size();
  g.adj.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (euclidean_distance(ds.objects[i], ds.objects[j], ds.dims) <= tau) {
        g.adj[i].push_back(static_cast<ObjectId>(j));
        g.adj[j].push_back(static_cast<ObjectId>(i));
      }
    }
  }
  for (auto& row : g.adj) std::sort(row.begin(), row.end());
  return g;
}

}  // namespace gcg
