#include "core/grid.hpp"

#include <algorithm>
#include <cmath>

namespace gcg {

CellKey GridIndex::key_of(const SpatialObject& o) const {
  CellKey k;
  for (int d = 0; d < dims; ++d) {
    k.c[d] = static_cast<std::int64_t>(std::floor(o.coords[d] / tau));
  }
  return k;
}

std::vector<CellKey> GridIndex::neighbor_cells(const CellKey& key) const {
  std::vector<CellKey> out;
  const int dz = dims == 3 ? 1 : 0;
  for (std::int64_t dx = -1; dx <= 1; ++dx) {
    for (std::int64_t dy = -1; dy <= 1; ++dy) {
      for (std::int64_t z = -dz; z <= dz; ++z) {
        CellKey k{{key.c[0] + dx, key.c[1] + dy, key.c[2] + z}};
        if (cells.contains(k)) out.push_back(k);
      }
    }
  }
  return out;
}

std::vector<ObjectId> GridIndex::candidate_neighbors(ObjectId p,
                                                     const Dataset& ds) const {
  if (p >= ds.objects.size()) {
    throw input_error("candidate_neighbors: unknown object id");
  }
  std::vector<ObjectId> out;
  for (const CellKey& k : neighbor_cells(key_of(ds.objects[p]))) {
    for (ObjectId q : cells.at(k)) {
      if (q != p) out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

GridIndex build_index(const Dataset& ds, double tau) {
  if (tau <= 0.0) throw input_error("tau must be positive");
  GridIndex idx;
  idx.tau = tau;
  idx.dims = ds.dims;
  for (std::size_t i = 0; i < ds.objects.size(); ++i) {
    idx.cells[idx.key_of(ds.objects[i])].push_back(static_cast<ObjectId>(i));
  }
  return idx;
}

NeighborGraph build_graph_grid(const Dataset& ds, double tau) {
  const GridIndex idx = build_index(ds, tau);
  NeighborGraph g;
  g.tau = tau;
  g.adj.resize(ds.objects.size());
  for (std::size_t i = 0; i < ds.objects.size(); ++i) {
    const auto p = static_cast<ObjectId>(i);
    for (ObjectId q : idx.candidate_neighbors(p, ds)) {
      if (euclidean_distance(ds.objects[p], ds.objects[q], ds.dims) <= tau) {
        g.adj[p].push_back(q);
      }
    }
    // candidate_neighbors returns sorted ids, so adjacency stays sorted
  }
  return g;
}

}  // namespace gcg
