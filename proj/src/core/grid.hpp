#ifndef GCG_CORE_GRID_HPP
#define GCG_CORE_GRID_HPP

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "core/graph.hpp"
#include "core/types.hpp"

namespace gcg {

// Integer cell coordinates: component_i = floor(coord_i / tau).
// Cells are half-open, [k*tau, (k+1)*tau) per axis; floor rounds toward
// -inf so negative coordinates land in the right cell.
struct CellKey {
  std::array<std::int64_t, 3> c{0, 0, 0};

  bool operator==(const CellKey&) const = default;
};

struct CellKeyHash {
  std::size_t operator()(const CellKey& k) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t v : k.c) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Sparse hash of occupied cells with side length exactly tau. Single-writer
// during build; immutable and safe for concurrent readers afterwards.
struct GridIndex {
  double tau = 0.0;
  int dims = 2;
  std::unordered_map<CellKey, std::vector<ObjectId>, CellKeyHash> cells;

  CellKey key_of(const SpatialObject& o) const;

  // The 3^dims keys (including `key` itself) whose components differ by at
  // most 1, filtered to cells actually present in the index.
  std::vector<CellKey> neighbor_cells(const CellKey& key) const;

  // Ids in the 3^dims cells around `p`'s cell, excluding `p`. A superset of
  // the true tau-neighbors of `p`.
  std::vector<ObjectId> candidate_neighbors(ObjectId p,
                                            const Dataset& ds) const;
};

GridIndex build_index(const Dataset& ds, double tau);

// Grid-backed neighborhood graph: same contract as build_graph_all_pairs but
// candidate generation is limited to adjacent cells.
NeighborGraph build_graph_grid(const Dataset& ds, double tau);

}  // namespace gcg

#endif
