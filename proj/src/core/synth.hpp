#ifndef GCG_CORE_SYNTH_HPP
#define GCG_CORE_SYNTH_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/types.hpp"

namespace gcg {

struct ClusterSpec {
  std::size_t cluster_count = 0;
  double stddev = 1.0;  // Mpc, per axis around each cluster center
};

struct SynthSpec {
  std::size_t n = 0;
  int dims = 2;
  std::array<double, 3> extent{100.0, 100.0, 100.0};  // box side lengths, Mpc
  std::vector<std::pair<std::string, double>> type_weights;  // must sum to 1
  std::uint64_t seed = 0;
  std::optional<ClusterSpec> clustering;
};

// Deterministic for a fixed spec. Uniform placement in the extent box, or
// Gaussian blobs around uniformly drawn cluster centers. Ids are "p0".."pN".
Dataset generate_synthetic(const SynthSpec& spec);

}  // namespace gcg

#endif
