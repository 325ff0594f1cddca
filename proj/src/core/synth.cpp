#include "core/synth.hpp"

#include <cmath>
#include <random>

namespace gcg {

Dataset generate_synthetic(const SynthSpec& spec) {
  if (spec.dims != 2 && spec.dims != 3) {
    throw input_error("generate_synthetic: dims must be 2 or 3");
  }
  if (spec.type_weights.empty()) {
    throw input_error("generate_synthetic: at least one type weight required");
  }
  double total = 0.0;
  for (const auto& [label, w] : spec.type_weights) {
    if (w < 0.0) throw input_error("generate_synthetic: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw input_error("generate_synthetic: type weights must sum to 1");
  }

  Dataset ds;
  ds.dims = spec.dims;
  for (const auto& [label, w] : spec.type_weights) ds.intern_type(label);

  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::vector<std::array<double, 3>> centers;
  if (spec.clustering && spec.clustering->cluster_count > 0) {
    for (std::size_t c = 0; c < spec.clustering->cluster_count; ++c) {
      std::array<double, 3> center{0.0, 0.0, 0.0};
      for (int d = 0; d < spec.dims; ++d) {
        center[d] = unit(rng) * spec.extent[d];
      }
      centers.push_back(center);
    }
  }

  ds.objects.reserve(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    SpatialObject obj;
    obj.id = "p" + std::to_string(i);

    // type from cumulative weights
    const double roll = unit(rng);
    double acc = 0.0;
    std::uint32_t type = 0;
    for (std::uint32_t t = 0; t < spec.type_weights.size(); ++t) {
      acc += spec.type_weights[t].second;
      if (roll < acc || t + 1 == spec.type_weights.size()) {
        type = t;
        break;
      }
    }
    obj.type = type;

    if (centers.empty()) {
      for (int d = 0; d < spec.dims; ++d) {
        obj.coords[d] = unit(rng) * spec.extent[d];
      }
    } else {
      const auto& center = centers[i % centers.size()];
      for (int d = 0; d < spec.dims; ++d) {
        obj.coords[d] = center[d] + gauss(rng) * spec.clustering->stddev;
      }
    }
    ds.objects.push_back(std::move(obj));
  }
  return ds;
}

}  // namespace gcg
