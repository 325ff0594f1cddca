#ifndef GCG_CORE_INGEST_HPP
#define GCG_CORE_INGEST_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "core/types.hpp"

namespace gcg {

inline constexpr double kSpeedOfLightKms = 299792.458;

struct HubbleParams {
  double c = kSpeedOfLightKms;  // km/s
  double h0 = 71.0;             // km/s/Mpc
};

// One raw catalog row in the SDSS export schema.
struct CatalogRow {
  std::string spec_obj_id;
  double z = 0.0;
  double ra = 0.0, dec = 0.0;   // passthrough metadata, unused downstream
  double cx = 0.0, cy = 0.0, cz = 0.0;
  int obj_type = 0;
  double model_mag_u = 0.0;
  double model_mag_r = 0.0;
  double z_conf = 0.0;
  int z_warning = 0;
};

// Which way the zConf quality cut reads. The source text literally says
// "zConf < 0.95"; the conventional confidence cut would be >= 0.95. Both
// are selectable.
enum class ZConfDirection { LessThan, GreaterEqual };

struct IngestOptions {
  HubbleParams hubble;
  ZConfDirection zconf_direction = ZConfDirection::LessThan;
  double zconf_threshold = 0.95;
};

// D = c * z / H0, in Mpc. Requires z >= 0.
double comoving_distance(double z, const HubbleParams& params);

// (D*cx, D*cy, D*cz). Requires the unit vector normalized within 1e-6.
std::array<double, 3> to_cartesian(const CatalogRow& row,
                                   const HubbleParams& params);

// Acceptance predicate: galaxy rows (objType = 0) with zWarning = 0 and the
// configured zConf cut.
bool filter_row(const CatalogRow& row, const IngestOptions& opts);

// u - r >= 2.22 -> Early else Late; r <= 17.77 -> Main else LRG.
// One of Main-Late, Main-Early, LRG-Late, LRG-Early.
std::string categorize_galaxy(double model_mag_u, double model_mag_r);

struct IngestResult {
  Dataset dataset;  // always 3D
  std::size_t total_rows = 0;
  std::size_t accepted = 0;
  std::size_t rejected = 0;
};

// Parses a headered catalog CSV (extra columns tolerated), filters,
// transforms, categorizes. Malformed rows raise input_error with the line
// number; rows failing the filter or normalization are counted as rejected.
IngestResult read_catalog(std::istream& in, const IngestOptions& opts);
IngestResult read_catalog_file(const std::string& path,
                               const IngestOptions& opts);

}  // namespace gcg

#endif
