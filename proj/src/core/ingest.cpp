#include "core/ingest.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

#include "core/csv.hpp"

namespace gcg {

double comoving_distance(double z, const HubbleParams& params) {
  if (z < 0.0) throw input_error("comoving_distance: negative redshift");
  if (params.h0 <= 0.0 || params.c <= 0.0) {
    throw input_error("comoving_distance: c and h0 must be positive");
  }
  return params.c * z / params.h0;
}

std::array<double, 3> to_cartesian(const CatalogRow& row,
                                   const HubbleParams& params) {
  const double norm =
      std::sqrt(row.cx * row.cx + row.cy * row.cy + row.cz * row.cz);
  if (std::abs(norm - 1.0) > 1e-6) {
    throw input_error("to_cartesian: (cx,cy,cz) is not a unit vector");
  }
  const double d = comoving_distance(row.z, params);
  return {d * row.cx, d * row.cy, d * row.cz};
}

bool filter_row(const CatalogRow& row, const IngestOptions& opts) {
  if (row.obj_type != 0) return false;
  if (row.z_warning != 0) return false;
  switch (opts.zconf_direction) {
    case ZConfDirection::LessThan:
      return row.z_conf < opts.zconf_threshold;
    case ZConfDirection::GreaterEqual:
      return row.z_conf >= opts.zconf_threshold;
  }
  return false;
}

std::string categorize_galaxy(double model_mag_u, double model_mag_r) {
  if (!std::isfinite(model_mag_u) || !std::isfinite(model_mag_r)) {
    throw input_error("categorize_galaxy: non-finite magnitude");
  }
  // the u-r boundary is inclusive; the 1e-9 slack keeps decimal inputs
  // whose real-valued difference is exactly 2.22 (e.g. 20.22 - 18.0) on
  // the Early side despite binary subtraction rounding
  const bool early = model_mag_u - model_mag_r >= 2.22 - 1e-9;
  const bool main = model_mag_r <= 17.77;
  std::string label = main ? "Main" : "LRG";
  label += early ? "-Early" : "-Late";
  return label;
}

IngestResult read_catalog(std::istream& in, const IngestOptions& opts) {
  CsvReader csv(in);
  const auto col = [&](const std::string& name) {
    const auto idx = csv.column(name);
    if (!idx) throw input_error("catalog CSV is missing column '" + name + "'");
    return *idx;
  };
  const std::size_t c_id = col("specObjID"), c_z = col("z"), c_ra = col("ra"),
                    c_dec = col("dec"), c_cx = col("cx"), c_cy = col("cy"),
                    c_cz = col("cz"), c_type = col("objType"),
                    c_u = col("modelMag_u"), c_r = col("modelMag_r"),
                    c_conf = col("zConf"), c_warn = col("zWarning");

  IngestResult result;
  result.dataset.dims = 3;
  std::vector<std::string> fields;
  while (csv.next(fields)) {
    ++result.total_rows;
    CatalogRow row;
    row.spec_obj_id = fields.at(c_id);
    row.z = csv.as_double(fields, c_z);
    row.ra = csv.as_double(fields, c_ra);
    row.dec = csv.as_double(fields, c_dec);
    row.cx = csv.as_double(fields, c_cx);
    row.cy = csv.as_double(fields, c_cy);
    row.cz = csv.as_double(fields, c_cz);
    row.obj_type = static_cast<int>(csv.as_double(fields, c_type));
    row.model_mag_u = csv.as_double(fields, c_u);
    row.model_mag_r = csv.as_double(fields, c_r);
    row.z_conf = csv.as_double(fields, c_conf);
    row.z_warning = static_cast<int>(csv.as_double(fields, c_warn));

    if (!filter_row(row, opts)) {
      ++result.rejected;
      continue;
    }
    SpatialObject obj;
    obj.id = row.spec_obj_id;
    try {
      const auto xyz = to_cartesian(row, opts.hubble);
      obj.coords = xyz;
      obj.type = result.dataset.intern_type(
          categorize_galaxy(row.model_mag_u, row.model_mag_r));
    } catch (const input_error&) {
      ++result.rejected;  // bad unit vector or magnitudes: skip, do not abort
      continue;
    }
    result.dataset.objects.push_back(std::move(obj));
    ++result.accepted;
  }
  result.dataset.check_valid();
  return result;
}

IngestResult read_catalog_file(const std::string& path,
                               const IngestOptions& opts) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open catalog file '" + path + "'");
  return read_catalog(in, opts);
}

}  // namespace gcg
