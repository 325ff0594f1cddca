#include "core/types.hpp"

#include <cmath>
#include <unordered_set>

namespace gcg {

bool valid_type_label(const std::string& label) {
  if (label.empty()) return false;
  if (label.front() == '-') return false;
  return label.find('+') == std::string::npos;
}

std::uint32_t Dataset::intern_type(const std::string& label) {
  if (!valid_type_label(label)) {
    throw input_error("invalid type label: '" + label + "'");
  }
  for (std::uint32_t i = 0; i < type_names.size(); ++i) {
    if (type_names[i] == label) return i;
  }
  type_names.push_back(label);
  return static_cast<std::uint32_t>(type_names.size() - 1);
}

void Dataset::check_valid() const {
  if (dims != 2 && dims != 3) {
    throw input_error("dataset dimensionality must be 2 or 3");
  }
  std::unordered_set<std::string> seen;
  for (const auto& o : objects) {
    if (o.type >= type_names.size()) {
      throw input_error("object '" + o.id + "' references unknown type index");
    }
    if (!seen.insert(o.id).second) {
      throw input_error("duplicate object id '" + o.id + "'");
    }
    for (int d = 0; d < dims; ++d) {
      if (!std::isfinite(o.coords[d])) {
        throw input_error("object '" + o.id + "' has non-finite coordinate");
      }
    }
  }
}

}  // namespace gcg
