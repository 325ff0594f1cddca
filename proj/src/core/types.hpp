#ifndef GCG_CORE_TYPES_HPP
#define GCG_CORE_TYPES_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcg {

// Thrown for malformed user input (bad files, bad parameters).
// Maps to exit/status code 1 at the API boundary.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when an internal invariant breaks. Maps to status code 2.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using ObjectId = std::uint32_t;

// A type label is valid if it is non-empty, contains no '+' and does not
// start with '-'. Those characters are reserved by the item encoding
// ("A+", "-A").
bool valid_type_label(const std::string& label);

struct SpatialObject {
  std::string id;            // unique within a dataset
  std::uint32_t type = 0;    // index into Dataset::type_names
  std::array<double, 3> coords{0.0, 0.0, 0.0};
};

// A point dataset with a shared type universe. All objects have the same
// dimensionality (2 or 3); coords beyond `dims` are zero.
struct Dataset {
  int dims = 2;
  std::vector<std::string> type_names;
  std::vector<SpatialObject> objects;

  const std::string& type_of(ObjectId i) const {
    return type_names[objects[i].type];
  }

  // Returns the index of `label`, interning it if new. Validates the label.
  std::uint32_t intern_type(const std::string& label);

  void check_valid() const;  // throws input_error on violation
};

}  // namespace gcg

#endif
