#ifndef GCG_CORE_VERSION_HPP
#define GCG_CORE_VERSION_HPP

namespace gcg {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gcg

#endif
