#pragma once

namespace solvspec {

inline constexpr const char* version_string = "0.1.0";

// Identifier of the pinned physical-constants table in units.hpp.  Emitted in
// output provenance headers so plotted artifacts can be traced to the exact
// constant values used.
inline constexpr const char* constants_table_version = "solvspec-constants-1";

} // namespace solvspec
