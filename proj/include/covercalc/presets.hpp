#pragma once

#include "covercalc/cover.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace covercalc::geometry {

/// Names accepted by preset(), in catalog order.
const std::vector<std::string>& preset_names();

/// Arrangement and character assignment of a catalog surface. Throws
/// ErrorKind::UnknownPreset for names outside the catalog.
cover::CoverSpec preset(std::string_view name);

}  // namespace covercalc::geometry
