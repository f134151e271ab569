#pragma once

#include <string>
#include <vector>

#include "ietflip/classify.hpp"
#include "ietflip/iet.hpp"

namespace ietflip {

// One row per component; witness orbits drawn as ticks on the row of the
// component owning the witness. Output is deterministic for fixed input.
std::string orbit_svg(const Iet& t, const ComponentReport& report,
                      const std::vector<Scalar>& witnesses, int steps);

} // namespace ietflip
