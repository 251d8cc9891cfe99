#pragma once

#include "hms/sim/map_spec.hpp"
#include "hms/sim/types.hpp"

namespace hms::sim {

// Rule-based micro layer: turns a macro target region into one frame's
// command. Attacks by fixed priority when something is in range (finish lowest
// structures, then heroes, then lowest-hp anything), retreats below 20% hp,
// otherwise walks toward the target region's center. Dead hero -> Idle.
MicroCommand micro_execute(const MapSpec& map, const ObservedState& obs, int hero,
                           int target_region);

}  // namespace hms::sim
