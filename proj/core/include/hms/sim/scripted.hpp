#pragma once

#include "hms/common.hpp"
#include "hms/sim/map_spec.hpp"
#include "hms/sim/types.hpp"

namespace hms::sim {

// Heuristic macro policy used to generate replays. Early game follows one of
// a few team-wide opening plans (derived from the rng state without advancing
// it, so all five heroes of a team agree); afterwards it samples among
// contested objectives, lane pushes, defense and farming with seeded weights.
// Pure function of (obs, rng state): the same inputs give the same region.
int scripted_macro_policy(const MapSpec& map, const ObservedState& obs, int hero, Rng& rng);

// The opening assignment table, exposed for tests: plan in [0,3), returns the
// target region for a hero slot on a team.
int scripted_opening_region(const MapSpec& map, int team, int slot, int plan);

// Plan id in [0,3) chosen for the current rng state (peek, does not advance).
int scripted_plan_of(const Rng& rng);

}  // namespace hms::sim
