#pragma once

#include <optional>
#include <vector>

#include "hms/sim/map_spec.hpp"
#include "hms/sim/types.hpp"

namespace hms::sim {

// Fresh game at frame 0: heroes at team spawns with level 1 and starting
// gold, all structures alive at full hp, jungle camps up, dragon/baron on
// their first-spawn timers. Throws ConfigError if the map is invalid.
GameState new_game(const MapSpec& map, uint64_t seed);

// Advances the state by one frame. Commands are one per living hero; invalid
// commands (dead hero, dead/invisible/out-of-range target) are ignored with a
// warning, never a crash. Throws UsageError when called on a terminal state.
// All game math is integer, so identical (state, commands) always produce the
// identical successor on every platform.
StepResult step(const MapSpec& map, GameState& state, const std::vector<MicroCommand>& commands);

// Team view under fog of war. See ObservedState.
ObservedState observe(const MapSpec& map, const GameState& state, int team);

// nullopt while the game is live; at a destroyed base or the frame cap,
// the winning team (frame-cap ties break by base hp, then lower team index).
std::optional<int> winner(const MapSpec& map, const GameState& state);

inline bool is_terminal(const MapSpec& map, const GameState& state) {
    return winner(map, state).has_value();
}

// Canonical 64-bit digest of the full state; replay-determinism harnesses
// compare these across runs.
uint64_t state_hash(const GameState& state);

// Derived hero stats at a level.
int hero_max_hp_at(const BalanceConfig& bal, int level);
int hero_ad_at(const BalanceConfig& bal, int level);
Vec2 hero_spawn_pos(const MapSpec& map, int hero);

}  // namespace hms::sim
