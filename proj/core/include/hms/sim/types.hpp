#pragma once

#include <array>
#include <string>
#include <vector>

#include "hms/common.hpp"
#include "hms/sim/map_spec.hpp"

namespace hms::sim {

enum class TargetClass : uint8_t {
    Hero = 0,
    LaneCreep,
    NeutralCreep,
    Turret,
    Base,
    Dragon,
    Baron,
};
std::string target_class_name(TargetClass c);

inline bool is_major_resource(TargetClass c) {
    return c == TargetClass::Turret || c == TargetClass::Base ||
           c == TargetClass::Dragon || c == TargetClass::Baron;
}

struct Hero {
    Vec2 pos;
    int32_t hp = 0;
    int32_t max_hp = 0;
    int level = 1;
    int xp = 0;
    int gold = 0;
    int attack_damage = 0;
    int attack_range = 0;
    int move_speed = 0;
    int attack_ready = 0;    // frames until next attack allowed
    int respawn_timer = 0;   // > 0 exactly when dead
    int kills = 0;
    int deaths = 0;
    int assists = 0;

    bool alive() const { return respawn_timer == 0; }
};

struct Structure {
    uint8_t kind = 0;  // 0 turret, 1 base
    uint8_t team = 0;
    uint8_t lane = 0;  // turrets only
    uint8_t slot = 0;  // turrets only; 0 = outer
    Vec2 pos;
    int32_t hp = 0;
    int32_t max_hp = 0;
    bool alive = true;
    int attack_ready = 0;

    bool is_base() const { return kind == 1; }
};

// structure index layout: team*10 + lane*3 + slot for turrets, team*10 + 9 for bases
inline int turret_index(int team, int lane, int slot) { return team * 10 + lane * 3 + slot; }
inline int base_index(int team) { return team * 10 + 9; }
inline constexpr int kStructureCount = 20;

struct Creep {
    uint32_t id = 0;
    uint8_t team = 0;
    uint8_t lane = 0;
    Vec2 pos;
    int32_t hp = 0;
    int32_t max_hp = 0;
    uint16_t waypoint = 0;  // next lane waypoint to walk toward
    int attack_ready = 0;
};

enum class NeutralKind : uint8_t { Camp = 0, Dragon = 1, Baron = 2 };

struct Neutral {
    NeutralKind kind = NeutralKind::Camp;
    uint8_t camp_id = 0;  // camps only
    uint8_t member = 0;   // index within camp
    Vec2 home;
    Vec2 pos;
    int32_t hp = 0;
    int32_t max_hp = 0;
    bool alive = false;
    int respawn_timer = 0;
    int attack_ready = 0;
};

struct AttackEvent {
    int frame = 0;
    uint8_t actor = 0;  // hero id; only hero attacks produce events
    TargetClass target_class = TargetClass::Hero;
    uint32_t target_id = 0;
    uint8_t region = 0;  // region_of(target position at event frame)

    friend bool operator==(const AttackEvent&, const AttackEvent&) = default;
};

struct MicroCommand {
    enum class Action : uint8_t { Idle = 0, Move, Attack };
    uint8_t hero = 0;
    Action action = Action::Idle;
    Vec2 move_target;  // Move: walk toward this point, clamped to map bounds
    TargetClass target_class = TargetClass::Hero;
    uint32_t target_id = 0;
};

struct GameState {
    int frame = 0;
    std::array<Hero, kHeroCount> heroes;
    std::array<Structure, kStructureCount> structures;
    std::vector<Creep> creeps;  // kept sorted by id
    std::vector<Neutral> neutrals;
    uint32_t next_creep_id = 0;
    Rng rng;

    // last frame each hero damaged each enemy hero, for assist credit; -1 = never
    std::array<std::array<int, kHeroCount>, kHeroCount> last_hero_damage;

    // cumulative per-team counters for match stats
    std::array<int64_t, 2> gold_earned{};
    std::array<int, 2> hero_kills{};
    std::array<int, 2> turrets_destroyed{};
    std::array<int, 2> dragons_taken{};
    std::array<int, 2> barons_taken{};
};

struct StepWarning {
    int frame = 0;
    uint8_t hero = 0;
    std::string what;
};

struct StepResult {
    std::vector<AttackEvent> events;
    std::vector<StepWarning> warnings;
};

struct ObservedHero {
    uint8_t id = 0;
    uint8_t team = 0;
    Role role = Role::Top;
    Vec2 pos;
    int32_t hp = 0;
    int32_t max_hp = 0;
    int level = 1;
    int gold = 0;
    int kills = 0;
    int deaths = 0;
    int assists = 0;
    bool alive = true;
    int respawn_timer = 0;

    friend bool operator==(const ObservedHero&, const ObservedHero&) = default;
};

struct ObservedStructure {
    uint8_t kind = 0;
    uint8_t team = 0;
    uint8_t lane = 0;
    uint8_t slot = 0;
    Vec2 pos;
    int32_t hp = 0;
    int32_t max_hp = 0;

    bool is_base() const { return kind == 1; }
    friend bool operator==(const ObservedStructure&, const ObservedStructure&) = default;
};

struct ObservedCreep {
    uint32_t id = 0;
    uint8_t team = 0;
    uint8_t lane = 0;
    Vec2 pos;
    int32_t hp = 0;
    int32_t max_hp = 0;

    friend bool operator==(const ObservedCreep&, const ObservedCreep&) = default;
};

struct ObservedNeutral {
    NeutralKind kind = NeutralKind::Camp;
    uint8_t camp_id = 0;
    uint8_t member = 0;
    Vec2 pos;
    int32_t hp = 0;
    int32_t max_hp = 0;

    friend bool operator==(const ObservedNeutral&, const ObservedNeutral&) = default;
};

// Team view of the world under fog of war. Contains every ally (dead allies
// included, parked at base) and only those alive enemy/neutral units within
// sight of an allied unit or structure. Hidden units are absent, not zeroed.
struct ObservedState {
    int frame = 0;
    uint8_t team = 0;
    std::vector<ObservedHero> heroes;
    std::vector<ObservedStructure> structures;
    std::vector<ObservedCreep> creeps;
    std::vector<ObservedNeutral> neutrals;

    const ObservedHero* find_hero(int id) const {
        for (const auto& h : heroes)
            if (h.id == id) return &h;
        return nullptr;
    }
    friend bool operator==(const ObservedState&, const ObservedState&) = default;
};

}  // namespace hms::sim
