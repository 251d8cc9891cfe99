#include "hms/sim/game.hpp"

#include <algorithm>

#include "hms/util/binio.hpp"

namespace hms::sim {

std::string target_class_name(TargetClass c) {
    switch (c) {
        case TargetClass::Hero: return "hero";
        case TargetClass::LaneCreep: return "lane_creep";
        case TargetClass::NeutralCreep: return "neutral_creep";
        case TargetClass::Turret: return "turret";
        case TargetClass::Base: return "base";
        case TargetClass::Dragon: return "dragon";
        case TargetClass::Baron: return "baron";
    }
    return "?";
}

int hero_max_hp_at(const BalanceConfig& bal, int level) {
    return bal.hero_base_hp + bal.hero_hp_per_level * (level - 1);
}
int hero_ad_at(const BalanceConfig& bal, int level) {
    return bal.hero_base_ad + bal.hero_ad_per_level * (level - 1);
}

Vec2 hero_spawn_pos(const MapSpec& map, int hero) {
    int team = team_of_hero(hero);
    int slot = slot_of_hero(hero);
    int off = (slot - 2) * 110;
    Vec2 base = map.bases[team];
    return map.clamp({base.x + (team == 0 ? off : -off), base.y});
}

GameState new_game(const MapSpec& map, uint64_t seed) {
    map.validate();
    GameState s;
    s.frame = 0;
    s.rng = Rng(mix_seed(seed, 0x67616d65));
    for (int h = 0; h < kHeroCount; ++h) {
        Hero& hero = s.heroes[h];
        hero.level = 1;
        hero.xp = 0;
        hero.gold = map.bal.starting_gold;
        hero.max_hp = hero_max_hp_at(map.bal, 1);
        hero.hp = hero.max_hp;
        hero.attack_damage = hero_ad_at(map.bal, 1);
        hero.attack_range = map.bal.hero_range;
        hero.move_speed = map.bal.hero_speed;
        hero.pos = hero_spawn_pos(map, h);
    }
    for (int t = 0; t < 2; ++t) {
        for (int l = 0; l < kLaneCount; ++l) {
            for (int sl = 0; sl < kTurretSlotsPerLane; ++sl) {
                Structure& st = s.structures[turret_index(t, l, sl)];
                st.kind = 0;
                st.team = static_cast<uint8_t>(t);
                st.lane = static_cast<uint8_t>(l);
                st.slot = static_cast<uint8_t>(sl);
                st.pos = map.turrets[t][l][sl];
                st.max_hp = map.bal.turret_hp;
                st.hp = st.max_hp;
                st.alive = true;
            }
        }
        Structure& b = s.structures[base_index(t)];
        b.kind = 1;
        b.team = static_cast<uint8_t>(t);
        b.pos = map.bases[t];
        b.max_hp = map.bal.base_hp;
        b.hp = b.max_hp;
        b.alive = true;
    }
    for (size_t c = 0; c < map.camps.size(); ++c) {
        for (int m = 0; m < map.camps[c].creep_count; ++m) {
            Neutral n;
            n.kind = NeutralKind::Camp;
            n.camp_id = static_cast<uint8_t>(c);
            n.member = static_cast<uint8_t>(m);
            n.home = map.clamp({map.camps[c].pos.x + m * 160, map.camps[c].pos.y});
            n.pos = n.home;
            n.max_hp = map.bal.camp_creep_hp;
            n.hp = n.max_hp;
            n.alive = true;
            s.neutrals.push_back(n);
        }
    }
    Neutral dragon;
    dragon.kind = NeutralKind::Dragon;
    dragon.home = dragon.pos = map.dragon_pos;
    dragon.max_hp = map.bal.dragon_hp;
    dragon.hp = 0;
    dragon.alive = false;
    dragon.respawn_timer = map.bal.dragon_first_spawn;
    s.neutrals.push_back(dragon);
    Neutral baron;
    baron.kind = NeutralKind::Baron;
    baron.home = baron.pos = map.baron_pos;
    baron.max_hp = map.bal.baron_hp;
    baron.hp = 0;
    baron.alive = false;
    baron.respawn_timer = map.bal.baron_first_spawn;
    s.neutrals.push_back(baron);
    for (auto& row : s.last_hero_damage) row.fill(-1);
    return s;
}

namespace {

// Uniform handle for anything that can deal or take damage this frame.
struct UnitRef {
    TargetClass cls = TargetClass::Hero;
    int index = 0;  // hero id / structure index / creeps index / neutrals index
};

uint32_t neutral_uid(const Neutral& n) {
    if (n.kind == NeutralKind::Camp) return static_cast<uint32_t>(n.camp_id) * 8u + n.member;
    return 0;
}

TargetClass neutral_class(const Neutral& n) {
    switch (n.kind) {
        case NeutralKind::Camp: return TargetClass::NeutralCreep;
        case NeutralKind::Dragon: return TargetClass::Dragon;
        case NeutralKind::Baron: return TargetClass::Baron;
    }
    return TargetClass::NeutralCreep;
}

struct TargetLookup {
    const MapSpec& map;
    GameState& s;

    // resolves (class, id) to a live unit, or nullopt
    std::optional<UnitRef> resolve(TargetClass cls, uint32_t id) const {
        switch (cls) {
            case TargetClass::Hero:
                if (id < kHeroCount && s.heroes[id].alive()) return UnitRef{cls, static_cast<int>(id)};
                return std::nullopt;
            case TargetClass::Turret:
            case TargetClass::Base: {
                if (id >= kStructureCount) return std::nullopt;
                const Structure& st = s.structures[id];
                bool kind_ok = (cls == TargetClass::Base) == st.is_base();
                if (st.alive && kind_ok) return UnitRef{cls, static_cast<int>(id)};
                return std::nullopt;
            }
            case TargetClass::LaneCreep: {
                auto it = std::lower_bound(s.creeps.begin(), s.creeps.end(), id,
                                           [](const Creep& c, uint32_t v) { return c.id < v; });
                if (it != s.creeps.end() && it->id == id)
                    return UnitRef{cls, static_cast<int>(it - s.creeps.begin())};
                return std::nullopt;
            }
            case TargetClass::NeutralCreep:
            case TargetClass::Dragon:
            case TargetClass::Baron:
                for (size_t i = 0; i < s.neutrals.size(); ++i) {
                    const Neutral& n = s.neutrals[i];
                    if (!n.alive || neutral_class(n) != cls) continue;
                    if (cls != TargetClass::NeutralCreep || neutral_uid(n) == id)
                        return UnitRef{cls, static_cast<int>(i)};
                }
                return std::nullopt;
        }
        return std::nullopt;
    }

    Vec2 pos(UnitRef u) const {
        switch (u.cls) {
            case TargetClass::Hero: return s.heroes[u.index].pos;
            case TargetClass::Turret:
            case TargetClass::Base: return s.structures[u.index].pos;
            case TargetClass::LaneCreep: return s.creeps[u.index].pos;
            default: return s.neutrals[u.index].pos;
        }
    }

    uint32_t uid(UnitRef u) const {
        switch (u.cls) {
            case TargetClass::Hero:
            case TargetClass::Turret:
            case TargetClass::Base: return static_cast<uint32_t>(u.index);
            case TargetClass::LaneCreep: return s.creeps[u.index].id;
            default: return neutral_uid(s.neutrals[u.index]);
        }
    }

    bool still_alive(UnitRef u) const {
        switch (u.cls) {
            case TargetClass::Hero: return s.heroes[u.index].alive();
            case TargetClass::Turret:
            case TargetClass::Base: return s.structures[u.index].alive;
            case TargetClass::LaneCreep: return s.creeps[u.index].hp > 0;
            default: return s.neutrals[u.index].alive;
        }
    }
};

// One pending hit resolved this frame.
struct Hit {
    UnitRef target;
    int damage = 0;
    // attacker identity for kill credit; heroes only get credit
    bool by_hero = false;
    int hero_id = 0;
    int team = -1;  // attacking team, -1 for neutrals
};

Vec2 move_toward(Vec2 from, Vec2 to, int speed) {
    int64_t d = dist(from, to);
    if (d == 0) return from;
    if (d <= speed) return to;
    return {static_cast<int32_t>(from.x + (static_cast<int64_t>(to.x - from.x)) * speed / d),
            static_cast<int32_t>(from.y + (static_cast<int64_t>(to.y - from.y)) * speed / d)};
}

// true if the point is visible to `team` (within sight of an allied unit or structure)
bool point_visible(const MapSpec& map, const GameState& s, int team, Vec2 p) {
    const auto& bal = map.bal;
    for (int h = team * kHeroesPerTeam; h < (team + 1) * kHeroesPerTeam; ++h) {
        if (s.heroes[h].alive() && within(s.heroes[h].pos, p, bal.hero_sight)) return true;
    }
    for (const auto& st : s.structures) {
        if (st.team == team && st.alive && within(st.pos, p, bal.hero_sight)) return true;
    }
    for (const auto& c : s.creeps) {
        if (c.team == team && within(c.pos, p, bal.creep_sight)) return true;
    }
    return false;
}

void award_xp(const BalanceConfig& bal, Hero& h, int xp) {
    h.xp += xp;
    while (h.level < bal.max_level) {
        int need = bal.xp_level_base + bal.xp_level_growth * (h.level - 1);
        if (h.xp < need) break;
        h.xp -= need;
        h.level += 1;
        int new_max = hero_max_hp_at(bal, h.level);
        h.hp += new_max - h.max_hp;  // level-up heals by the gained max hp
        h.max_hp = new_max;
        h.attack_damage = hero_ad_at(bal, h.level);
    }
}

void award_gold(GameState& s, int hero, int gold) {
    s.heroes[hero].gold += gold;
    s.gold_earned[team_of_hero(hero)] += gold;
}

void award_team(const MapSpec& map, GameState& s, int team, int gold, int xp) {
    for (int h = team * kHeroesPerTeam; h < (team + 1) * kHeroesPerTeam; ++h) {
        award_gold(s, h, gold);
        award_xp(map.bal, s.heroes[h], xp);
    }
}

}  // namespace

StepResult step(const MapSpec& map, GameState& s, const std::vector<MicroCommand>& commands) {
    if (is_terminal(map, s)) throw UsageError("step: game is already terminal");

    StepResult out;
    const BalanceConfig& bal = map.bal;
    TargetLookup look{map, s};

    // --- hero command validation (pre-move state) ---
    struct PendingAttack {
        int hero;
        UnitRef target;
        TargetClass cls;
        uint32_t uid;
    };
    std::vector<PendingAttack> hero_attacks;
    std::array<std::optional<Vec2>, kHeroCount> hero_moves;
    std::array<bool, kHeroCount> seen{};

    for (const MicroCommand& cmd : commands) {
        if (cmd.hero >= kHeroCount) {
            out.warnings.push_back({s.frame, cmd.hero, "unknown hero id"});
            continue;
        }
        if (seen[cmd.hero]) {
            out.warnings.push_back({s.frame, cmd.hero, "duplicate command ignored"});
            continue;
        }
        seen[cmd.hero] = true;
        Hero& hero = s.heroes[cmd.hero];
        if (!hero.alive()) {
            if (cmd.action != MicroCommand::Action::Idle)
                out.warnings.push_back({s.frame, cmd.hero, "command for dead hero ignored"});
            continue;
        }
        switch (cmd.action) {
            case MicroCommand::Action::Idle: break;
            case MicroCommand::Action::Move:
                hero_moves[cmd.hero] = map.clamp(cmd.move_target);
                break;
            case MicroCommand::Action::Attack: {
                auto target = look.resolve(cmd.target_class, cmd.target_id);
                if (!target) {
                    out.warnings.push_back(
                        {s.frame, cmd.hero,
                         "attack target " + target_class_name(cmd.target_class) + "#" +
                             std::to_string(cmd.target_id) + " is dead or unknown"});
                    break;
                }
                int team = team_of_hero(cmd.hero);
                if (cmd.target_class == TargetClass::Hero && team_of_hero(cmd.target_id) == team) {
                    out.warnings.push_back({s.frame, cmd.hero, "cannot attack ally"});
                    break;
                }
                if ((cmd.target_class == TargetClass::Turret ||
                     cmd.target_class == TargetClass::Base) &&
                    s.structures[cmd.target_id].team == team) {
                    out.warnings.push_back({s.frame, cmd.hero, "cannot attack own structure"});
                    break;
                }
                if (cmd.target_class == TargetClass::LaneCreep &&
                    s.creeps[target->index].team == team) {
                    out.warnings.push_back({s.frame, cmd.hero, "cannot attack own creep"});
                    break;
                }
                if (!point_visible(map, s, team, look.pos(*target))) {
                    out.warnings.push_back({s.frame, cmd.hero, "attack target not visible"});
                    break;
                }
                hero_attacks.push_back({cmd.hero, *target, cmd.target_class, cmd.target_id});
                break;
            }
        }
    }

    // --- auto-unit intents from pre-move positions ---
    // creeps: attack nearest enemy in range, else walk the lane
    struct CreepIntent {
        bool attack = false;
        UnitRef target;
    };
    std::vector<CreepIntent> creep_intents(s.creeps.size());
    auto nearest_enemy_of = [&](int team, Vec2 from, int64_t range,
                                bool structures_too) -> std::optional<UnitRef> {
        std::optional<UnitRef> best;
        int64_t best_d = range * range + 1;
        for (int h = 0; h < kHeroCount; ++h) {
            if (team_of_hero(h) == team || !s.heroes[h].alive()) continue;
            int64_t d = dist2(from, s.heroes[h].pos);
            if (d < best_d) best_d = d, best = UnitRef{TargetClass::Hero, h};
        }
        for (size_t i = 0; i < s.creeps.size(); ++i) {
            if (s.creeps[i].team == team) continue;
            int64_t d = dist2(from, s.creeps[i].pos);
            if (d < best_d) best_d = d, best = UnitRef{TargetClass::LaneCreep, static_cast<int>(i)};
        }
        if (structures_too) {
            for (int i = 0; i < kStructureCount; ++i) {
                const Structure& st = s.structures[i];
                if (st.team == team || !st.alive) continue;
                int64_t d = dist2(from, st.pos);
                if (d < best_d)
                    best_d = d,
                    best = UnitRef{st.is_base() ? TargetClass::Base : TargetClass::Turret, i};
            }
        }
        return best;
    };
    for (size_t i = 0; i < s.creeps.size(); ++i) {
        if (s.creeps[i].attack_ready > 0) continue;
        auto t = nearest_enemy_of(s.creeps[i].team, s.creeps[i].pos, bal.creep_range, true);
        if (t) creep_intents[i] = {true, *t};
    }

    // turrets and bases: nearest enemy hero or creep in range
    std::array<std::optional<UnitRef>, kStructureCount> structure_targets;
    for (int i = 0; i < kStructureCount; ++i) {
        const Structure& st = s.structures[i];
        if (!st.alive || st.attack_ready > 0) continue;
        int64_t range = st.is_base() ? bal.base_range : bal.turret_range;
        structure_targets[i] = nearest_enemy_of(st.team, st.pos, range, false);
    }

    // neutrals: retaliate against the nearest hero in aggro range
    std::vector<std::optional<UnitRef>> neutral_targets(s.neutrals.size());
    for (size_t i = 0; i < s.neutrals.size(); ++i) {
        const Neutral& n = s.neutrals[i];
        if (!n.alive || n.attack_ready > 0) continue;
        int64_t range = n.kind == NeutralKind::Camp
                            ? bal.camp_creep_range
                            : (n.kind == NeutralKind::Dragon ? bal.dragon_range : bal.baron_range);
        std::optional<UnitRef> best;
        int64_t best_d = range * range + 1;
        for (int h = 0; h < kHeroCount; ++h) {
            if (!s.heroes[h].alive()) continue;
            int64_t d = dist2(n.pos, s.heroes[h].pos);
            if (d < best_d) best_d = d, best = UnitRef{TargetClass::Hero, h};
        }
        neutral_targets[i] = best;
    }

    // --- movement (simultaneous) ---
    for (int h = 0; h < kHeroCount; ++h) {
        if (hero_moves[h] && s.heroes[h].alive())
            s.heroes[h].pos = map.clamp(move_toward(s.heroes[h].pos, *hero_moves[h], s.heroes[h].move_speed));
    }
    for (size_t i = 0; i < s.creeps.size(); ++i) {
        if (creep_intents[i].attack) continue;
        Creep& c = s.creeps[i];
        const auto& wps = map.lanes[c.team][c.lane];
        if (c.waypoint >= wps.size()) continue;
        c.pos = map.clamp(move_toward(c.pos, wps[c.waypoint], bal.creep_speed));
        if (c.pos == wps[c.waypoint] && c.waypoint + 1 < wps.size()) c.waypoint += 1;
    }

    // --- attacks (simultaneous, post-move ranges) ---
    std::vector<Hit> hits;
    for (const PendingAttack& pa : hero_attacks) {
        Hero& hero = s.heroes[pa.hero];
        if (hero.attack_ready > 0) continue;  // still winding up: treated as hold
        if (!look.still_alive(pa.target)) continue;
        Vec2 tp = look.pos(pa.target);
        if (!within(hero.pos, tp, hero.attack_range)) {
            out.warnings.push_back({s.frame, static_cast<uint8_t>(pa.hero),
                                    "attack target out of range"});
            continue;
        }
        hero.attack_ready = bal.hero_attack_period;
        hits.push_back({pa.target, hero.attack_damage, true, pa.hero, team_of_hero(pa.hero)});
        out.events.push_back({s.frame, static_cast<uint8_t>(pa.hero), pa.cls, pa.uid,
                              static_cast<uint8_t>(map.region_of(tp))});
    }
    for (size_t i = 0; i < s.creeps.size(); ++i) {
        if (!creep_intents[i].attack) continue;
        Creep& c = s.creeps[i];
        if (!look.still_alive(creep_intents[i].target)) continue;
        if (!within(c.pos, look.pos(creep_intents[i].target), bal.creep_range)) continue;
        c.attack_ready = bal.creep_attack_period;
        hits.push_back({creep_intents[i].target, bal.creep_ad, false, 0, c.team});
    }
    for (int i = 0; i < kStructureCount; ++i) {
        if (!structure_targets[i]) continue;
        Structure& st = s.structures[i];
        if (!look.still_alive(*structure_targets[i])) continue;
        int64_t range = st.is_base() ? bal.base_range : bal.turret_range;
        if (!within(st.pos, look.pos(*structure_targets[i]), range)) continue;
        st.attack_ready = st.is_base() ? bal.base_attack_period : bal.turret_attack_period;
        hits.push_back({*structure_targets[i], st.is_base() ? bal.base_ad : bal.turret_ad, false, 0,
                        st.team});
    }
    for (size_t i = 0; i < s.neutrals.size(); ++i) {
        if (!neutral_targets[i]) continue;
        Neutral& n = s.neutrals[i];
        if (!look.still_alive(*neutral_targets[i])) continue;
        int64_t range = n.kind == NeutralKind::Camp
                            ? bal.camp_creep_range
                            : (n.kind == NeutralKind::Dragon ? bal.dragon_range : bal.baron_range);
        if (!within(n.pos, look.pos(*neutral_targets[i]), range)) continue;
        int ad = n.kind == NeutralKind::Camp ? bal.camp_creep_ad
                                             : (n.kind == NeutralKind::Dragon ? bal.dragon_ad : bal.baron_ad);
        n.attack_ready = bal.creep_attack_period;
        hits.push_back({*neutral_targets[i], ad, false, 0, -1});
    }

    // --- damage resolution ---
    // accumulate per-target so simultaneous hits are order-free, then resolve
    // deaths once; kill credit among this frame's hero attackers alternates
    // low/high id by frame parity so neither team is structurally favored
    auto target_key = [](UnitRef u) { return (static_cast<uint64_t>(u.cls) << 32) | static_cast<uint32_t>(u.index); };
    std::vector<std::pair<uint64_t, size_t>> order(hits.size());
    for (size_t i = 0; i < hits.size(); ++i) order[i] = {target_key(hits[i].target), i};
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    size_t gi = 0;
    while (gi < order.size()) {
        size_t gj = gi;
        while (gj < order.size() && order[gj].first == order[gi].first) ++gj;
        UnitRef target = hits[order[gi].second].target;
        int total = 0;
        for (size_t k = gi; k < gj; ++k) total += hits[order[k].second].damage;

        // pick credited killer among hero attackers (frame-parity tie break)
        int killer_hero = -1;
        int killer_team = -1;
        for (size_t k = gi; k < gj; ++k) {
            const Hit& h = hits[order[k].second];
            if (h.team >= 0 && killer_team < 0) killer_team = h.team;
            if (!h.by_hero) continue;
            if (killer_hero < 0 ||
                (s.frame % 2 == 0 ? h.hero_id < killer_hero : h.hero_id > killer_hero))
                killer_hero = h.hero_id;
        }
        if (killer_hero >= 0) killer_team = team_of_hero(killer_hero);

        switch (target.cls) {
            case TargetClass::Hero: {
                Hero& victim = s.heroes[target.index];
                victim.hp -= total;
                for (size_t k = gi; k < gj; ++k) {
                    const Hit& h = hits[order[k].second];
                    if (h.by_hero) s.last_hero_damage[target.index][h.hero_id] = s.frame;
                }
                if (victim.hp <= 0 && victim.alive()) {
                    victim.hp = 0;
                    victim.deaths += 1;
                    victim.respawn_timer = bal.respawn_base + bal.respawn_per_level * victim.level;
                    victim.pos = hero_spawn_pos(map, target.index);
                    if (killer_hero >= 0) {
                        Hero& killer = s.heroes[killer_hero];
                        killer.kills += 1;
                        s.hero_kills[killer_team] += 1;
                        award_gold(s, killer_hero,
                                   bal.hero_kill_gold_base + bal.hero_kill_gold_per_level * victim.level);
                        award_xp(bal, killer,
                                 bal.hero_kill_xp_base + bal.hero_kill_xp_per_level * victim.level);
                        for (int a = killer_team * kHeroesPerTeam;
                             a < (killer_team + 1) * kHeroesPerTeam; ++a) {
                            if (a == killer_hero) continue;
                            int last = s.last_hero_damage[target.index][a];
                            if (last >= 0 && s.frame - last <= bal.assist_window) {
                                s.heroes[a].assists += 1;
                                award_gold(s, a, (bal.hero_kill_gold_base +
                                                  bal.hero_kill_gold_per_level * victim.level) / 2);
                                award_xp(bal, s.heroes[a],
                                         (bal.hero_kill_xp_base +
                                          bal.hero_kill_xp_per_level * victim.level) / 2);
                            }
                        }
                    } else if (killer_team >= 0) {
                        s.hero_kills[killer_team] += 1;
                    }
                    for (auto& row : s.last_hero_damage[target.index]) row = -1;
                }
                break;
            }
            case TargetClass::Turret:
            case TargetClass::Base: {
                Structure& st = s.structures[target.index];
                st.hp -= total;
                if (st.hp <= 0 && st.alive) {
                    st.hp = 0;
                    st.alive = false;
                    int taker = 1 - st.team;
                    if (!st.is_base()) {
                        s.turrets_destroyed[taker] += 1;
                        award_team(map, s, taker, bal.turret_gold, bal.turret_xp);
                    }
                }
                break;
            }
            case TargetClass::LaneCreep: {
                Creep& c = s.creeps[target.index];
                c.hp -= total;
                if (c.hp <= 0) {
                    c.hp = 0;  // removed below
                    if (killer_hero >= 0) {
                        award_gold(s, killer_hero, bal.creep_gold);
                        award_xp(bal, s.heroes[killer_hero], bal.creep_xp);
                    }
                }
                break;
            }
            default: {
                Neutral& n = s.neutrals[target.index];
                n.hp -= total;
                if (n.hp <= 0 && n.alive) {
                    n.hp = 0;
                    n.alive = false;
                    switch (n.kind) {
                        case NeutralKind::Camp:
                            n.respawn_timer = bal.camp_respawn;
                            if (killer_hero >= 0) {
                                award_gold(s, killer_hero, bal.neutral_gold);
                                award_xp(bal, s.heroes[killer_hero], bal.neutral_xp);
                            }
                            break;
                        case NeutralKind::Dragon:
                            n.respawn_timer = bal.dragon_respawn;
                            if (killer_team >= 0) {
                                s.dragons_taken[killer_team] += 1;
                                award_team(map, s, killer_team, bal.dragon_gold, bal.dragon_xp);
                            }
                            break;
                        case NeutralKind::Baron:
                            n.respawn_timer = bal.baron_respawn;
                            if (killer_team >= 0) {
                                s.barons_taken[killer_team] += 1;
                                award_team(map, s, killer_team, bal.baron_gold, bal.baron_xp);
                            }
                            break;
                    }
                }
                break;
            }
        }
        gi = gj;
    }

    // remove dead creeps, preserving id order
    s.creeps.erase(std::remove_if(s.creeps.begin(), s.creeps.end(),
                                  [](const Creep& c) { return c.hp <= 0; }),
                   s.creeps.end());

    // --- spawns and timers ---
    int next_frame = s.frame + 1;

    if (next_frame >= bal.wave_first_frame &&
        (next_frame - bal.wave_first_frame) % bal.wave_period == 0) {
        for (int t = 0; t < 2; ++t) {
            for (int l = 0; l < kLaneCount; ++l) {
                int lane_count = 0;
                for (const auto& c : s.creeps)
                    if (c.team == t && c.lane == l) ++lane_count;
                int minute = next_frame / map.frames_per_minute;
                int hp = bal.creep_hp + bal.creep_hp_per_minute * minute;
                const auto& wps = map.lanes[t][l];
                for (int i = 0; i < bal.wave_size && lane_count < bal.lane_creep_cap; ++i) {
                    Creep c;
                    c.id = s.next_creep_id++;
                    c.team = static_cast<uint8_t>(t);
                    c.lane = static_cast<uint8_t>(l);
                    c.max_hp = c.hp = hp;
                    c.waypoint = 1;
                    c.pos = map.clamp(move_toward(wps[0], wps[1], 150 * (i + 1)));
                    s.creeps.push_back(c);
                    ++lane_count;
                }
            }
        }
    }

    for (auto& n : s.neutrals) {
        if (!n.alive) {
            if (n.respawn_timer > 0) --n.respawn_timer;
            if (n.respawn_timer == 0) {
                n.alive = true;
                n.hp = n.max_hp;
                n.pos = n.home;
                n.attack_ready = 0;
            }
        }
    }
    for (int h = 0; h < kHeroCount; ++h) {
        Hero& hero = s.heroes[h];
        if (!hero.alive()) {
            --hero.respawn_timer;
            if (hero.respawn_timer == 0) {
                hero.hp = hero.max_hp;
                hero.pos = hero_spawn_pos(map, h);
                hero.attack_ready = 0;
            }
        } else if (hero.attack_ready > 0) {
            --hero.attack_ready;
        }
    }
    for (auto& c : s.creeps)
        if (c.attack_ready > 0) --c.attack_ready;
    for (auto& st : s.structures)
        if (st.attack_ready > 0) --st.attack_ready;
    for (auto& n : s.neutrals)
        if (n.alive && n.attack_ready > 0) --n.attack_ready;

    s.frame = next_frame;
    return out;
}

ObservedState observe(const MapSpec& map, const GameState& s, int team) {
    if (team != 0 && team != 1) throw UsageError("observe: team must be 0 or 1");
    ObservedState o;
    o.frame = s.frame;
    o.team = static_cast<uint8_t>(team);

    for (int h = 0; h < kHeroCount; ++h) {
        const Hero& hero = s.heroes[h];
        bool own = team_of_hero(h) == team;
        if (!own && (!hero.alive() || !point_visible(map, s, team, hero.pos))) continue;
        ObservedHero oh;
        oh.id = static_cast<uint8_t>(h);
        oh.team = static_cast<uint8_t>(team_of_hero(h));
        oh.role = role_of_slot(slot_of_hero(h));
        oh.pos = hero.pos;
        oh.hp = hero.hp;
        oh.max_hp = hero.max_hp;
        oh.level = hero.level;
        oh.gold = hero.gold;
        oh.kills = hero.kills;
        oh.deaths = hero.deaths;
        oh.assists = hero.assists;
        oh.alive = hero.alive();
        oh.respawn_timer = hero.respawn_timer;
        o.heroes.push_back(oh);
    }
    for (int i = 0; i < kStructureCount; ++i) {
        const Structure& st = s.structures[i];
        if (!st.alive) continue;
        if (st.team != team && !point_visible(map, s, team, st.pos)) continue;
        o.structures.push_back({st.kind, st.team, st.lane, st.slot, st.pos, st.hp, st.max_hp});
    }
    for (const Creep& c : s.creeps) {
        if (c.team != team && !point_visible(map, s, team, c.pos)) continue;
        o.creeps.push_back({c.id, c.team, c.lane, c.pos, c.hp, c.max_hp});
    }
    for (const Neutral& n : s.neutrals) {
        if (!n.alive || !point_visible(map, s, team, n.pos)) continue;
        o.neutrals.push_back({n.kind, n.camp_id, n.member, n.pos, n.hp, n.max_hp});
    }
    return o;
}

std::optional<int> winner(const MapSpec& map, const GameState& s) {
    const Structure& b0 = s.structures[base_index(0)];
    const Structure& b1 = s.structures[base_index(1)];
    if (!b0.alive && !b1.alive) return b0.hp >= b1.hp ? 0 : 1;  // unreachable in practice
    if (!b1.alive) return 0;
    if (!b0.alive) return 1;
    if (s.frame >= map.max_frames) {
        if (b0.hp != b1.hp) return b0.hp > b1.hp ? 0 : 1;
        return 0;  // tie-break: lower team index
    }
    return std::nullopt;
}

uint64_t state_hash(const GameState& s) {
    ByteWriter w;
    w.i32(s.frame);
    for (const Hero& h : s.heroes) {
        w.i32(h.pos.x);
        w.i32(h.pos.y);
        w.i32(h.hp);
        w.i32(h.max_hp);
        w.i32(h.level);
        w.i32(h.xp);
        w.i32(h.gold);
        w.i32(h.attack_damage);
        w.i32(h.attack_ready);
        w.i32(h.respawn_timer);
        w.i32(h.kills);
        w.i32(h.deaths);
        w.i32(h.assists);
    }
    for (const Structure& st : s.structures) {
        w.u8(st.kind);
        w.u8(st.team);
        w.u8(st.lane);
        w.u8(st.slot);
        w.i32(st.hp);
        w.u8(st.alive ? 1 : 0);
        w.i32(st.attack_ready);
    }
    w.u32(static_cast<uint32_t>(s.creeps.size()));
    for (const Creep& c : s.creeps) {
        w.u32(c.id);
        w.u8(c.team);
        w.u8(c.lane);
        w.i32(c.pos.x);
        w.i32(c.pos.y);
        w.i32(c.hp);
        w.u16(c.waypoint);
        w.i32(c.attack_ready);
    }
    w.u32(static_cast<uint32_t>(s.neutrals.size()));
    for (const Neutral& n : s.neutrals) {
        w.u8(static_cast<uint8_t>(n.kind));
        w.u8(n.camp_id);
        w.u8(n.member);
        w.i32(n.pos.x);
        w.i32(n.pos.y);
        w.i32(n.hp);
        w.u8(n.alive ? 1 : 0);
        w.i32(n.respawn_timer);
        w.i32(n.attack_ready);
    }
    w.u32(s.next_creep_id);
    w.u64(s.rng.state);
    for (const auto& row : s.last_hero_damage)
        for (int v : row) w.i32(v);
    for (int t = 0; t < 2; ++t) {
        w.i64(s.gold_earned[t]);
        w.i32(s.hero_kills[t]);
        w.i32(s.turrets_destroyed[t]);
        w.i32(s.dragons_taken[t]);
        w.i32(s.barons_taken[t]);
    }
    return fnv1a(w.buf.data(), w.buf.size());
}

}  // namespace hms::sim
