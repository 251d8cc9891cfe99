#include "hms/sim/scripted.hpp"

#include <algorithm>
#include <vector>

namespace hms::sim {

int scripted_plan_of(const Rng& rng) {
    int roll = static_cast<int>(mix_seed(rng.state, 0x706c616e) % 100);
    if (roll < 45) return 0;
    if (roll < 80) return 1;
    return 2;
}

int scripted_opening_region(const MapSpec& map, int team, int slot, int plan) {
    int top = map.region_of(map.lane_meet(team, 0));
    int mid = map.region_of(map.lane_meet(team, 1));
    int bot = map.region_of(map.lane_meet(team, 2));
    int camp = map.region_of(map.camps[map.own_camps(team)[0]].pos);
    switch (role_of_slot(slot)) {
        case Role::Top: return top;
        case Role::Mid: return mid;
        case Role::Bot: return bot;
        case Role::Jungle: return plan == 0 ? camp : mid;
        case Role::Support: return plan == 1 ? top : bot;
    }
    return mid;
}

int scripted_macro_policy(const MapSpec& map, const ObservedState& obs, int hero, Rng& rng) {
    const int team = team_of_hero(hero);
    const int slot = slot_of_hero(hero);
    const BalanceConfig& bal = map.bal;
    const ObservedHero* self = obs.find_hero(hero);

    if (self && self->alive && self->hp * 4 < self->max_hp)
        return map.region_of(map.bases[team]);

    if (obs.frame < bal.opening_frames)
        return scripted_opening_region(map, team, slot, scripted_plan_of(rng));

    struct Weighted {
        int region;
        int64_t weight;
    };
    std::vector<Weighted> cand;

    // push damaged / visible enemy structures
    for (const auto& st : obs.structures) {
        if (st.team == team) continue;
        int64_t w = st.is_base() ? 140 : 30 + 70 * (st.max_hp - st.hp) / st.max_hp;
        cand.push_back({map.region_of(st.pos), w});
    }

    // contested neutral objectives; ally proximity raises the pull
    auto allies_near = [&](Vec2 p) {
        int n = 0;
        for (const auto& h : obs.heroes)
            if (h.team == team && h.alive && within(h.pos, p, 2500)) ++n;
        return n;
    };
    if (obs.frame >= bal.dragon_first_spawn) {
        bool seen = false;
        for (const auto& n : obs.neutrals) seen |= n.kind == NeutralKind::Dragon;
        int64_t w = 20 + (seen ? 20 : 0) + 30 * allies_near(map.dragon_pos);
        cand.push_back({map.region_of(map.dragon_pos), w});
    }
    if (obs.frame >= bal.baron_first_spawn) {
        bool seen = false;
        for (const auto& n : obs.neutrals) seen |= n.kind == NeutralKind::Baron;
        int64_t w = 20 + (seen ? 20 : 0) + 30 * allies_near(map.baron_pos);
        cand.push_back({map.region_of(map.baron_pos), w});
    }

    // defend own turrets with enemies on top of them
    for (const auto& st : obs.structures) {
        if (st.team != team) continue;
        for (const auto& h : obs.heroes) {
            if (h.team != team && h.alive && within(h.pos, st.pos, 1600)) {
                cand.push_back({map.region_of(st.pos), 90});
                break;
            }
        }
    }

    // farm the front of own lane waves
    for (int lane = 0; lane < kLaneCount; ++lane) {
        const ObservedCreep* front = nullptr;
        int64_t best = -1;
        for (const auto& c : obs.creeps) {
            if (c.team != team || c.lane != lane) continue;
            int64_t d = dist2(c.pos, map.bases[1 - team]);
            if (!front || d < best) front = &c, best = d;
        }
        if (front) {
            int64_t w = 26;
            if ((lane == 0 && role_of_slot(slot) == Role::Top) ||
                (lane == 1 && role_of_slot(slot) == Role::Mid) ||
                (lane == 2 && role_of_slot(slot) == Role::Bot))
                w += 30;
            cand.push_back({map.region_of(front->pos), w});
        }
    }

    // jungle camps on our side of the map
    auto oc = map.own_camps(team);
    size_t own_count = std::max<size_t>(1, oc.size() / 2);
    for (size_t k = 0; k < own_count; ++k) {
        int64_t w = 18 + (role_of_slot(slot) == Role::Jungle ? 28 : 0);
        cand.push_back({map.region_of(map.camps[oc[k]].pos), w});
    }

    // late game: march on the enemy base even before it is visible
    if (obs.frame * 10 >= map.max_frames * 6)
        cand.push_back({map.region_of(map.bases[1 - team]), 45});

    if (cand.empty()) return scripted_opening_region(map, team, slot, 0);

    int64_t total = 0;
    for (const auto& c : cand) total += c.weight;
    int64_t r = static_cast<int64_t>(rng.bounded(static_cast<uint64_t>(total)));
    for (const auto& c : cand) {
        if (r < c.weight) return c.region;
        r -= c.weight;
    }
    return cand.back().region;
}

}  // namespace hms::sim
