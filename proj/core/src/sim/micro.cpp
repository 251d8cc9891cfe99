#include "hms/sim/micro.hpp"

namespace hms::sim {

namespace {

struct Candidate {
    TargetClass cls;
    uint32_t id;
    int32_t hp;
    bool structure = false;
    bool low_structure = false;
    bool hero = false;
};

}  // namespace

MicroCommand micro_execute(const MapSpec& map, const ObservedState& obs, int hero,
                           int target_region) {
    if (target_region < 0 || target_region >= kRegionCount)
        throw UsageError("micro_execute: target_region out of range");

    MicroCommand cmd;
    cmd.hero = static_cast<uint8_t>(hero);
    const ObservedHero* self = obs.find_hero(hero);
    if (!self || !self->alive) return cmd;  // Idle

    int team = team_of_hero(hero);

    // retreat wins over everything else
    if (self->hp * 5 < self->max_hp) {
        cmd.action = MicroCommand::Action::Move;
        cmd.move_target = map.bases[team];
        return cmd;
    }

    const int range = map.bal.hero_range;
    std::vector<Candidate> in_range;
    for (const auto& h : obs.heroes) {
        if (h.team == team || !h.alive) continue;
        if (within(self->pos, h.pos, range))
            in_range.push_back({TargetClass::Hero, h.id, h.hp, false, false, true});
    }
    for (const auto& st : obs.structures) {
        if (st.team == team) continue;
        if (!within(self->pos, st.pos, range)) continue;
        Candidate c{st.is_base() ? TargetClass::Base : TargetClass::Turret,
                    static_cast<uint32_t>(st.is_base()
                                              ? base_index(st.team)
                                              : turret_index(st.team, st.lane, st.slot)),
                    st.hp, true, st.hp * 4 < st.max_hp, false};
        in_range.push_back(c);
    }
    for (const auto& c : obs.creeps) {
        if (c.team == team) continue;
        if (within(self->pos, c.pos, range))
            in_range.push_back({TargetClass::LaneCreep, c.id, c.hp, false, false, false});
    }
    for (const auto& n : obs.neutrals) {
        if (!within(self->pos, n.pos, range)) continue;
        TargetClass cls = n.kind == NeutralKind::Camp
                              ? TargetClass::NeutralCreep
                              : (n.kind == NeutralKind::Dragon ? TargetClass::Dragon
                                                               : TargetClass::Baron);
        uint32_t id = n.kind == NeutralKind::Camp
                          ? static_cast<uint32_t>(n.camp_id) * 8u + n.member
                          : 0u;
        in_range.push_back({cls, id, n.hp, false, false, false});
    }

    if (!in_range.empty()) {
        auto lowest = [](const std::vector<const Candidate*>& v) {
            const Candidate* best = v[0];
            for (const Candidate* c : v)
                if (c->hp < best->hp ||
                    (c->hp == best->hp &&
                     (c->cls < best->cls || (c->cls == best->cls && c->id < best->id))))
                    best = c;
            return best;
        };
        std::vector<const Candidate*> low_structs, heroes, all;
        for (const auto& c : in_range) {
            all.push_back(&c);
            if (c.low_structure) low_structs.push_back(&c);
            if (c.hero) heroes.push_back(&c);
        }
        const Candidate* pick = !low_structs.empty() ? lowest(low_structs)
                                : !heroes.empty()    ? lowest(heroes)
                                                     : lowest(all);
        cmd.action = MicroCommand::Action::Attack;
        cmd.target_class = pick->cls;
        cmd.target_id = pick->id;
        return cmd;
    }

    Vec2 dest = map.region_center(target_region);
    if (self->pos == dest) return cmd;  // already there, Idle
    cmd.action = MicroCommand::Action::Move;
    cmd.move_target = dest;
    return cmd;
}

}  // namespace hms::sim
