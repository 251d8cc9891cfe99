#include "hms/sim/map_spec.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace hms::sim {

using nlohmann::json;

std::string role_name(Role r) {
    switch (r) {
        case Role::Top: return "top";
        case Role::Mid: return "mid";
        case Role::Bot: return "bot";
        case Role::Jungle: return "jungle";
        case Role::Support: return "support";
    }
    return "?";
}

Vec2 MapSpec::lane_meet(int team, int lane) const {
    const auto& wps = lanes[team][lane];
    int64_t total = 0;
    for (size_t i = 0; i + 1 < wps.size(); ++i) total += dist(wps[i], wps[i + 1]);
    int64_t walk = total / 2;
    for (size_t i = 0; i + 1 < wps.size(); ++i) {
        int64_t seg = dist(wps[i], wps[i + 1]);
        if (walk <= seg && seg > 0) {
            Vec2 a = wps[i], b = wps[i + 1];
            return {static_cast<int32_t>(a.x + (b.x - a.x) * walk / seg),
                    static_cast<int32_t>(a.y + (b.y - a.y) * walk / seg)};
        }
        walk -= seg;
    }
    return wps.back();
}

std::vector<int> MapSpec::own_camps(int team) const {
    std::vector<int> idx(camps.size());
    for (size_t i = 0; i < camps.size(); ++i) idx[i] = static_cast<int>(i);
    Vec2 base = bases[team];
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        return dist2(camps[a].pos, base) < dist2(camps[b].pos, base);
    });
    return idx;
}

void MapSpec::validate() const {
    if (world_size <= 0 || world_size % kGrid != 0)
        throw ConfigError("mapspec: world_size must be positive and divisible by 12");
    if (max_frames <= 0) throw ConfigError("mapspec: max_frames must be positive");
    if (decision_period <= 0) throw ConfigError("mapspec: decision_period must be positive");
    if (snapshot_stride <= 0) throw ConfigError("mapspec: snapshot_stride must be positive");
    if (frames_per_minute <= 0) throw ConfigError("mapspec: frames_per_minute must be positive");
    for (int t = 0; t < 2; ++t) {
        for (int l = 0; l < kLaneCount; ++l) {
            if (lanes[t][l].size() < 2)
                throw ConfigError("mapspec: lane " + std::to_string(l) + " of team " +
                                  std::to_string(t) + " needs at least 2 waypoints");
            for (Vec2 p : lanes[t][l])
                if (!in_bounds(p)) throw ConfigError("mapspec: lane waypoint out of bounds");
            for (int s = 0; s < kTurretSlotsPerLane; ++s)
                if (!in_bounds(turrets[t][l][s]))
                    throw ConfigError("mapspec: turret position out of bounds");
        }
        if (!in_bounds(bases[t])) throw ConfigError("mapspec: base position out of bounds");
    }
    if (camps.empty()) throw ConfigError("mapspec: at least one jungle camp required");
    for (const auto& c : camps) {
        if (!in_bounds(c.pos)) throw ConfigError("mapspec: camp position out of bounds");
        if (c.creep_count < 1) throw ConfigError("mapspec: camp creep_count must be >= 1");
    }
    if (!in_bounds(dragon_pos) || !in_bounds(baron_pos))
        throw ConfigError("mapspec: dragon/baron position out of bounds");
    if (major_resources.empty())
        throw ConfigError("mapspec: major_resources must be nonempty");
    std::set<std::string> seen(major_resources.begin(), major_resources.end());
    if (seen.size() != major_resources.size())
        throw ConfigError("mapspec: major_resources contains duplicates");
    if (bal.hero_speed <= 0 || bal.creep_speed <= 0)
        throw ConfigError("mapspec: unit speeds must be positive");
    if (bal.hero_base_hp <= 0 || bal.turret_hp <= 0 || bal.base_hp <= 0)
        throw ConfigError("mapspec: unit hp must be positive");
    if (bal.max_level < 1) throw ConfigError("mapspec: max_level must be >= 1");
}

namespace {

json vec_j(Vec2 v) { return json::array({v.x, v.y}); }
Vec2 vec_p(const json& j) { return {j.at(0).get<int32_t>(), j.at(1).get<int32_t>()}; }

json balance_j(const BalanceConfig& b) {
    return json{
        {"starting_gold", b.starting_gold},
        {"hero",
         {{"base_hp", b.hero_base_hp},
          {"hp_per_level", b.hero_hp_per_level},
          {"base_ad", b.hero_base_ad},
          {"ad_per_level", b.hero_ad_per_level},
          {"range", b.hero_range},
          {"speed", b.hero_speed},
          {"attack_period", b.hero_attack_period},
          {"sight", b.hero_sight},
          {"max_level", b.max_level},
          {"xp_level_base", b.xp_level_base},
          {"xp_level_growth", b.xp_level_growth},
          {"respawn_base", b.respawn_base},
          {"respawn_per_level", b.respawn_per_level},
          {"assist_window", b.assist_window}}},
        {"rewards",
         {{"creep_gold", b.creep_gold},
          {"creep_xp", b.creep_xp},
          {"neutral_gold", b.neutral_gold},
          {"neutral_xp", b.neutral_xp},
          {"hero_kill_gold_base", b.hero_kill_gold_base},
          {"hero_kill_gold_per_level", b.hero_kill_gold_per_level},
          {"hero_kill_xp_base", b.hero_kill_xp_base},
          {"hero_kill_xp_per_level", b.hero_kill_xp_per_level},
          {"turret_gold", b.turret_gold},
          {"turret_xp", b.turret_xp},
          {"dragon_gold", b.dragon_gold},
          {"dragon_xp", b.dragon_xp},
          {"baron_gold", b.baron_gold},
          {"baron_xp", b.baron_xp}}},
        {"creeps",
         {{"hp", b.creep_hp},
          {"hp_per_minute", b.creep_hp_per_minute},
          {"ad", b.creep_ad},
          {"range", b.creep_range},
          {"speed", b.creep_speed},
          {"attack_period", b.creep_attack_period},
          {"sight", b.creep_sight},
          {"wave_period", b.wave_period},
          {"wave_size", b.wave_size},
          {"wave_first_frame", b.wave_first_frame},
          {"lane_creep_cap", b.lane_creep_cap}}},
        {"structures",
         {{"turret_hp", b.turret_hp},
          {"turret_ad", b.turret_ad},
          {"turret_range", b.turret_range},
          {"turret_attack_period", b.turret_attack_period},
          {"base_hp", b.base_hp},
          {"base_ad", b.base_ad},
          {"base_range", b.base_range},
          {"base_attack_period", b.base_attack_period}}},
        {"neutrals",
         {{"camp_creep_hp", b.camp_creep_hp},
          {"camp_creep_ad", b.camp_creep_ad},
          {"camp_creep_range", b.camp_creep_range},
          {"camp_aggro_range", b.camp_aggro_range},
          {"camp_leash", b.camp_leash},
          {"camp_respawn", b.camp_respawn},
          {"dragon_hp", b.dragon_hp},
          {"dragon_ad", b.dragon_ad},
          {"dragon_range", b.dragon_range},
          {"dragon_first_spawn", b.dragon_first_spawn},
          {"dragon_respawn", b.dragon_respawn},
          {"baron_hp", b.baron_hp},
          {"baron_ad", b.baron_ad},
          {"baron_range", b.baron_range},
          {"baron_first_spawn", b.baron_first_spawn},
          {"baron_respawn", b.baron_respawn}}},
        {"opening_frames", b.opening_frames},
    };
}

BalanceConfig balance_p(const json& j) {
    BalanceConfig b;
    b.starting_gold = j.at("starting_gold").get<int>();
    const auto& h = j.at("hero");
    b.hero_base_hp = h.at("base_hp").get<int>();
    b.hero_hp_per_level = h.at("hp_per_level").get<int>();
    b.hero_base_ad = h.at("base_ad").get<int>();
    b.hero_ad_per_level = h.at("ad_per_level").get<int>();
    b.hero_range = h.at("range").get<int>();
    b.hero_speed = h.at("speed").get<int>();
    b.hero_attack_period = h.at("attack_period").get<int>();
    b.hero_sight = h.at("sight").get<int>();
    b.max_level = h.at("max_level").get<int>();
    b.xp_level_base = h.at("xp_level_base").get<int>();
    b.xp_level_growth = h.at("xp_level_growth").get<int>();
    b.respawn_base = h.at("respawn_base").get<int>();
    b.respawn_per_level = h.at("respawn_per_level").get<int>();
    b.assist_window = h.at("assist_window").get<int>();
    const auto& r = j.at("rewards");
    b.creep_gold = r.at("creep_gold").get<int>();
    b.creep_xp = r.at("creep_xp").get<int>();
    b.neutral_gold = r.at("neutral_gold").get<int>();
    b.neutral_xp = r.at("neutral_xp").get<int>();
    b.hero_kill_gold_base = r.at("hero_kill_gold_base").get<int>();
    b.hero_kill_gold_per_level = r.at("hero_kill_gold_per_level").get<int>();
    b.hero_kill_xp_base = r.at("hero_kill_xp_base").get<int>();
    b.hero_kill_xp_per_level = r.at("hero_kill_xp_per_level").get<int>();
    b.turret_gold = r.at("turret_gold").get<int>();
    b.turret_xp = r.at("turret_xp").get<int>();
    b.dragon_gold = r.at("dragon_gold").get<int>();
    b.dragon_xp = r.at("dragon_xp").get<int>();
    b.baron_gold = r.at("baron_gold").get<int>();
    b.baron_xp = r.at("baron_xp").get<int>();
    const auto& c = j.at("creeps");
    b.creep_hp = c.at("hp").get<int>();
    b.creep_hp_per_minute = c.at("hp_per_minute").get<int>();
    b.creep_ad = c.at("ad").get<int>();
    b.creep_range = c.at("range").get<int>();
    b.creep_speed = c.at("speed").get<int>();
    b.creep_attack_period = c.at("attack_period").get<int>();
    b.creep_sight = c.at("sight").get<int>();
    b.wave_period = c.at("wave_period").get<int>();
    b.wave_size = c.at("wave_size").get<int>();
    b.wave_first_frame = c.at("wave_first_frame").get<int>();
    b.lane_creep_cap = c.at("lane_creep_cap").get<int>();
    const auto& s = j.at("structures");
    b.turret_hp = s.at("turret_hp").get<int>();
    b.turret_ad = s.at("turret_ad").get<int>();
    b.turret_range = s.at("turret_range").get<int>();
    b.turret_attack_period = s.at("turret_attack_period").get<int>();
    b.base_hp = s.at("base_hp").get<int>();
    b.base_ad = s.at("base_ad").get<int>();
    b.base_range = s.at("base_range").get<int>();
    b.base_attack_period = s.at("base_attack_period").get<int>();
    const auto& n = j.at("neutrals");
    b.camp_creep_hp = n.at("camp_creep_hp").get<int>();
    b.camp_creep_ad = n.at("camp_creep_ad").get<int>();
    b.camp_creep_range = n.at("camp_creep_range").get<int>();
    b.camp_aggro_range = n.at("camp_aggro_range").get<int>();
    b.camp_leash = n.at("camp_leash").get<int>();
    b.camp_respawn = n.at("camp_respawn").get<int>();
    b.dragon_hp = n.at("dragon_hp").get<int>();
    b.dragon_ad = n.at("dragon_ad").get<int>();
    b.dragon_range = n.at("dragon_range").get<int>();
    b.dragon_first_spawn = n.at("dragon_first_spawn").get<int>();
    b.dragon_respawn = n.at("dragon_respawn").get<int>();
    b.baron_hp = n.at("baron_hp").get<int>();
    b.baron_ad = n.at("baron_ad").get<int>();
    b.baron_range = n.at("baron_range").get<int>();
    b.baron_first_spawn = n.at("baron_first_spawn").get<int>();
    b.baron_respawn = n.at("baron_respawn").get<int>();
    b.opening_frames = j.at("opening_frames").get<int>();
    return b;
}

}  // namespace

std::string MapSpec::to_json() const {
    json j;
    j["format_version"] = "mapspec_v1";
    j["world_size"] = world_size;
    j["grid"] = kGrid;
    j["max_frames"] = max_frames;
    j["decision_period"] = decision_period;
    j["snapshot_stride"] = snapshot_stride;
    j["frames_per_minute"] = frames_per_minute;
    for (int t = 0; t < 2; ++t) {
        json lanes_j = json::array();
        for (const auto& lane : lanes[t]) {
            json wps = json::array();
            for (Vec2 p : lane) wps.push_back(vec_j(p));
            lanes_j.push_back(wps);
        }
        j["lanes"].push_back(lanes_j);
        json tj = json::array();
        for (const auto& lane : turrets[t]) {
            json slots = json::array();
            for (Vec2 p : lane) slots.push_back(vec_j(p));
            tj.push_back(slots);
        }
        j["turrets"].push_back(tj);
        j["bases"].push_back(vec_j(bases[t]));
    }
    for (const auto& c : camps)
        j["camps"].push_back(json{{"pos", vec_j(c.pos)}, {"creep_count", c.creep_count}});
    j["dragon"] = vec_j(dragon_pos);
    j["baron"] = vec_j(baron_pos);
    j["major_resources"] = major_resources;
    j["balance"] = balance_j(bal);
    return j.dump(2);
}

MapSpec MapSpec::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DataError(std::string("mapspec: invalid JSON: ") + e.what());
    }
    try {
        if (j.at("format_version").get<std::string>() != "mapspec_v1")
            throw DataError("mapspec: unsupported format_version \"" +
                            j.at("format_version").get<std::string>() + "\"");
        if (j.at("grid").get<int>() != kGrid)
            throw ConfigError("mapspec: region grid must be exactly 12x12");
        MapSpec m;
        m.world_size = j.at("world_size").get<int32_t>();
        m.max_frames = j.at("max_frames").get<int>();
        m.decision_period = j.at("decision_period").get<int>();
        m.snapshot_stride = j.at("snapshot_stride").get<int>();
        m.frames_per_minute = j.at("frames_per_minute").get<int>();
        const auto& lanes_j = j.at("lanes");
        const auto& turrets_j = j.at("turrets");
        if (lanes_j.size() != 2 || turrets_j.size() != 2)
            throw ConfigError("mapspec: lanes/turrets must list both teams");
        for (int t = 0; t < 2; ++t) {
            if (lanes_j[t].size() != kLaneCount)
                throw ConfigError("mapspec: exactly 3 lanes per team required, team " +
                                  std::to_string(t) + " has " +
                                  std::to_string(lanes_j[t].size()));
            for (int l = 0; l < kLaneCount; ++l) {
                for (const auto& wp : lanes_j[t][l]) m.lanes[t][l].push_back(vec_p(wp));
            }
            if (turrets_j[t].size() != kLaneCount)
                throw ConfigError("mapspec: 3 turret lanes per team required");
            for (int l = 0; l < kLaneCount; ++l) {
                if (turrets_j[t][l].size() != kTurretSlotsPerLane)
                    throw ConfigError(
                        "mapspec: turret count per team must be 9 (3 per lane), team " +
                        std::to_string(t) + " lane " + std::to_string(l) + " has " +
                        std::to_string(turrets_j[t][l].size()));
                for (int s = 0; s < kTurretSlotsPerLane; ++s)
                    m.turrets[t][l][s] = vec_p(turrets_j[t][l][s]);
            }
            m.bases[t] = vec_p(j.at("bases").at(t));
        }
        for (const auto& c : j.at("camps"))
            m.camps.push_back({vec_p(c.at("pos")), c.at("creep_count").get<int>()});
        m.dragon_pos = vec_p(j.at("dragon"));
        m.baron_pos = vec_p(j.at("baron"));
        m.major_resources = j.at("major_resources").get<std::vector<std::string>>();
        m.bal = balance_p(j.at("balance"));
        m.validate();
        return m;
    } catch (const json::exception& e) {
        throw DataError(std::string("mapspec: missing or malformed field: ") + e.what());
    }
}

MapSpec MapSpec::default_map() {
    MapSpec m;
    const int32_t W = m.world_size;  // 12000
    auto mir = [W](Vec2 p) { return Vec2{W - p.x, W - p.y}; };

    m.bases[0] = {500, 500};
    m.bases[1] = mir(m.bases[0]);  // (11500, 11500)

    // Lane order: 0 = top (left edge then top edge), 1 = mid (diagonal),
    // 2 = bot (bottom edge then right edge). Team 1 runs the same polylines
    // reversed.
    m.lanes[0][0] = {{500, 500}, {500, 11500}, {11500, 11500}};
    m.lanes[0][1] = {{500, 500}, {11500, 11500}};
    m.lanes[0][2] = {{500, 500}, {11500, 500}, {11500, 11500}};
    for (int l = 0; l < kLaneCount; ++l) {
        m.lanes[1][l] = m.lanes[0][l];
        std::reverse(m.lanes[1][l].begin(), m.lanes[1][l].end());
    }

    // Turret slots at increasing distance from own base along each lane:
    // slot 0 (outer) near the lane midpoint, slot 2 (inner) guarding the base.
    // Team 0 positions; team 1 mirrored.
    m.turrets[0][0] = {{Vec2{500, 9500}, Vec2{500, 6200}, Vec2{500, 3000}}};
    m.turrets[0][1] = {{Vec2{4900, 4900}, Vec2{3300, 3300}, Vec2{1700, 1700}}};
    m.turrets[0][2] = {{Vec2{9500, 500}, Vec2{6200, 500}, Vec2{3000, 500}}};
    for (int l = 0; l < kLaneCount; ++l)
        for (int s = 0; s < kTurretSlotsPerLane; ++s)
            m.turrets[1][l][s] = mir(m.turrets[0][l][s]);

    // Four jungle areas; the set is closed under mirroring so neither team is
    // favored.
    m.camps = {
        {{2500, 5500}, 2},
        {{5500, 2500}, 2},
        {{9500, 6500}, 2},
        {{6500, 9500}, 2},
    };

    // Both objectives sit on the anti-diagonal: equidistant from both bases.
    m.dragon_pos = {3000, 9000};
    m.baron_pos = {9000, 3000};

    for (int l = 0; l < kLaneCount; ++l)
        for (int s = 0; s < kTurretSlotsPerLane; ++s)
            m.major_resources.push_back("turret:" + std::to_string(l) + ":" +
                                        std::to_string(s));
    m.major_resources.push_back("base");
    m.major_resources.push_back("dragon");
    m.major_resources.push_back("baron");

    m.validate();
    return m;
}

}  // namespace hms::sim
