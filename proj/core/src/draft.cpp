#include "tbw/draft.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tbw {

namespace {

Unit make_unit(int id, int owner, UnitType type, Vec2 pos, bool general) {
    Unit u;
    u.id = id;
    u.owner = owner;
    u.type = type;
    u.pos = pos;
    u.facing = owner == 0 ? Direction::N : Direction::S;
    u.life = attributes(type).health_points;
    u.is_general = general;
    return u;
}

Vec2 mirror(Vec2 p) { return {kFieldWidth - p.x, kFieldHeight - p.y}; }

std::vector<DraftPick> mirrored(const std::vector<DraftPick>& bottom) {
    std::vector<DraftPick> top;
    top.reserve(bottom.size());
    for (const DraftPick& p : bottom) top.push_back({p.type, mirror(p.pos)});
    return top;
}

// League 3, player 0. A tight 23-unit line (80 px spacing): four knights on
// each flank, spearmen and swordsmen alternating in the center with the
// general — the first pick — on the exact middle slot. The archers guard
// the rear corners behind the knight flanks, where their throwing circles
// cover the flanks and leave the center approach to the line.
std::vector<DraftPick> league3_bottom() {
    const double front_y = 860.0, rear_y = 1040.0;
    auto front_x = [](int i) { return 80.0 * (i + 1); };
    std::vector<DraftPick> picks;
    picks.push_back({UnitType::Swordsmen, {front_x(11), front_y}});  // general, picked first
    for (int i = 0; i < 23; ++i) {
        if (i == 11) continue;  // the general's slot
        UnitType t;
        if (i < 4 || i >= 19) {
            t = UnitType::Knights;
        } else {
            int j = i - 4;
            t = (j % 2 == 0) ? UnitType::Spearmen : UnitType::Swordsmen;
        }
        picks.push_back({t, {front_x(i), front_y}});
    }
    for (double x : {40.0, 120.0, 200.0, 280.0}) picks.push_back({UnitType::Archers, {x, rear_y}});
    for (double x : {1720.0, 1800.0, 1880.0}) picks.push_back({UnitType::Archers, {x, rear_y}});
    return picks;
}

// League 2, player 0. The 150 px squares only fit one effective row inside
// the quarter-depth zone, so the archers sit just inside the knight flanks.
std::vector<DraftPick> league2_bottom() {
    static constexpr UnitType kOrder[9] = {
        UnitType::Knights, UnitType::Archers,   UnitType::Spearmen,
        UnitType::Swordsmen, UnitType::Spearmen, UnitType::Swordsmen,
        UnitType::Spearmen, UnitType::Archers,   UnitType::Knights,
    };
    std::vector<DraftPick> picks;
    for (int i = 0; i < 9; ++i) picks.push_back({kOrder[i], {180.0 + 195.0 * i, 945.0}});
    return picks;
}

}  // namespace

DeploymentZone deployment_zone(const LeagueConfig& config, int player) {
    const double h = config.unit_size / 2.0;
    DeploymentZone z;
    z.center_x_min = h;
    z.center_x_max = config.field_width - h;
    if (player == 0) {
        z.center_y_min = 0.75 * config.field_height + h;
        z.center_y_max = config.field_height - h;
    } else {
        z.center_y_min = h;
        z.center_y_max = 0.25 * config.field_height - h;
    }
    return z;
}

bool legal_placement(const LeagueConfig& config, int player, Vec2 center,
                     std::span<const Vec2> own_placed) {
    const DeploymentZone z = deployment_zone(config, player);
    if (center.x < z.center_x_min || center.x > z.center_x_max) return false;
    if (center.y < z.center_y_min || center.y > z.center_y_max) return false;
    for (Vec2 p : own_placed)
        if (squares_overlap(center, p, config.unit_size)) return false;
    return true;
}

bool legal_pick(const GameState& state, int player, const DraftPick& pick) {
    std::vector<Vec2> placed;
    placed.reserve(state.armies[player].size());
    for (const Unit& u : state.armies[player]) placed.push_back(u.pos);
    return legal_placement(state.config, player, pick.pos, placed);
}

Vec2 nudge_to_legal(const LeagueConfig& config, int player, Vec2 desired,
                    std::span<const Vec2> own_placed) {
    // Whole-pixel candidates only: picks cross the integer wire protocol,
    // and an in-process agent must land exactly where its wire twin does.
    const DeploymentZone z = deployment_zone(config, player);
    const double xmin = std::ceil(z.center_x_min), xmax = std::floor(z.center_x_max);
    const double ymin = std::ceil(z.center_y_min), ymax = std::floor(z.center_y_max);
    auto clamp_zone = [&](Vec2 p) {
        return Vec2{std::clamp(round_half_up(p.x), xmin, xmax),
                    std::clamp(round_half_up(p.y), ymin, ymax)};
    };
    desired = clamp_zone(desired);
    // First pass insists on elbow room so a fresh army can actually march
    // through itself (shoulder-to-shoulder spawns deadlock on crossing
    // paths); second pass takes any legal spot.
    const double clearance = config.unit_size + 70.0;
    auto roomy = [&](Vec2 cand) {
        for (Vec2 p : own_placed)
            if (std::abs(cand.x - p.x) < clearance && std::abs(cand.y - p.y) < clearance)
                return false;
        return true;
    };
    const double step = config.unit_size;
    const double into_zone = player == 0 ? 1.0 : -1.0;  // away from the front edge
    const int depth_steps = static_cast<int>((ymax - ymin) / step) + 1;
    const int side_steps = static_cast<int>(config.field_width / step) + 1;
    for (int pass = 0; pass < 2; ++pass) {
        for (int k = 0; k <= depth_steps; ++k) {
            for (int i = 0; i <= side_steps; ++i) {
                for (double sign : {1.0, -1.0}) {
                    if (i == 0 && sign < 0) continue;
                    Vec2 cand =
                        clamp_zone({desired.x + sign * i * step, desired.y + into_zone * k * step});
                    if (!legal_placement(config, player, cand, own_placed)) continue;
                    if (pass == 0 && !roomy(cand)) continue;
                    return cand;
                }
            }
        }
    }
    return desired;  // zone can always hold a full army; unreachable in practice
}

const std::vector<DraftPick>& predefined_army(int league, int player) {
    static const std::vector<DraftPick> kArmies[2][2] = {
        {league2_bottom(), mirrored(league2_bottom())},
        {league3_bottom(), mirrored(league3_bottom())},
    };
    if (league < 2 || league > 3) throw std::invalid_argument("predefined_army: drafting leagues only");
    return kArmies[league - 2][player];
}

DraftPick default_pick(const GameState& state, int player) {
    const int slot = static_cast<int>(state.armies[player].size());
    DraftPick pick = predefined_army(state.config.league, player).at(slot);
    if (!legal_pick(state, player, pick)) {
        std::vector<Vec2> placed;
        for (const Unit& u : state.armies[player]) placed.push_back(u.pos);
        pick.pos = nudge_to_legal(state.config, player, pick.pos, placed);
    }
    return pick;
}

GameState apply_draft_turn(const GameState& state, const DraftPick& pick_p0,
                           const DraftPick& pick_p1, StepLog* log) {
    if (state.phase != Phase::Draft) throw std::logic_error("apply_draft_turn: not in draft phase");
    GameState s = state;
    const DraftPick* picks[2] = {&pick_p0, &pick_p1};
    DraftPick substitutes[2];
    for (int p = 0; p < 2; ++p) {
        if (!legal_pick(s, p, *picks[p])) {
            substitutes[p] = default_pick(s, p);
            picks[p] = &substitutes[p];
            if (log)
                log->events.push_back(
                    {Event::Kind::Warning, p, 0, 0, 0, "illegal draft pick replaced by default"});
        }
    }
    const bool general_turn = s.config.has_general && s.turn == 0;
    for (int p = 0; p < 2; ++p) {
        int id = static_cast<int>(s.armies[p].size()) + 1;
        s.armies[p].push_back(make_unit(id, p, picks[p]->type, picks[p]->pos, general_turn));
    }
    s.turn += 1;
    if (s.turn >= s.config.draft_turns) {
        s.phase = Phase::Battle;
        recompute_auras(s);
    }
    return s;
}

GameState league1_opening() {
    GameState s;
    s.config = league_config(1);
    s.phase = Phase::Battle;
    // Evenly spaced row near each player's edge; left-to-right in each
    // player's own frame: knights, spearmen, swordsmen, archers.
    static constexpr UnitType kRow[4] = {UnitType::Knights, UnitType::Spearmen,
                                         UnitType::Swordsmen, UnitType::Archers};
    for (int i = 0; i < 4; ++i) {
        Vec2 bottom{kFieldWidth * (i + 1) / 5.0, 0.9 * kFieldHeight};
        s.armies[0].push_back(make_unit(i + 1, 0, kRow[i], bottom, false));
        s.armies[1].push_back(make_unit(i + 1, 1, kRow[i], mirror(bottom), false));
    }
    recompute_auras(s);
    return s;
}

GameState initial_state(const LeagueConfig& config) {
    if (config.league == 1) return league1_opening();
    GameState s;
    s.config = config;
    s.phase = Phase::Draft;
    return s;
}

}  // namespace tbw
