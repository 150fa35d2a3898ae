#pragma once

#include "tbw/geometry.hpp"

namespace tbw {

/// Rule tier. League 1 is a fixed 4-unit opening, league 2 adds a 9-turn
/// draft, league 3 plays 30 units at half size and adds the general.
struct LeagueConfig {
    int league = 1;
    int army_size = 4;       // n, units per army
    double unit_size = 150;  // s, side of the unit square in pixels
    int draft_turns = 0;
    bool has_general = false;
    double field_width = kFieldWidth;
    double field_height = kFieldHeight;
    int max_turns = 400;  // battle turns before the unit-count tie-break
    int turn_budget_ms = 200;
};

const LeagueConfig& league_config(int league);

/// General aura: radius and the alive/dead attribute multipliers.
inline constexpr double kGeneralAuraRadius = 150.0;
inline constexpr double kGeneralAliveBonus = 1.25;
inline constexpr double kGeneralDeadPenalty = 0.75;

}  // namespace tbw
