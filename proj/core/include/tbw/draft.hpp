#pragma once

#include <span>
#include <vector>

#include "tbw/engine.hpp"
#include "tbw/state.hpp"

namespace tbw {

struct DraftPick {
    UnitType type = UnitType::Swordsmen;
    Vec2 pos;  // unit center, display frame
};

/// Deployment band (full field width). Player 0 owns the bottom quarter,
/// player 1 the top quarter; the unit square must fit inside.
struct DeploymentZone {
    double center_y_min = 0;
    double center_y_max = 0;
    double center_x_min = 0;
    double center_x_max = 0;

    double front_y(int player) const { return player == 0 ? center_y_min : center_y_max; }
    double center_y() const { return (center_y_min + center_y_max) / 2.0; }
};

DeploymentZone deployment_zone(const LeagueConfig& config, int player);

/// True iff the pick sits in the player's zone and overlaps none of the
/// player's already-placed units. Any type mix is allowed.
bool legal_pick(const GameState& state, int player, const DraftPick& pick);

/// Variant over raw placed centers, for draft planning outside a GameState.
bool legal_placement(const LeagueConfig& config, int player, Vec2 center,
                     std::span<const Vec2> own_placed);

/// Nearest legal spot to `desired`: scans sideways and then deeper into the
/// zone on a half-unit grid. Deterministic.
Vec2 nudge_to_legal(const LeagueConfig& config, int player, Vec2 desired,
                    std::span<const Vec2> own_placed);

/// The fixed army used by the simple agents and as the substitute for
/// illegal picks: knights on the flanks, spearmen and swordsmen in the
/// center, archers in the rear (league 3) and the general — the first pick —
/// dead center. Indexed by pick order.
const std::vector<DraftPick>& predefined_army(int league, int player);

/// Substitute pick for the player's current slot, nudged to legality.
DraftPick default_pick(const GameState& state, int player);

/// Instantiates both picks simultaneously (illegal picks are replaced by
/// default_pick with a warning); draft turn 1 creates the generals in
/// league 3. Flips to the battle phase after the last draft turn.
GameState apply_draft_turn(const GameState& state, const DraftPick& pick_p0,
                           const DraftPick& pick_p1, StepLog* log = nullptr);

/// League-1 battle-ready opening: one unit of each type per side in
/// mirrored rows, knights-spearmen-swordsmen-archers left to right in each
/// player's own frame.
GameState league1_opening();

/// Fresh game for a league: the league-1 opening, or an empty draft state.
GameState initial_state(const LeagueConfig& config);

}  // namespace tbw
