#pragma once

#include <array>
#include <optional>
#include <vector>

#include "tbw/geometry.hpp"
#include "tbw/league.hpp"
#include "tbw/types.hpp"

namespace tbw {

/// One troop on the battlefield. Positions are unit centers in continuous
/// display pixels; the army vectors hold living units only, id ascending.
struct Unit {
    int id = 0;     // unique within an army, 1-based in draft order
    int owner = 0;  // player index
    UnitType type = UnitType::Swordsmen;
    Vec2 pos;
    Direction facing = Direction::N;
    int life = 0;
    std::optional<Vec2> target;  // display frame, clamped
    bool is_general = false;
    std::optional<int> engaged_with;  // enemy unit id
    bool charge_spent = false;
    double aura = 1.0;  // cached attribute multiplier, recomputed each turn

    bool moving() const { return target.has_value() && !engaged_with.has_value(); }

    double eff_attack() const { return attributes(type).attack_strength * aura; }
    double eff_defence() const { return attributes(type).defence * aura; }
    double eff_charge_power() const { return attributes(type).charge_power * aura; }
    double eff_charge_resistance() const { return attributes(type).charge_resistance * aura; }
    double eff_speed() const { return attributes(type).moving_speed * aura; }
    double eff_arrow_defence() const { return attributes(type).arrow_defence * aura; }
    double eff_arrow_damage() const { return attributes(type).arrow_damage.value_or(0) * aura; }
};

enum class Phase { Draft, Battle, Finished };

struct GameResult {
    enum class Reason { Elimination, TurnLimit, Forfeit, Crash };
    std::optional<int> winner;  // empty = draw
    Reason reason = Reason::Elimination;
};

struct GameState {
    LeagueConfig config;
    int turn = 0;  // total turns played, draft included
    Phase phase = Phase::Draft;
    std::array<std::vector<Unit>, 2> armies;
    std::optional<GameResult> result;

    int battle_turn() const { return turn - config.draft_turns; }

    const Unit* find_unit(int player, int id) const;
    Unit* find_unit(int player, int id);
};

}  // namespace tbw
