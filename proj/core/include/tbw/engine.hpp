#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tbw/observation.hpp"
#include "tbw/state.hpp"

namespace tbw {

/// One movement command: a player-frame pixel delta for one owned unit.
/// (0,0) clears the unit's target, i.e. the unit stops.
struct Order {
    int unit_id = 0;
    int dx = 0;
    int dy = 0;

    friend bool operator==(const Order&, const Order&) = default;
};

struct Event {
    enum class Kind { Charge, Melee, Arrow, FriendlyFire, Death, Warning };
    Kind kind = Kind::Warning;
    int player = 0;   // acting / dying unit's owner
    int unit = 0;     // acting / dying unit id
    int victim = 0;   // receiving unit id (enemy for combat, friend for splash)
    int damage = 0;
    std::string note;  // warnings only
};

struct StepLog {
    std::vector<Event> events;
};

/// Sets movement targets for the given player's units. Unknown or dead ids
/// are skipped with a warning; orders for engaged units are silently
/// ignored; a later order for the same unit overrides an earlier one.
GameState apply_orders(const GameState& state, int player, std::span<const Order> orders,
                       StepLog* log = nullptr);

/// Advances one battle turn. Fixed sub-phase order: orders (p0 then p1),
/// movement (p0 units by id, then p1), charge resolution for contacts
/// created this tick, simultaneous melee, simultaneous archery, removal of
/// the dead, then aura/facing/engagement upkeep, turn increment and the
/// terminal check. Pure: the input state is not modified.
GameState step(const GameState& state, std::span<const Order> orders_p0,
               std::span<const Order> orders_p1, StepLog* log = nullptr);

/// What one unit's movement did this tick.
struct MoveResult {
    bool moved = false;
    std::optional<int> contacted_enemy;  // engagement created, mover initiated
    bool blocked_by_friendly = false;
    bool reached_target = false;
};

/// Moves one living, un-engaged unit with a set target up to its effective
/// speed along the straight line, stopping short of friendly overlap and
/// halting in contact with the first enemy square on the path (both sides
/// become engaged). Exposed for tests; step() drives it for every unit.
MoveResult move_unit(GameState& state, int player, int unit_id);

/// One-time contact bonus: max(0, charge power − charge resistance) with the
/// attacker's and defender's aura applied, rounded half-up, applied to the
/// defender and marked spent. Returns 0 if the charge was already spent.
int resolve_charge(Unit& attacker, Unit& defender);

/// Damage one melee tick deals: max(1, round(ATK·adv − DEF/2)), adv = 1.5
/// on counter matchups. Pure; both directions of an exchange use pre-tick
/// state.
int melee_tick_damage(const Unit& attacker, const Unit& defender);

/// Arrow damage against a specific unit: max(1, round(AD − arrowDEF/2)).
int arrow_damage_against(const Unit& archer, const Unit& victim);

/// Fires every living archer at its nearest enemy within throwing range,
/// with same-army splash within kFriendlyFireRadius of the struck target.
/// All volleys are simultaneous. Exposed for tests; step() calls it.
void resolve_archery(GameState& state, StepLog* log = nullptr);

inline constexpr double kFriendlyFireRadius = 80.0;

/// Current aura factor for a unit (1.25 near a living own general, 0.75
/// when the general is dead, 1.0 otherwise; always 1.0 outside league 3).
double aura_multiplier(const Unit& unit, const GameState& state);

/// Recomputes the cached per-unit aura factors.
void recompute_auras(GameState& state);

/// Elimination / turn-limit detection; empty while the battle is live.
std::optional<GameResult> check_terminal(const GameState& state);

/// Per-player view: own units with targets, enemies without, integer
/// coordinates, id ascending. Dead units are gone from the state already.
Observation observe(const GameState& state, int player);

}  // namespace tbw
