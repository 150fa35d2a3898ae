#pragma once

#include <optional>
#include <string_view>

namespace tbw {

/// The four unit classes. Numeric codes are part of the wire protocol.
enum class UnitType : int {
    Swordsmen = 0,
    Spearmen = 1,
    Knights = 2,
    Archers = 3,
};

inline constexpr int kUnitTypeCount = 4;

/// Compass octant a unit is looking at, in display coordinates
/// (y grows downward, so N means decreasing y). Codes are wire values.
enum class Direction : int {
    NW = 0,
    N = 1,
    NE = 2,
    E = 3,
    SE = 4,
    S = 5,
    SW = 6,
    W = 7,
};

/// Static combat attributes of one unit class. throwing_distance and
/// arrow_damage exist only for archers.
struct AttributeSet {
    int health_points = 0;
    int attack_strength = 0;
    int defence = 0;
    int charge_power = 0;
    int charge_resistance = 0;
    int moving_speed = 0;  // pixels per turn
    int arrow_defence = 0;
    std::optional<int> throwing_distance;  // pixels
    std::optional<int> arrow_damage;
};

const AttributeSet& attributes(UnitType type);

/// Rock-paper-scissors over the melee classes: swordsmen beat spearmen,
/// spearmen beat knights, knights beat swordsmen. Archers counter nothing.
bool counters(UnitType attacker, UnitType defender);

/// The class that beats `type` in melee; archers are countered by knights.
UnitType counter_pick(UnitType type);

std::string_view name(UnitType type);
std::string_view name(Direction d);

std::optional<UnitType> unit_type_from_code(int code);
std::optional<Direction> direction_from_code(int code);

}  // namespace tbw
