#include "tbw/types.hpp"

#include <array>

namespace tbw {

namespace {

constexpr std::array<AttributeSet, kUnitTypeCount> kAttributeTable = {{
    // Swordsmen
    {250, 20, 10, 5, 25, 15, 10, std::nullopt, std::nullopt},
    // Spearmen
    {250, 15, 20, 10, 125, 10, 30, std::nullopt, std::nullopt},
    // Knights
    {200, 12, 12, 100, 15, 40, 30, std::nullopt, std::nullopt},
    // Archers
    {100, 10, 5, 5, 0, 15, 10, 450, 20},
}};

}  // namespace

const AttributeSet& attributes(UnitType type) {
    return kAttributeTable[static_cast<int>(type)];
}

bool counters(UnitType attacker, UnitType defender) {
    switch (attacker) {
        case UnitType::Swordsmen: return defender == UnitType::Spearmen;
        case UnitType::Spearmen: return defender == UnitType::Knights;
        case UnitType::Knights: return defender == UnitType::Swordsmen;
        case UnitType::Archers: return false;
    }
    return false;
}

UnitType counter_pick(UnitType type) {
    switch (type) {
        case UnitType::Knights: return UnitType::Spearmen;
        case UnitType::Spearmen: return UnitType::Swordsmen;
        case UnitType::Swordsmen: return UnitType::Knights;
        case UnitType::Archers: return UnitType::Knights;
    }
    return UnitType::Knights;
}

std::string_view name(UnitType type) {
    switch (type) {
        case UnitType::Swordsmen: return "swordsmen";
        case UnitType::Spearmen: return "spearmen";
        case UnitType::Knights: return "knights";
        case UnitType::Archers: return "archers";
    }
    return "?";
}

std::string_view name(Direction d) {
    switch (d) {
        case Direction::NW: return "NW";
        case Direction::N: return "N";
        case Direction::NE: return "NE";
        case Direction::E: return "E";
        case Direction::SE: return "SE";
        case Direction::S: return "S";
        case Direction::SW: return "SW";
        case Direction::W: return "W";
    }
    return "?";
}

std::optional<UnitType> unit_type_from_code(int code) {
    if (code < 0 || code >= kUnitTypeCount) return std::nullopt;
    return static_cast<UnitType>(code);
}

std::optional<Direction> direction_from_code(int code) {
    if (code < 0 || code > 7) return std::nullopt;
    return static_cast<Direction>(code);
}

}  // namespace tbw
