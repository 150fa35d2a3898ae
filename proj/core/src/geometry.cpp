#include "tbw/geometry.hpp"

#include <algorithm>
#include <array>

namespace tbw {

Vec2 clamp_center(Vec2 p, double unit_size) {
    const double h = unit_size / 2.0;
    return {std::clamp(p.x, h, kFieldWidth - h), std::clamp(p.y, h, kFieldHeight - h)};
}

bool squares_overlap(Vec2 a, Vec2 b, double size) {
    return std::abs(a.x - b.x) < size && std::abs(a.y - b.y) < size;
}

bool squares_in_contact(Vec2 a, Vec2 b, double size) {
    return std::abs(a.x - b.x) <= size && std::abs(a.y - b.y) <= size;
}

Vec2 player_frame_to_display(int player, Vec2 origin, Vec2 delta) {
    if (player == 0) return {origin.x + delta.x, origin.y - delta.y};
    return {origin.x - delta.x, origin.y + delta.y};
}

Vec2 display_to_player_frame(int player, Vec2 origin, Vec2 reached) {
    if (player == 0) return {reached.x - origin.x, origin.y - reached.y};
    return {origin.x - reached.x, reached.y - origin.y};
}

std::optional<Direction> quantize_direction(Vec2 v) {
    if (v.x == 0.0 && v.y == 0.0) return std::nullopt;
    // Bearing from display north, clockwise, in degrees.
    double bearing = std::atan2(v.x, -v.y) * 180.0 / 3.141592653589793238462643383279502884;
    if (bearing < 0.0) bearing += 360.0;
    static constexpr std::array<Direction, 8> kBySector = {
        Direction::N, Direction::NE, Direction::E, Direction::SE,
        Direction::S, Direction::SW, Direction::W, Direction::NW,
    };
    // Sector 0 is north, clockwise. Boundaries sit at 22.5°+k·45°.
    int sector = static_cast<int>(std::floor((bearing + 22.5) / 45.0)) % 8;
    double lower_boundary = sector * 45.0 - 22.5;
    if (lower_boundary < 0.0) lower_boundary += 360.0;
    if (bearing == lower_boundary) {
        // Exactly between two octants: the lower enumeration code wins.
        int below = (sector + 7) % 8;
        if (static_cast<int>(kBySector[below]) < static_cast<int>(kBySector[sector]))
            sector = below;
    }
    return kBySector[sector];
}

Vec2 direction_vector(Direction d) {
    constexpr double r = 0.7071067811865476;  // 1/sqrt(2)
    switch (d) {
        case Direction::NW: return {-r, -r};
        case Direction::N: return {0.0, -1.0};
        case Direction::NE: return {r, -r};
        case Direction::E: return {1.0, 0.0};
        case Direction::SE: return {r, r};
        case Direction::S: return {0.0, 1.0};
        case Direction::SW: return {-r, r};
        case Direction::W: return {-1.0, 0.0};
    }
    return {0.0, -1.0};
}

Vec2 snap_to_grid(Vec2 p, GridMode grid) {
    if (grid == GridMode::Full) return p;
    const double cols = grid == GridMode::Coarse13x7 ? 13.0 : 26.0;
    const double rows = grid == GridMode::Coarse13x7 ? 7.0 : 14.0;
    const double cw = kFieldWidth / cols;
    const double ch = kFieldHeight / rows;
    double cx = std::clamp(std::floor(p.x / cw), 0.0, cols - 1.0);
    double cy = std::clamp(std::floor(p.y / ch), 0.0, rows - 1.0);
    return {(cx + 0.5) * cw, (cy + 0.5) * ch};
}

}  // namespace tbw
