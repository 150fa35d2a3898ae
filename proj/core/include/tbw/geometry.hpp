#pragma once

#include <cmath>
#include <optional>

#include "tbw/types.hpp"

namespace tbw {

inline constexpr double kFieldWidth = 1920.0;
inline constexpr double kFieldHeight = 1080.0;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(Vec2 a, double k) { return {a.x * k, a.y * k}; }
    friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

/// Half-up rounding, used for all wire coordinates and final damage values.
inline double round_half_up(double v) { return std::floor(v + 0.5); }
inline int iround(double v) { return static_cast<int>(round_half_up(v)); }

/// Clamp a unit center so its size×size square stays inside the battlefield.
Vec2 clamp_center(Vec2 p, double unit_size);

/// Axis-aligned size×size squares centered at a and b.
/// Overlap is open (touching edges is not an overlap); contact is closed.
bool squares_overlap(Vec2 a, Vec2 b, double size);
bool squares_in_contact(Vec2 a, Vec2 b, double size);

/// Converts a player-frame order delta into a display-frame point.
/// Player 0 plays from the bottom edge: +dx is display east and +dy is
/// toward the top of the display. Player 1 is mirrored. The result is NOT
/// clamped; pair with clamp_center for an in-bounds movement target.
Vec2 player_frame_to_display(int player, Vec2 origin, Vec2 delta);

/// Inverse of player_frame_to_display (recovers the delta).
Vec2 display_to_player_frame(int player, Vec2 origin, Vec2 reached);

/// Compass octant of a display-frame vector; boundaries sit at 22.5°+k·45°
/// and exact boundary hits resolve to the lower enumeration code.
/// Empty for the zero vector (callers keep the previous facing).
std::optional<Direction> quantize_direction(Vec2 v);

/// Unit vector a facing octant points at, display frame.
Vec2 direction_vector(Direction d);

enum class GridMode { Full, Coarse13x7, Fine26x14 };

/// Full returns p unchanged; the coarse/fine modes return the center of the
/// containing cell of a 13×7 or 26×14 grid laid over the battlefield.
Vec2 snap_to_grid(Vec2 p, GridMode grid);

}  // namespace tbw
