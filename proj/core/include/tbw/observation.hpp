#pragma once

#include <vector>

namespace tbw {

/// Per-player battle view, already quantized to the wire representation
/// (integer pixels, numeric type/direction codes) so in-process agents see
/// exactly what an external bot reads off the text protocol.
struct OwnUnitRow {
    int id = 0;
    int x = 0;
    int y = 0;
    int direction = 1;
    int life = 0;
    int type = 0;
    int moving = 0;
    int target_x = 0;  // own position when stationary
    int target_y = 0;
};

/// Enemy rows never carry target fields; the destination is hidden.
struct EnemyUnitRow {
    int id = 0;
    int x = 0;
    int y = 0;
    int direction = 1;
    int life = 0;
    int type = 0;
    int moving = 0;
};

struct Observation {
    std::vector<OwnUnitRow> own;
    std::vector<EnemyUnitRow> enemy;
};

/// One revealed pick (both players see the same history).
struct DraftRecord {
    int player = 0;
    int type = 0;
    int x = 0;
    int y = 0;
};

struct DraftObservation {
    int turn = 0;  // 0-based draft turn index
    std::vector<DraftRecord> history;
};

}  // namespace tbw
