#pragma once

#include <array>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "tbw/draft.hpp"
#include "tbw/engine.hpp"

namespace tbw {

/// Canonical JSON snapshot of the full state's units (both armies, targets
/// included — a replay is referee truth, not a player view). Stable key
/// order and exact round-trip doubles, so byte equality means state
/// equality.
std::string state_units_json(const GameState& state);

/// JSON-lines match log. Line 1 is a header object; every following line is
/// one turn object {turn, phase, orders_p0, orders_p1, units, events} with
/// an optional trailing result. docs/replay-schema.json pins the fields.
class ReplayWriter {
public:
    /// Empty path = disabled writer (all calls no-op).
    ReplayWriter(const std::string& path, int league, std::uint64_t seed,
                 const std::array<std::string, 2>& agent_labels);

    void draft_turn(int turn, const DraftPick& p0, const DraftPick& p1, const GameState& after,
                    const StepLog& log);
    void battle_turn(int turn, std::span<const Order> o0, std::span<const Order> o1,
                     const GameState& after, const StepLog& log);
    /// Final line for matches decided outside a step (forfeit / crash).
    void verdict(const GameState& state, const GameResult& result);

    bool enabled() const { return out_.is_open(); }

private:
    void write_line(const std::string& line);
    std::ofstream out_;
    bool result_written_ = false;
};

struct ReplayTurn {
    int turn = 0;
    bool draft = false;
    std::array<DraftPick, 2> picks;            // draft lines
    std::array<std::vector<Order>, 2> orders;  // battle lines
    std::string units_json;
    std::optional<GameResult> result;
};

struct LoadedReplay {
    int league = 1;
    std::uint64_t seed = 0;
    std::array<std::string, 2> agents;
    std::vector<ReplayTurn> turns;
};

LoadedReplay load_replay(const std::string& path);

struct ResimulateResult {
    bool ok = false;
    std::string mismatch;  // empty when ok
    GameState final_state;
};

/// Feeds the recorded picks and order streams back through the engine and
/// checks every per-turn unit snapshot byte-for-byte.
ResimulateResult resimulate(const LoadedReplay& replay);

}  // namespace tbw
