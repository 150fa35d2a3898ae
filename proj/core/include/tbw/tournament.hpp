#pragma once

#include <array>
#include <string>
#include <vector>

#include "tbw/agents.hpp"
#include "tbw/replay.hpp"

namespace tbw {

/// A match side: a built-in agent spec ("oep:gens=40") or an external bot
/// command ("cmd:python3 mybot.py"). The label names the side in replays
/// and tables; it defaults to the spec string.
struct AgentSpec {
    std::string spec;
    std::string label;

    static AgentSpec builtin(std::string s) { return {s, s}; }
    const std::string& display() const { return label.empty() ? spec : label; }
    bool external() const { return spec.rfind("cmd:", 0) == 0; }
};

std::unique_ptr<Agent> instantiate(const AgentSpec& spec);

struct MatchOptions {
    int league = 3;
    std::uint64_t seed = 1;
    int budget_ms = 200;
    std::string replay_path;  // empty = no replay written
    std::array<std::string, 2> labels = {"p0", "p1"};
};

struct MatchResult {
    int winner = -1;  // 0, 1, or -1 for a draw
    GameResult::Reason reason = GameResult::Reason::Elimination;
    int turns_played = 0;  // draft turns included
    std::array<int, 2> surviving{};
    bool forfeit = false;
    std::string replay_path;

    double score_for(int player) const {
        if (winner < 0) return 0.5;
        return winner == player ? 1.0 : 0.0;
    }
};

/// Runs draft (when the league has one) and battle to termination under the
/// per-turn budget, writing the replay when a path is given. Deterministic
/// given the agents' behaviour; external bots forfeit on strikes or crash.
MatchResult play_match(Agent& agent0, Agent& agent1, const MatchOptions& options);
MatchResult play_match(const AgentSpec& spec0, const AgentSpec& spec1,
                       const MatchOptions& options);

struct WinRateTable {
    std::vector<std::string> agents;
    std::vector<std::vector<double>> rate;  // row agent vs column agent
    std::vector<std::vector<int>> draws;
    std::vector<std::vector<int>> games;

    std::string to_csv() const;   // cells to 2 decimals, blank diagonal
    std::string to_text() const;  // aligned console table
};

struct TourneyOptions {
    int league = 3;
    int games_per_pair = 100;
    std::uint64_t base_seed = 1;
    int budget_ms = 200;
    int jobs = 1;             // parallel match workers
    std::string replay_dir;   // empty = keep no replays
    bool progress = false;    // one line per finished pairing on stderr
};

/// Round robin: every unordered pair plays games_per_pair matches, sides
/// alternating every game, seeds derived from (base_seed, pair, game).
/// Draws score 0.5. Matches are independent; results merge in (pair, game)
/// order regardless of scheduling.
WinRateTable round_robin(const std::vector<AgentSpec>& agents, const TourneyOptions& options);

}  // namespace tbw
