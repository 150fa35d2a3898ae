#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tbw/draft.hpp"
#include "tbw/engine.hpp"
#include "tbw/observation.hpp"
#include "tbw/rng.hpp"

namespace tbw {

using Clock = std::chrono::steady_clock;
using Deadline = Clock::time_point;

struct MatchContext {
    LeagueConfig config;
    int player = 0;
    std::uint64_t seed = 0;
};

/// A player. One instance per match side; draft_pick is called once per
/// draft turn, act once per battle turn, both under the turn budget.
class Agent {
public:
    virtual ~Agent() = default;
    virtual std::string_view name() const = 0;
    virtual void start_match(const MatchContext& ctx) { ctx_ = ctx; }
    virtual DraftPick draft_pick(const DraftObservation& obs, Deadline deadline) = 0;
    virtual std::vector<Order> act(const Observation& obs, Deadline deadline) = 0;

    enum class Health { Ok, ForfeitStrikes, Crashed };
    virtual Health health() const { return Health::Ok; }

protected:
    MatchContext ctx_;
};

/// Builds a built-in agent from a spec string: a name in
/// {ss, af, rnd, heuristic, oep} optionally followed by ":key=value,..."
/// overrides (all agents take seed=; af takes step=; rnd takes p=; oep
/// takes pop=, gens=, rollout=, focus=, mutation=, margin=).
std::unique_ptr<Agent> make_agent(const std::string& spec);

bool is_builtin_agent_spec(const std::string& spec);

// ---- heuristic machinery, shared with the evolutionary agent ----

/// Attack-desirability score in [0,1]: the mean of the matchup, archer-
/// safety, health, flanking and closeness factors, plus the general factor
/// in league 3 (the general is the enemy unit with id 1).
double lambda_score(const OwnUnitRow& own, const EnemyUnitRow& enemy, const Observation& obs,
                    const LeagueConfig& config);

/// argmax_enemy lambda_score, ties to the lowest enemy id; 0 if no enemies.
int heuristic_target(const OwnUnitRow& own, const Observation& obs, const LeagueConfig& config);

/// Draft rule: counter the opponent's previous pick, capped at ceil(n/3)
/// per type (fall back to the least-used type), placed in front of the
/// countered troop; first pick is a swordsman at the zone center.
DraftPick heuristic_draft_pick(const DraftObservation& obs, const LeagueConfig& config, int player);

/// Contact inference from integer observation coordinates (±1 px slop).
/// The engine ignores orders for engaged units either way.
bool likely_engaged(const OwnUnitRow& own, const Observation& obs, const LeagueConfig& config);

/// One order per un-engaged own unit steering it onto its assigned enemy's
/// current position. `enemy_ids` is parallel to obs.own.
std::vector<Order> orders_toward_targets(const Observation& obs, const LeagueConfig& config,
                                         int player, std::span<const int> enemy_ids);

/// Rebuilds a forward-model state from a player view: own targets are
/// known; moving enemies are extrapolated along their facing; engagement is
/// inferred from square contact. Armies are indexed by real player index.
GameState state_from_observation(const Observation& obs, const LeagueConfig& config, int player);

// ---- evolutionary planner ----

struct OepParams {
    int population = 32;
    double mutation_rate = 0.1;
    int rollout_ticks = 10;
    double focus_fire_bonus = 0.05;
    int safety_margin_ms = 20;
    int max_generations = 0;  // 0 = until the deadline
};

struct OepStats {
    int generations = 0;
    int evaluations = 0;
    double seed_fitness = 0.0;
    double best_fitness = 0.0;
};

class OepAgent final : public Agent {
public:
    explicit OepAgent(OepParams params = {}, std::uint64_t seed_override = 0);
    std::string_view name() const override { return "oep"; }
    void start_match(const MatchContext& ctx) override;
    DraftPick draft_pick(const DraftObservation& obs, Deadline deadline) override;
    std::vector<Order> act(const Observation& obs, Deadline deadline) override;

    const OepStats& last_stats() const { return stats_; }
    /// Rollout fitness of one target assignment (exposed for tests).
    double evaluate_genome(const Observation& obs, std::span<const int> genes) const;

private:
    double evaluate_on(const GameState& base, const Observation& obs,
                       std::span<const int> genes) const;

    OepParams params_;
    std::uint64_t seed_override_ = 0;
    Rng rng_;
    OepStats stats_;
};

}  // namespace tbw
