#include "tbw/tournament.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "tbw/botproc.hpp"

namespace tbw {

std::unique_ptr<Agent> instantiate(const AgentSpec& spec) {
    if (spec.external()) return std::make_unique<ExternalBotAgent>(spec.spec.substr(4));
    return make_agent(spec.spec);
}

namespace {

Deadline budget_deadline(int budget_ms) {
    return Clock::now() + std::chrono::milliseconds(budget_ms);
}

bool agent_failed(const Agent& agent) { return agent.health() != Agent::Health::Ok; }

MatchResult referee_verdict(const GameState& state, int loser, GameResult::Reason reason,
                            ReplayWriter& writer) {
    GameResult result;
    result.winner = 1 - loser;
    result.reason = reason;
    writer.verdict(state, result);
    MatchResult out;
    out.winner = 1 - loser;
    out.reason = reason;
    out.turns_played = state.turn;
    out.surviving = {static_cast<int>(state.armies[0].size()),
                     static_cast<int>(state.armies[1].size())};
    out.forfeit = true;
    return out;
}

}  // namespace

MatchResult play_match(Agent& agent0, Agent& agent1, const MatchOptions& options) {
    const LeagueConfig& config = league_config(options.league);
    Agent* agents[2] = {&agent0, &agent1};
    for (int p = 0; p < 2; ++p)
        agents[p]->start_match({config, p, derive_seed(options.seed, 0xA6E27ULL, p)});

    ReplayWriter writer(options.replay_path, options.league, options.seed, options.labels);
    GameState state = initial_state(config);

    // Draft phase.
    std::vector<DraftRecord> history;
    while (state.phase == Phase::Draft) {
        DraftObservation obs{state.turn, history};
        DraftPick picks[2];
        for (int p = 0; p < 2; ++p) {
            picks[p] = agents[p]->draft_pick(obs, budget_deadline(options.budget_ms));
            if (agent_failed(*agents[p]))
                return referee_verdict(state, p,
                                       agents[p]->health() == Agent::Health::Crashed
                                           ? GameResult::Reason::Crash
                                           : GameResult::Reason::Forfeit,
                                       writer);
        }
        for (int p = 0; p < 2; ++p)
            if (!legal_pick(state, p, picks[p])) picks[p] = default_pick(state, p);
        const int turn = state.turn;
        StepLog log;
        state = apply_draft_turn(state, picks[0], picks[1], &log);
        writer.draft_turn(turn, picks[0], picks[1], state, log);
        for (int p = 0; p < 2; ++p)
            history.push_back({p, static_cast<int>(picks[p].type), iround(picks[p].pos.x),
                               iround(picks[p].pos.y)});
    }

    // Battle phase.
    while (state.phase == Phase::Battle) {
        std::vector<Order> orders[2];
        for (int p = 0; p < 2; ++p) {
            Observation obs = observe(state, p);
            orders[p] = agents[p]->act(obs, budget_deadline(options.budget_ms));
            if (agent_failed(*agents[p]))
                return referee_verdict(state, p,
                                       agents[p]->health() == Agent::Health::Crashed
                                           ? GameResult::Reason::Crash
                                           : GameResult::Reason::Forfeit,
                                       writer);
        }
        const int turn = state.turn;
        StepLog log;
        state = step(state, orders[0], orders[1], &log);
        writer.battle_turn(turn, orders[0], orders[1], state, log);
    }

    MatchResult out;
    out.reason = state.result->reason;
    out.winner = state.result->winner.value_or(-1);
    out.turns_played = state.turn;
    out.surviving = {static_cast<int>(state.armies[0].size()),
                     static_cast<int>(state.armies[1].size())};
    out.replay_path = options.replay_path;
    return out;
}

MatchResult play_match(const AgentSpec& spec0, const AgentSpec& spec1,
                       const MatchOptions& options) {
    auto a0 = instantiate(spec0);
    auto a1 = instantiate(spec1);
    MatchOptions opts = options;
    opts.labels = {spec0.display(), spec1.display()};
    return play_match(*a0, *a1, opts);
}

std::string WinRateTable::to_csv() const {
    std::ostringstream out;
    out << "agent";
    for (const auto& a : agents) out << ',' << a;
    out << '\n';
    for (size_t i = 0; i < agents.size(); ++i) {
        out << agents[i];
        for (size_t j = 0; j < agents.size(); ++j) {
            out << ',';
            if (i != j) out << std::fixed << std::setprecision(2) << rate[i][j];
        }
        out << '\n';
    }
    return out.str();
}

std::string WinRateTable::to_text() const {
    size_t w = 8;
    for (const auto& a : agents) w = std::max(w, a.size() + 2);
    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(w)) << "";
    for (const auto& a : agents) out << std::setw(static_cast<int>(w)) << a;
    out << '\n';
    for (size_t i = 0; i < agents.size(); ++i) {
        out << std::setw(static_cast<int>(w)) << agents[i];
        for (size_t j = 0; j < agents.size(); ++j) {
            if (i == j) {
                out << std::setw(static_cast<int>(w)) << "-";
            } else {
                std::ostringstream cell;
                cell << std::fixed << std::setprecision(2) << rate[i][j];
                out << std::setw(static_cast<int>(w)) << cell.str();
            }
        }
        out << '\n';
    }
    return out.str();
}

WinRateTable round_robin(const std::vector<AgentSpec>& agents, const TourneyOptions& options) {
    const size_t n = agents.size();
    WinRateTable table;
    table.agents.reserve(n);
    for (const auto& a : agents) table.agents.push_back(a.display());
    table.rate.assign(n, std::vector<double>(n, 0.0));
    table.draws.assign(n, std::vector<int>(n, 0));
    table.games.assign(n, std::vector<int>(n, 0));
    if (n < 2 || options.games_per_pair <= 0) return table;

    struct Job {
        size_t i, j;  // pair, i < j
        int game;
    };
    std::vector<Job> jobs;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (int g = 0; g < options.games_per_pair; ++g) jobs.push_back({i, j, g});

    std::vector<MatchResult> results(jobs.size());
    std::atomic<size_t> next{0};
    std::mutex progress_mutex;

    auto run_job = [&](size_t k) {
        const Job& job = jobs[k];
        // Sides alternate every game within a pairing.
        const AgentSpec& first = job.game % 2 == 0 ? agents[job.i] : agents[job.j];
        const AgentSpec& second = job.game % 2 == 0 ? agents[job.j] : agents[job.i];
        MatchOptions mo;
        mo.league = options.league;
        mo.budget_ms = options.budget_ms;
        mo.seed = derive_seed(options.base_seed, job.i * 64 + job.j, job.game);
        if (!options.replay_dir.empty())
            mo.replay_path = options.replay_dir + "/pair" + std::to_string(job.i) + "-" +
                             std::to_string(job.j) + "_game" + std::to_string(job.game) + ".jsonl";
        results[k] = play_match(first, second, mo);
        if (options.progress) {
            std::lock_guard<std::mutex> lock(progress_mutex);
            std::fprintf(stderr, "[tourney] %s vs %s game %d/%d done\n", first.display().c_str(),
                         second.display().c_str(), job.game + 1, options.games_per_pair);
        }
    };

    const int workers = std::max(1, options.jobs);
    if (workers == 1) {
        for (size_t k = 0; k < jobs.size(); ++k) run_job(k);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (size_t k = next.fetch_add(1); k < jobs.size(); k = next.fetch_add(1))
                    run_job(k);
            });
        for (auto& t : pool) t.join();
    }

    // Deterministic merge in (pair, game) order.
    for (size_t k = 0; k < jobs.size(); ++k) {
        const Job& job = jobs[k];
        const MatchResult& r = results[k];
        const int side_of_i = job.game % 2 == 0 ? 0 : 1;
        table.rate[job.i][job.j] += r.score_for(side_of_i);
        table.rate[job.j][job.i] += r.score_for(1 - side_of_i);
        if (r.winner < 0) {
            table.draws[job.i][job.j] += 1;
            table.draws[job.j][job.i] += 1;
        }
        table.games[job.i][job.j] += 1;
        table.games[job.j][job.i] += 1;
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j && table.games[i][j] > 0) table.rate[i][j] /= table.games[i][j];
    return table;
}

}  // namespace tbw
