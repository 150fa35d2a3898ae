#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "tbw/complexity.hpp"
#include "tbw/protocol.hpp"
#include "tbw/tournament.hpp"

namespace {

using namespace tbw;

const char* reason_text(GameResult::Reason r) {
    switch (r) {
        case GameResult::Reason::Elimination: return "elimination";
        case GameResult::Reason::TurnLimit: return "turn_limit";
        case GameResult::Reason::Forfeit: return "forfeit";
        case GameResult::Reason::Crash: return "crash";
    }
    return "?";
}

// ---- bot: stdin/stdout protocol loop around a built-in agent ----

int bare_int(const std::string& line) { return std::stoi(line); }

int read_lines(std::vector<std::string>& out, size_t count) {
    out.clear();
    std::string line;
    for (size_t i = 0; i < count; ++i) {
        if (!std::getline(std::cin, line)) return -1;
        out.push_back(line);
    }
    return 0;
}

int run_bot(const std::string& spec, std::uint64_t seed, int sleep_ms) {
    std::string line;
    if (!std::getline(std::cin, line)) return 1;
    const MatchHeader header = parse_match_header(line);
    const LeagueConfig& config = league_config(header.league);

    auto agent = make_agent(spec);
    agent->start_match({config, header.player, seed});
    const auto budget = std::chrono::milliseconds(config.turn_budget_ms);
    const auto nap = std::chrono::milliseconds(sleep_ms);

    std::vector<std::string> lines;
    for (int t = 0; t < config.draft_turns; ++t) {
        if (!std::getline(std::cin, line)) return 0;
        const int turn_index = bare_int(line);
        if (read_lines(lines, static_cast<size_t>(2 * turn_index)) != 0) return 0;
        lines.insert(lines.begin(), line);
        DraftObservation obs = parse_draft_observation(lines);
        DraftPick pick = agent->draft_pick(obs, Clock::now() + budget);
        if (sleep_ms > 0) std::this_thread::sleep_for(nap);
        std::cout << encode_draft_pick(pick) << std::endl;
    }
    while (std::getline(std::cin, line)) {
        const int own = bare_int(line);
        std::vector<std::string> msg{line};
        if (read_lines(lines, static_cast<size_t>(own)) != 0) return 0;
        msg.insert(msg.end(), lines.begin(), lines.end());
        if (!std::getline(std::cin, line)) return 0;
        const int enemy = bare_int(line);
        msg.push_back(line);
        if (read_lines(lines, static_cast<size_t>(enemy)) != 0) return 0;
        msg.insert(msg.end(), lines.begin(), lines.end());
        Observation obs = parse_battle_observation(msg);
        std::vector<Order> orders = agent->act(obs, Clock::now() + budget);
        if (sleep_ms > 0) std::this_thread::sleep_for(nap);
        std::cout << render_action_string(orders) << std::endl;
    }
    return 0;
}

// ---- replay-dump ----

int run_replay_dump(const std::string& path, bool check) {
    LoadedReplay replay = load_replay(path);
    std::cout << "league " << replay.league << ", seed " << replay.seed << ", "
              << replay.agents[0] << " vs " << replay.agents[1] << '\n';
    for (const ReplayTurn& t : replay.turns) {
        std::cout << "turn " << t.turn << (t.draft ? " draft" : " battle");
        if (t.draft) {
            std::cout << "  p0:" << name(t.picks[0].type) << "@" << iround(t.picks[0].pos.x) << ","
                      << iround(t.picks[0].pos.y) << "  p1:" << name(t.picks[1].type) << "@"
                      << iround(t.picks[1].pos.x) << "," << iround(t.picks[1].pos.y);
        } else {
            std::cout << "  orders " << t.orders[0].size() << "/" << t.orders[1].size();
        }
        if (t.result) {
            std::cout << "  result: ";
            if (t.result->winner)
                std::cout << "player " << *t.result->winner << " wins";
            else
                std::cout << "draw";
            std::cout << " (" << reason_text(t.result->reason) << ")";
        }
        std::cout << '\n';
    }
    if (check) {
        ResimulateResult r = resimulate(replay);
        if (!r.ok) {
            std::cerr << "re-simulation FAILED: " << r.mismatch << '\n';
            return 1;
        }
        std::cout << "re-simulation OK: every turn snapshot reproduced\n";
    }
    return 0;
}

std::vector<AgentSpec> parse_agent_list(const std::vector<std::string>& raw) {
    std::vector<AgentSpec> specs;
    for (const std::string& entry : raw) {
        if (entry.find(':') != std::string::npos || entry.find("cmd:") == 0) {
            specs.push_back({entry, entry});
            continue;
        }
        size_t start = 0;
        while (start <= entry.size()) {
            size_t end = entry.find(',', start);
            if (end == std::string::npos) end = entry.size();
            std::string one = entry.substr(start, end - start);
            if (!one.empty()) specs.push_back({one, one});
            if (end == entry.size()) break;
            start = end + 1;
        }
    }
    return specs;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"TotalBotWar battles: deterministic engine, baseline agents, bot referee"};
    app.require_subcommand(1);

    // match
    auto* match = app.add_subcommand("match", "Play one match between two agents or bots");
    std::string p0 = "heuristic", p1 = "ss", bot0, bot1, replay_path, label0, label1;
    int league = 3, budget_ms = 200;
    std::uint64_t seed = 1;
    match->add_option("--p0", p0, "Player 0: agent spec or cmd:<shell command>");
    match->add_option("--p1", p1, "Player 1: agent spec or cmd:<shell command>");
    match->add_option("--bot0", bot0, "Run player 0 as an external bot command");
    match->add_option("--bot1", bot1, "Run player 1 as an external bot command");
    match->add_option("--league", league, "League 1, 2 or 3")->check(CLI::Range(1, 3));
    match->add_option("--seed", seed, "Match seed");
    match->add_option("--budget-ms", budget_ms, "Per-turn budget in milliseconds");
    match->add_option("--replay", replay_path, "Write a JSON-lines replay here");
    match->add_option("--label0", label0, "Replay label for player 0");
    match->add_option("--label1", label1, "Replay label for player 1");

    // tourney
    auto* tourney = app.add_subcommand("tourney", "Round-robin tournament with a win-rate table");
    std::vector<std::string> agents_raw;
    std::string out_csv, replay_dir;
    int games = 100, jobs = 0;
    bool progress = false;
    tourney->add_option("--agents", agents_raw,
                        "Agents: comma-separated names, or repeat the flag for parameterized specs")
        ->required();
    tourney->add_option("--league", league, "League 1, 2 or 3")->check(CLI::Range(1, 3));
    tourney->add_option("--games", games, "Games per pairing (sides alternate)");
    tourney->add_option("--seed", seed, "Base seed");
    tourney->add_option("--budget-ms", budget_ms, "Per-turn budget in milliseconds");
    tourney->add_option("--out", out_csv, "Write the win-rate table as CSV");
    tourney->add_option("--jobs", jobs, "Parallel match workers (0 = all cores)");
    tourney->add_option("--replay-dir", replay_dir, "Keep every match replay in this directory");
    tourney->add_flag("--progress", progress, "Report finished games on stderr");

    // replay-dump
    auto* dump = app.add_subcommand("replay-dump", "Print per-turn summaries of a replay");
    std::string dump_path;
    bool check = false;
    dump->add_option("file", dump_path, "Replay file (JSON lines)")->required();
    dump->add_flag("--check", check, "Re-simulate and verify every turn snapshot");

    // complexity
    auto* cx = app.add_subcommand("complexity", "Print the action/army/state count tables");
    std::string table_name;
    cx->add_option("--table", table_name, "draft, battle, armies or states (default: all)")
        ->check(CLI::IsMember({"draft", "battle", "armies", "states"}));

    // bot
    auto* bot = app.add_subcommand("bot", "Run a built-in agent as a stdin/stdout protocol bot");
    std::string bot_spec = "ss";
    std::uint64_t bot_seed = 0;
    int sleep_ms = 0;
    bot->add_option("--agent", bot_spec, "Agent spec to wrap");
    bot->add_option("--seed", bot_seed, "Agent seed");
    bot->add_option("--sleep-ms", sleep_ms, "Artificial delay before each reply (testing)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*match) {
            AgentSpec s0{bot0.empty() ? p0 : "cmd:" + bot0, label0};
            AgentSpec s1{bot1.empty() ? p1 : "cmd:" + bot1, label1};
            MatchOptions mo;
            mo.league = league;
            mo.seed = seed;
            mo.budget_ms = budget_ms;
            mo.replay_path = replay_path;
            MatchResult r = play_match(s0, s1, mo);
            if (r.winner < 0)
                std::cout << "draw";
            else
                std::cout << "winner " << r.winner << " ("
                          << (r.winner == 0 ? s0.display() : s1.display()) << ")";
            std::cout << "  reason=" << reason_text(r.reason) << "  turns=" << r.turns_played
                      << "  surviving=" << r.surviving[0] << ":" << r.surviving[1] << '\n';
            return 0;
        }
        if (*tourney) {
            TourneyOptions to;
            to.league = league;
            to.games_per_pair = games;
            to.base_seed = seed;
            to.budget_ms = budget_ms;
            to.jobs = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
            to.replay_dir = replay_dir;
            to.progress = progress;
            WinRateTable table = round_robin(parse_agent_list(agents_raw), to);
            std::cout << table.to_text();
            if (!out_csv.empty()) {
                std::ofstream f(out_csv, std::ios::trunc);
                f << table.to_csv();
                std::cout << "wrote " << out_csv << '\n';
            }
            return 0;
        }
        if (*dump) return run_replay_dump(dump_path, check);
        if (*cx) {
            if (table_name.empty() || table_name == "draft")
                std::cout << render_table(TableKind::Draft) << '\n';
            if (table_name.empty() || table_name == "battle")
                std::cout << render_table(TableKind::Battle) << '\n';
            if (table_name.empty() || table_name == "armies")
                std::cout << render_table(TableKind::Armies) << '\n';
            if (table_name.empty() || table_name == "states")
                std::cout << render_table(TableKind::States) << '\n';
            return 0;
        }
        if (*bot) return run_bot(bot_spec, bot_seed, sleep_ms);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
