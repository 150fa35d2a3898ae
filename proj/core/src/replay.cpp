#include "tbw/replay.hpp"

#include <stdexcept>

#include "json.hpp"

namespace tbw {

namespace {

using ordered = nlohmann::ordered_json;

ordered unit_json(const Unit& u) {
    ordered j;
    j["id"] = u.id;
    j["player"] = u.owner;
    j["type"] = static_cast<int>(u.type);
    j["x"] = u.pos.x;
    j["y"] = u.pos.y;
    j["facing"] = static_cast<int>(u.facing);
    j["life"] = u.life;
    j["moving"] = u.moving() ? 1 : 0;
    if (u.target) {
        j["target_x"] = u.target->x;
        j["target_y"] = u.target->y;
    }
    if (u.is_general) j["general"] = true;
    if (u.engaged_with) j["engaged_with"] = *u.engaged_with;
    if (u.charge_spent) j["charge_spent"] = true;
    return j;
}

ordered units_json(const GameState& s) {
    ordered arr = ordered::array();
    for (const auto& army : s.armies)
        for (const Unit& u : army) arr.push_back(unit_json(u));
    return arr;
}

ordered orders_json(std::span<const Order> orders) {
    ordered arr = ordered::array();
    for (const Order& o : orders) arr.push_back({o.unit_id, o.dx, o.dy});
    return arr;
}

const char* kind_name(Event::Kind k) {
    switch (k) {
        case Event::Kind::Charge: return "charge";
        case Event::Kind::Melee: return "melee";
        case Event::Kind::Arrow: return "arrow";
        case Event::Kind::FriendlyFire: return "friendly_fire";
        case Event::Kind::Death: return "death";
        case Event::Kind::Warning: return "warning";
    }
    return "?";
}

ordered events_json(const StepLog& log) {
    ordered arr = ordered::array();
    for (const Event& e : log.events) {
        ordered j;
        j["type"] = kind_name(e.kind);
        j["player"] = e.player;
        j["unit"] = e.unit;
        if (e.kind != Event::Kind::Death && e.kind != Event::Kind::Warning) {
            j["victim"] = e.victim;
            j["damage"] = e.damage;
        }
        if (!e.note.empty()) j["note"] = e.note;
        arr.push_back(j);
    }
    return arr;
}

const char* reason_name(GameResult::Reason r) {
    switch (r) {
        case GameResult::Reason::Elimination: return "elimination";
        case GameResult::Reason::TurnLimit: return "turn_limit";
        case GameResult::Reason::Forfeit: return "forfeit";
        case GameResult::Reason::Crash: return "crash";
    }
    return "?";
}

std::optional<GameResult::Reason> reason_from_name(const std::string& s) {
    if (s == "elimination") return GameResult::Reason::Elimination;
    if (s == "turn_limit") return GameResult::Reason::TurnLimit;
    if (s == "forfeit") return GameResult::Reason::Forfeit;
    if (s == "crash") return GameResult::Reason::Crash;
    return std::nullopt;
}

ordered result_json(const GameState& s, const GameResult& r) {
    ordered j;
    if (r.winner)
        j["winner"] = *r.winner;
    else
        j["winner"] = nullptr;
    j["reason"] = reason_name(r.reason);
    j["surviving"] = {s.armies[0].size(), s.armies[1].size()};
    return j;
}

}  // namespace

std::string state_units_json(const GameState& s) { return units_json(s).dump(); }

ReplayWriter::ReplayWriter(const std::string& path, int league, std::uint64_t seed,
                           const std::array<std::string, 2>& agent_labels) {
    if (path.empty()) return;
    out_.open(path, std::ios::trunc);
    if (!out_) throw std::runtime_error("cannot open replay file: " + path);
    ordered header;
    header["replay"] = "tbw";
    header["version"] = 1;
    header["league"] = league;
    header["seed"] = seed;
    header["agents"] = {agent_labels[0], agent_labels[1]};
    write_line(header.dump());
}

void ReplayWriter::write_line(const std::string& line) {
    if (out_.is_open()) out_ << line << '\n';
}

void ReplayWriter::draft_turn(int turn, const DraftPick& p0, const DraftPick& p1,
                              const GameState& after, const StepLog& log) {
    if (!out_.is_open()) return;
    ordered j;
    j["turn"] = turn;
    j["phase"] = "draft";
    j["orders_p0"] = ordered::array(
        {{static_cast<int>(p0.type), iround(p0.pos.x), iround(p0.pos.y)}});
    j["orders_p1"] = ordered::array(
        {{static_cast<int>(p1.type), iround(p1.pos.x), iround(p1.pos.y)}});
    j["units"] = units_json(after);
    j["events"] = events_json(log);
    write_line(j.dump());
}

void ReplayWriter::battle_turn(int turn, std::span<const Order> o0, std::span<const Order> o1,
                               const GameState& after, const StepLog& log) {
    if (!out_.is_open()) return;
    ordered j;
    j["turn"] = turn;
    j["phase"] = "battle";
    j["orders_p0"] = orders_json(o0);
    j["orders_p1"] = orders_json(o1);
    j["units"] = units_json(after);
    j["events"] = events_json(log);
    if (after.result) {
        j["result"] = result_json(after, *after.result);
        result_written_ = true;
    }
    write_line(j.dump());
}

void ReplayWriter::verdict(const GameState& state, const GameResult& result) {
    if (!out_.is_open() || result_written_) return;
    ordered j;
    j["turn"] = state.turn;
    j["phase"] = state.phase == Phase::Draft ? "draft" : "battle";
    j["orders_p0"] = ordered::array();
    j["orders_p1"] = ordered::array();
    j["units"] = units_json(state);
    j["events"] = ordered::array();
    j["result"] = result_json(state, result);
    write_line(j.dump());
    result_written_ = true;
}

LoadedReplay load_replay(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open replay file: " + path);
    LoadedReplay replay;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("replay is empty: " + path);
    ordered header = ordered::parse(line);
    if (header.value("replay", "") != "tbw")
        throw std::runtime_error("not a tbw replay: " + path);
    replay.league = header.at("league").get<int>();
    replay.seed = header.at("seed").get<std::uint64_t>();
    replay.agents[0] = header.at("agents").at(0).get<std::string>();
    replay.agents[1] = header.at("agents").at(1).get<std::string>();

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ordered j = ordered::parse(line);
        ReplayTurn t;
        t.turn = j.at("turn").get<int>();
        t.draft = j.at("phase").get<std::string>() == "draft";
        for (int p = 0; p < 2; ++p) {
            const ordered& arr = j.at(p == 0 ? "orders_p0" : "orders_p1");
            if (t.draft) {
                if (!arr.empty()) {
                    const ordered& triple = arr.at(0);
                    t.picks[p].type =
                        unit_type_from_code(triple.at(0).get<int>()).value_or(UnitType::Swordsmen);
                    t.picks[p].pos = {triple.at(1).get<double>(), triple.at(2).get<double>()};
                }
            } else {
                for (const ordered& triple : arr)
                    t.orders[p].push_back({triple.at(0).get<int>(), triple.at(1).get<int>(),
                                           triple.at(2).get<int>()});
            }
        }
        t.units_json = j.at("units").dump();
        if (j.contains("result")) {
            GameResult r;
            if (!j["result"].at("winner").is_null()) r.winner = j["result"]["winner"].get<int>();
            r.reason = reason_from_name(j["result"].at("reason").get<std::string>())
                           .value_or(GameResult::Reason::Elimination);
            t.result = r;
        }
        replay.turns.push_back(std::move(t));
    }
    return replay;
}

ResimulateResult resimulate(const LoadedReplay& replay) {
    ResimulateResult res;
    GameState state = initial_state(league_config(replay.league));
    for (const ReplayTurn& t : replay.turns) {
        if (t.result && (t.result->reason == GameResult::Reason::Forfeit ||
                         t.result->reason == GameResult::Reason::Crash)) {
            // Decided by the referee, not the engine; nothing to replay.
            res.ok = true;
            res.final_state = state;
            return res;
        }
        if (t.draft) {
            if (state.phase != Phase::Draft) {
                res.mismatch = "turn " + std::to_string(t.turn) + ": unexpected draft line";
                return res;
            }
            state = apply_draft_turn(state, t.picks[0], t.picks[1]);
        } else {
            if (state.phase != Phase::Battle) {
                res.mismatch = "turn " + std::to_string(t.turn) + ": unexpected battle line";
                return res;
            }
            state = step(state, t.orders[0], t.orders[1]);
        }
        std::string snapshot = state_units_json(state);
        if (snapshot != t.units_json) {
            res.mismatch = "turn " + std::to_string(t.turn) + ": unit snapshot diverged";
            return res;
        }
    }
    res.ok = true;
    res.final_state = state;
    return res;
}

}  // namespace tbw
