#include "tbw/protocol.hpp"

#include <charconv>
#include <sstream>

namespace tbw {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

int parse_int(std::string_view tok, const std::string& where) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("expected integer in " + where + ", got '" + std::string(tok) + "'");
    return value;
}

std::vector<int> parse_ints(const std::string& line, size_t expected, const std::string& where) {
    auto toks = split_ws(line);
    if (toks.size() != expected)
        throw ParseError(where + ": expected " + std::to_string(expected) + " fields, got " +
                         std::to_string(toks.size()));
    std::vector<int> out;
    out.reserve(expected);
    for (auto t : toks) out.push_back(parse_int(t, where));
    return out;
}

}  // namespace

std::vector<Order> parse_action_string(const std::string& text) {
    std::vector<Order> orders;
    size_t start = 0;
    int fragment = 0;
    while (start <= text.size()) {
        size_t end = text.find(';', start);
        if (end == std::string::npos) end = text.size();
        std::string_view frag = trim(std::string_view(text).substr(start, end - start));
        if (!frag.empty()) {
            auto toks = split_ws(frag);
            const std::string where = "fragment " + std::to_string(fragment);
            if (toks.size() != 3)
                throw ParseError(where + ": expected 'ID dx dy', got '" + std::string(frag) + "'");
            orders.push_back({parse_int(toks[0], where), parse_int(toks[1], where),
                              parse_int(toks[2], where)});
        }
        if (end == text.size()) break;
        start = end + 1;
        ++fragment;
    }
    return orders;
}

std::string render_action_string(std::span<const Order> orders) {
    std::ostringstream out;
    for (size_t i = 0; i < orders.size(); ++i) {
        if (i) out << "; ";
        out << orders[i].unit_id << ' ' << orders[i].dx << ' ' << orders[i].dy;
    }
    return out.str();
}

std::string encode_battle_observation(const Observation& obs) {
    std::ostringstream out;
    out << obs.own.size() << '\n';
    for (const OwnUnitRow& r : obs.own)
        out << r.id << ' ' << r.x << ' ' << r.y << ' ' << r.direction << ' ' << r.life << ' '
            << r.type << ' ' << r.moving << ' ' << r.target_x << ' ' << r.target_y << '\n';
    out << obs.enemy.size() << '\n';
    for (const EnemyUnitRow& r : obs.enemy)
        out << r.id << ' ' << r.x << ' ' << r.y << ' ' << r.direction << ' ' << r.life << ' '
            << r.type << ' ' << r.moving << '\n';
    return out.str();
}

Observation parse_battle_observation(const std::vector<std::string>& lines) {
    size_t at = 0;
    auto next_line = [&]() -> const std::string& {
        if (at >= lines.size()) throw ParseError("battle observation: truncated message");
        return lines[at++];
    };
    Observation obs;
    int own = parse_ints(next_line(), 1, "own count")[0];
    for (int i = 0; i < own; ++i) {
        auto v = parse_ints(next_line(), 9, "own unit row");
        obs.own.push_back({v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]});
    }
    int enemy = parse_ints(next_line(), 1, "enemy count")[0];
    for (int i = 0; i < enemy; ++i) {
        auto v = parse_ints(next_line(), 7, "enemy unit row");
        obs.enemy.push_back({v[0], v[1], v[2], v[3], v[4], v[5], v[6]});
    }
    return obs;
}

std::string encode_draft_observation(const DraftObservation& obs) {
    std::ostringstream out;
    out << obs.turn << '\n';
    for (const DraftRecord& r : obs.history)
        out << r.player << ' ' << r.type << ' ' << r.x << ' ' << r.y << '\n';
    return out.str();
}

DraftObservation parse_draft_observation(const std::vector<std::string>& lines) {
    if (lines.empty()) throw ParseError("draft observation: truncated message");
    DraftObservation obs;
    obs.turn = parse_ints(lines[0], 1, "draft turn index")[0];
    for (size_t i = 1; i < lines.size(); ++i) {
        auto v = parse_ints(lines[i], 4, "draft history row");
        obs.history.push_back({v[0], v[1], v[2], v[3]});
    }
    return obs;
}

std::string encode_draft_pick(const DraftPick& pick) {
    std::ostringstream out;
    out << static_cast<int>(pick.type) << ' ' << iround(pick.pos.x) << ' ' << iround(pick.pos.y);
    return out.str();
}

DraftPick parse_draft_pick(const std::string& line) {
    auto v = parse_ints(line, 3, "draft pick");
    auto type = unit_type_from_code(v[0]);
    if (!type) throw ParseError("draft pick: unknown unit type code " + std::to_string(v[0]));
    return {*type, {double(v[1]), double(v[2])}};
}

std::string encode_match_header(const LeagueConfig& config, int player) {
    std::ostringstream out;
    out << config.league << ' ' << config.army_size << ' ' << static_cast<int>(config.unit_size)
        << ' ' << config.draft_turns << ' ' << player;
    return out.str();
}

MatchHeader parse_match_header(const std::string& line) {
    auto v = parse_ints(line, 5, "match header");
    return {v[0], v[1], v[2], v[3], v[4]};
}

}  // namespace tbw
