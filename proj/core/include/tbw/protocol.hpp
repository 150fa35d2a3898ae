#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tbw/draft.hpp"
#include "tbw/engine.hpp"
#include "tbw/observation.hpp"

namespace tbw {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// "ID dx dy; ID dx dy; ..." — semicolon-separated integer triples,
/// whitespace-tolerant, empty fragments ignored, empty string = no orders.
/// Throws ParseError naming the offending fragment.
std::vector<Order> parse_action_string(const std::string& text);

std::string render_action_string(std::span<const Order> orders);

/// Line 1: own unit count; one line per own unit
/// "ID x y direction life type moving targetX targetY"; then the enemy
/// count and one 7-field line per enemy (no target fields).
std::string encode_battle_observation(const Observation& obs);
Observation parse_battle_observation(const std::vector<std::string>& lines);

/// Line 1: the 0-based draft turn index; then one "player type x y" line
/// per revealed pick (2 per completed turn, player 0 first).
std::string encode_draft_observation(const DraftObservation& obs);
DraftObservation parse_draft_observation(const std::vector<std::string>& lines);

/// Bot reply for a draft turn: "type x y".
std::string encode_draft_pick(const DraftPick& pick);
DraftPick parse_draft_pick(const std::string& line);

/// One-line match handshake sent when a bot starts:
/// "league n s draft_turns player".
struct MatchHeader {
    int league = 1;
    int army_size = 4;
    int unit_size = 150;
    int draft_turns = 0;
    int player = 0;
};
std::string encode_match_header(const LeagueConfig& config, int player);
MatchHeader parse_match_header(const std::string& line);

}  // namespace tbw
