#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "tbw/draft.hpp"

using namespace tbw;

namespace {

GameState draft_state(int league) { return initial_state(league_config(league)); }

GameState run_full_draft(int league) {
    GameState s = draft_state(league);
    while (s.phase == Phase::Draft) {
        DraftPick p0 = default_pick(s, 0);
        DraftPick p1 = default_pick(s, 1);
        s = apply_draft_turn(s, p0, p1);
    }
    return s;
}

}  // namespace

TEST_CASE("deployment zones are the outer quarters") {
    const LeagueConfig& l3 = league_config(3);
    DeploymentZone z0 = deployment_zone(l3, 0);
    CHECK(z0.center_y_min == 810 + 37.5);
    CHECK(z0.center_y_max == 1080 - 37.5);
    DeploymentZone z1 = deployment_zone(l3, 1);
    CHECK(z1.center_y_min == 37.5);
    CHECK(z1.center_y_max == 270 - 37.5);
}

TEST_CASE("legal_pick") {
    GameState s = draft_state(2);
    SUBCASE("own zone, empty field") {
        CHECK(legal_pick(s, 0, {UnitType::Swordsmen, {960, 1000}}));
    }
    SUBCASE("enemy zone is illegal") {
        CHECK_FALSE(legal_pick(s, 0, {UnitType::Swordsmen, {960, 200}}));
        CHECK_FALSE(legal_pick(s, 1, {UnitType::Swordsmen, {960, 1000}}));
    }
    SUBCASE("midfield is illegal for both") {
        CHECK_FALSE(legal_pick(s, 0, {UnitType::Swordsmen, {960, 540}}));
        CHECK_FALSE(legal_pick(s, 1, {UnitType::Swordsmen, {960, 540}}));
    }
    SUBCASE("square must fit inside the zone") {
        CHECK_FALSE(legal_pick(s, 0, {UnitType::Swordsmen, {960, 1070}}));
        CHECK(legal_pick(s, 0, {UnitType::Swordsmen, {960, 1005}}));
    }
    SUBCASE("overlapping an own unit is illegal, touching is fine") {
        s = apply_draft_turn(s, {UnitType::Knights, {960, 950}}, {UnitType::Knights, {960, 135}});
        CHECK_FALSE(legal_pick(s, 0, {UnitType::Archers, {1000, 950}}));
        CHECK(legal_pick(s, 0, {UnitType::Archers, {1110, 950}}));  // exactly touching
    }
    SUBCASE("any type mix is allowed") {
        GameState t = draft_state(2);
        for (int i = 0; i < 5; ++i) {
            DraftPick pick{UnitType::Archers, {200.0 + 160 * i, 950}};
            CHECK(legal_pick(t, 0, pick));
            t = apply_draft_turn(t, pick, default_pick(t, 1));
        }
    }
}

TEST_CASE("apply_draft_turn") {
    SUBCASE("league 3 creates the generals on the first turn only") {
        GameState s = draft_state(3);
        s = apply_draft_turn(s, default_pick(s, 0), default_pick(s, 1));
        CHECK(s.find_unit(0, 1)->is_general);
        CHECK(s.find_unit(1, 1)->is_general);
        s = apply_draft_turn(s, default_pick(s, 0), default_pick(s, 1));
        CHECK_FALSE(s.find_unit(0, 2)->is_general);
    }
    SUBCASE("league 2 has no generals") {
        GameState s = draft_state(2);
        s = apply_draft_turn(s, default_pick(s, 0), default_pick(s, 1));
        CHECK_FALSE(s.find_unit(0, 1)->is_general);
    }
    SUBCASE("the draft flips to battle after the last turn") {
        GameState s = run_full_draft(2);
        CHECK(s.phase == Phase::Battle);
        CHECK(s.turn == 9);
        CHECK(s.armies[0].size() == 9);
        CHECK(s.armies[1].size() == 9);
    }
    SUBCASE("an illegal pick is replaced by the default slot pick") {
        GameState s = draft_state(2);
        StepLog log;
        s = apply_draft_turn(s, {UnitType::Knights, {-50, -50}}, default_pick(s, 1), &log);
        CHECK(s.armies[0].size() == 1);
        CHECK(s.find_unit(0, 1)->type == predefined_army(2, 0)[0].type);
        bool warned = false;
        for (const Event& e : log.events)
            if (e.kind == Event::Kind::Warning) warned = true;
        CHECK(warned);
    }
    SUBCASE("rejected outside the draft phase") {
        GameState s = league1_opening();
        CHECK_THROWS(apply_draft_turn(s, {}, {}));
    }
}

TEST_CASE("league1_opening") {
    GameState s = league1_opening();
    CHECK(s.phase == Phase::Battle);
    CHECK(s.turn == 0);
    SUBCASE("one unit of each type per army") {
        for (int p = 0; p < 2; ++p) {
            REQUIRE(s.armies[p].size() == 4);
            std::set<UnitType> types;
            for (const Unit& u : s.armies[p]) types.insert(u.type);
            CHECK(types.size() == 4);
        }
    }
    SUBCASE("armies are mirror images") {
        for (const Unit& u : s.armies[0]) {
            const Unit* m = s.find_unit(1, u.id);
            REQUIRE(m != nullptr);
            CHECK(m->type == u.type);
            CHECK(m->pos.x == 1920 - u.pos.x);
            CHECK(m->pos.y == 1080 - u.pos.y);
        }
    }
    SUBCASE("no general in league 1") {
        for (int p = 0; p < 2; ++p)
            for (const Unit& u : s.armies[p]) CHECK_FALSE(u.is_general);
    }
    SUBCASE("the front rows stay out of archer range") {
        // static openings must not trade arrows (stay-static mirror is a draw)
        for (const Unit& a : s.armies[0])
            for (const Unit& b : s.armies[1]) CHECK(distance(a.pos, b.pos) > 450.0);
    }
}

TEST_CASE("predefined armies") {
    for (int league : {2, 3}) {
        for (int player : {0, 1}) {
            const auto& army = predefined_army(league, player);
            const LeagueConfig& config = league_config(league);
            REQUIRE(static_cast<int>(army.size()) == config.army_size);
            // every slot legal when placed in order
            GameState s = draft_state(league);
            for (const DraftPick& pick : army) {
                INFO("league ", league, " player ", player);
                CHECK(legal_pick(s, player, pick));
                DraftPick other = default_pick(s, 1 - player);
                s = player == 0 ? apply_draft_turn(s, pick, other)
                                : apply_draft_turn(s, other, pick);
            }
        }
    }
    SUBCASE("league 3 composition and roles") {
        const auto& army = predefined_army(3, 0);
        std::map<UnitType, int> counts;
        for (const DraftPick& p : army) counts[p.type]++;
        CHECK(counts[UnitType::Knights] == 8);
        CHECK(counts[UnitType::Spearmen] == 8);
        CHECK(counts[UnitType::Swordsmen] == 7);
        CHECK(counts[UnitType::Archers] == 7);
        CHECK(army[0].type == UnitType::Swordsmen);  // the general leads the draft
        // archers sit behind every melee unit (player 0 rear = larger y)
        double melee_max_y = 0, archer_min_y = 1e9;
        for (const DraftPick& p : army) {
            if (p.type == UnitType::Archers)
                archer_min_y = std::min(archer_min_y, p.pos.y);
            else
                melee_max_y = std::max(melee_max_y, p.pos.y);
        }
        CHECK(archer_min_y > melee_max_y);
    }
}

TEST_CASE("completed drafts are well-formed") {
    for (int league : {2, 3}) {
        GameState s = run_full_draft(league);
        const LeagueConfig& config = league_config(league);
        for (int p = 0; p < 2; ++p) {
            REQUIRE(static_cast<int>(s.armies[p].size()) == config.army_size);
            std::set<int> ids;
            for (const Unit& u : s.armies[p]) ids.insert(u.id);
            CHECK(static_cast<int>(ids.size()) == config.army_size);
            CHECK(*ids.begin() == 1);
            CHECK(*ids.rbegin() == config.army_size);
            DeploymentZone z = deployment_zone(config, p);
            for (const Unit& u : s.armies[p]) {
                CHECK(u.pos.y >= z.center_y_min);
                CHECK(u.pos.y <= z.center_y_max);
                for (const Unit& v : s.armies[p])
                    if (u.id < v.id)
                        CHECK_FALSE(squares_overlap(u.pos, v.pos, config.unit_size));
            }
        }
    }
}

TEST_CASE("nudge_to_legal finds breathing room on whole pixels") {
    const LeagueConfig& config = league_config(3);
    std::vector<Vec2> placed{{960, 848}};
    Vec2 spot = nudge_to_legal(config, 0, {960, 848}, placed);
    CHECK(spot.x == iround(spot.x));
    CHECK(spot.y == iround(spot.y));
    CHECK(legal_placement(config, 0, spot, placed));
    CHECK(distance(spot, placed[0]) >= 75.0);
}
