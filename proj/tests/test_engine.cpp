#include "doctest.h"
#include "tbw/draft.hpp"
#include "tbw/engine.hpp"
#include "tbw/replay.hpp"
#include "tbw/rng.hpp"

using namespace tbw;

namespace {

Unit mk(int id, int owner, UnitType type, double x, double y) {
    Unit u;
    u.id = id;
    u.owner = owner;
    u.type = type;
    u.pos = {x, y};
    u.facing = owner == 0 ? Direction::N : Direction::S;
    u.life = attributes(type).health_points;
    return u;
}

GameState battle_state(int league, std::vector<Unit> p0, std::vector<Unit> p1) {
    GameState s;
    s.config = league_config(league);
    s.phase = Phase::Battle;
    s.turn = s.config.draft_turns;
    s.armies[0] = std::move(p0);
    s.armies[1] = std::move(p1);
    recompute_auras(s);
    return s;
}

const std::vector<Order> kNoOrders;

}  // namespace

TEST_CASE("apply_orders") {
    GameState s = battle_state(1, {mk(5, 0, UnitType::Knights, 960, 900)},
                               {mk(1, 1, UnitType::Archers, 960, 108)});

    SUBCASE("a stop order clears the target") {
        s.armies[0][0].target = Vec2{100, 100};
        StepLog log;
        GameState next = apply_orders(s, 0, std::vector<Order>{{5, 0, 0}}, &log);
        CHECK_FALSE(next.find_unit(0, 5)->target.has_value());
        CHECK_FALSE(next.find_unit(0, 5)->moving());
        CHECK(log.events.empty());
    }
    SUBCASE("empty order list changes nothing") {
        GameState next = apply_orders(s, 0, kNoOrders);
        CHECK(state_units_json(next) == state_units_json(s));
    }
    SUBCASE("unknown unit id is skipped with a warning") {
        StepLog log;
        GameState next = apply_orders(s, 0, std::vector<Order>{{99, 10, 10}}, &log);
        CHECK(state_units_json(next) == state_units_json(s));
        REQUIRE(log.events.size() == 1);
        CHECK(log.events[0].kind == Event::Kind::Warning);
    }
    SUBCASE("later duplicate orders override earlier ones") {
        GameState next =
            apply_orders(s, 0, std::vector<Order>{{5, 100, 100}, {5, -200, 0}});
        CHECK(*next.find_unit(0, 5)->target == Vec2{760, 900});
    }
    SUBCASE("orders for engaged units are silently ignored") {
        s.armies[0][0].engaged_with = 1;
        StepLog log;
        GameState next = apply_orders(s, 0, std::vector<Order>{{5, 100, 100}}, &log);
        CHECK_FALSE(next.find_unit(0, 5)->target.has_value());
        CHECK(log.events.empty());
    }
    SUBCASE("targets are clamped so the square stays inside") {
        GameState next = apply_orders(s, 0, std::vector<Order>{{5, 9999, 9999}});
        CHECK(*next.find_unit(0, 5)->target == Vec2{1845, 75});
    }
    SUBCASE("rejected outside battle phase") {
        s.phase = Phase::Finished;
        CHECK_THROWS(apply_orders(s, 0, kNoOrders));
    }
}

TEST_CASE("move_unit") {
    SUBCASE("knight covers its speed along the line") {
        GameState s = battle_state(1, {mk(1, 0, UnitType::Knights, 960, 900)},
                                   {mk(1, 1, UnitType::Archers, 100, 100)});
        s.armies[0][0].target = Vec2{960, 100};
        move_unit(s, 0, 1);
        CHECK(s.find_unit(0, 1)->pos == Vec2{960, 860});
        CHECK(s.find_unit(0, 1)->moving());
    }
    SUBCASE("short hop lands exactly on the target") {
        GameState s = battle_state(1, {mk(1, 0, UnitType::Swordsmen, 960, 900)},
                                   {mk(1, 1, UnitType::Archers, 100, 100)});
        s.armies[0][0].target = Vec2{960, 890};  // 10 < speed 15
        MoveResult r = move_unit(s, 0, 1);
        CHECK(r.reached_target);
        CHECK(s.find_unit(0, 1)->pos == Vec2{960, 890});
        CHECK_FALSE(s.find_unit(0, 1)->moving());
    }
    SUBCASE("friendly at contact range blocks the whole tick") {
        GameState s = battle_state(1,
                                   {mk(1, 0, UnitType::Swordsmen, 960, 900),
                                    mk(2, 0, UnitType::Spearmen, 960, 750)},
                                   {mk(1, 1, UnitType::Archers, 100, 100)});
        s.armies[0][0].target = Vec2{960, 500};
        MoveResult r = move_unit(s, 0, 1);
        CHECK(r.blocked_by_friendly);
        CHECK(s.find_unit(0, 1)->pos == Vec2{960, 900});
        CHECK(s.find_unit(0, 1)->target == Vec2{960, 500});  // retained
    }
    SUBCASE("enemy on the path halts the mover in contact and engages both") {
        GameState s = battle_state(1, {mk(1, 0, UnitType::Knights, 960, 900)},
                                   {mk(3, 1, UnitType::Swordsmen, 960, 740)});
        s.armies[0][0].target = Vec2{960, 100};
        MoveResult r = move_unit(s, 0, 1);
        CHECK(r.contacted_enemy == 3);
        CHECK(s.find_unit(0, 1)->pos == Vec2{960, 890});  // squares touching at 150
        CHECK(s.find_unit(0, 1)->engaged_with == 3);
        CHECK(s.find_unit(1, 3)->engaged_with == 1);
    }
    SUBCASE("a shallow graze past a touching neighbour does not wedge") {
        // neighbour exactly touching on the right; the long diagonal line
        // clips it for a few pixels only
        GameState s = battle_state(3,
                                   {mk(1, 0, UnitType::Knights, 960, 500),
                                    mk(2, 0, UnitType::Knights, 1035, 430)},
                                   {mk(1, 1, UnitType::Archers, 100, 100)});
        s.armies[0][0].target = Vec2{968, 1000};
        MoveResult r = move_unit(s, 0, 1);
        CHECK(r.moved);
        CHECK(s.find_unit(0, 1)->pos.y > 525);
        CHECK_FALSE(squares_overlap(s.find_unit(0, 1)->pos, s.find_unit(0, 2)->pos, 75));
    }
}

TEST_CASE("resolve_charge") {
    Unit knight = mk(1, 0, UnitType::Knights, 0, 0);
    SUBCASE("knight charges swordsman for 75") {
        Unit sword = mk(1, 1, UnitType::Swordsmen, 0, 0);
        CHECK(resolve_charge(knight, sword) == 75);
        CHECK(sword.life == 175);
        CHECK(knight.charge_spent);
    }
    SUBCASE("knight charge bounces off spearmen") {
        Unit spear = mk(1, 1, UnitType::Spearmen, 0, 0);
        CHECK(resolve_charge(knight, spear) == 0);
        CHECK(spear.life == 250);
        CHECK(knight.charge_spent);  // still consumed
    }
    SUBCASE("spent charge deals nothing") {
        Unit sword = mk(1, 1, UnitType::Swordsmen, 0, 0);
        knight.charge_spent = true;
        CHECK(resolve_charge(knight, sword) == 0);
        CHECK(sword.life == 250);
    }
}

TEST_CASE("melee_tick_damage") {
    Unit sword = mk(1, 0, UnitType::Swordsmen, 0, 0);
    Unit spear = mk(2, 1, UnitType::Spearmen, 0, 0);
    Unit knight = mk(3, 1, UnitType::Knights, 0, 0);
    Unit archer = mk(4, 0, UnitType::Archers, 0, 0);
    CHECK(melee_tick_damage(sword, spear) == 20);   // 20*1.5 - 20/2
    CHECK(melee_tick_damage(spear, sword) == 10);   // 15 - 10/2
    CHECK(melee_tick_damage(archer, sword) == 5);   // 10 - 10/2
    CHECK(melee_tick_damage(spear, knight) == 17);  // 15*1.5 - 12/2 = 16.5 half-up
    CHECK(melee_tick_damage(knight, archer) == 10); // 12 - 5/2 = 9.5 half-up
    // the floor of 1
    Unit weak = mk(5, 0, UnitType::Knights, 0, 0);
    CHECK(melee_tick_damage(weak, spear) >= 1);  // 12 - 20/2 = 2, fine
}

TEST_CASE("resolve_archery") {
    SUBCASE("archer hits the nearest enemy in range") {
        GameState s = battle_state(1, {mk(1, 0, UnitType::Archers, 500, 900)},
                                   {mk(1, 1, UnitType::Swordsmen, 500, 500)});
        StepLog log;
        resolve_archery(s, &log);
        REQUIRE(log.events.size() == 1);
        CHECK(log.events[0].kind == Event::Kind::Arrow);
        CHECK(log.events[0].damage == 15);  // 20 - 10/2
        CHECK(s.find_unit(1, 1)->life == 235);
    }
    SUBCASE("no enemy within 450 px means no volley") {
        GameState s = battle_state(1, {mk(1, 0, UnitType::Archers, 500, 900)},
                                   {mk(1, 1, UnitType::Swordsmen, 500, 449)});
        StepLog log;
        resolve_archery(s, &log);
        CHECK(log.events.empty());
    }
    SUBCASE("friendlies near the struck target catch half their own damage") {
        GameState s = battle_state(1,
                                   {mk(1, 0, UnitType::Archers, 500, 900),
                                    mk(2, 0, UnitType::Swordsmen, 530, 520)},
                                   {mk(1, 1, UnitType::Swordsmen, 500, 500)});
        // friendly swordsman 50 px from the target center
        StepLog log;
        resolve_archery(s, &log);
        REQUIRE(log.events.size() == 2);
        CHECK(log.events[1].kind == Event::Kind::FriendlyFire);
        CHECK(log.events[1].damage == 8);  // round(15/2)
        CHECK(s.find_unit(0, 2)->life == 242);
    }
    SUBCASE("ties break to the lowest enemy id") {
        GameState s = battle_state(1, {mk(1, 0, UnitType::Archers, 500, 900)},
                                   {mk(4, 1, UnitType::Swordsmen, 600, 700),
                                    mk(7, 1, UnitType::Swordsmen, 400, 700)});
        StepLog log;
        resolve_archery(s, &log);
        REQUIRE(log.events.size() == 1);
        CHECK(log.events[0].victim == 4);
    }
}

TEST_CASE("aura_multiplier") {
    SUBCASE("league 3 buffs within 150 px of a living general") {
        Unit general = mk(1, 0, UnitType::Swordsmen, 500, 500);
        general.is_general = true;
        GameState s = battle_state(3, {general, mk(2, 0, UnitType::Swordsmen, 600, 500)},
                                   {mk(1, 1, UnitType::Knights, 1500, 500)});
        CHECK(aura_multiplier(*s.find_unit(0, 2), s) == 1.25);
        CHECK(aura_multiplier(*s.find_unit(0, 1), s) == 1.25);  // buffs itself
        CHECK(aura_multiplier(*s.find_unit(1, 1), s) == 0.75);  // their general is gone
        CHECK(s.find_unit(0, 2)->eff_attack() == 25.0);
    }
    SUBCASE("out of range means 1.0") {
        Unit general = mk(1, 0, UnitType::Swordsmen, 500, 500);
        general.is_general = true;
        GameState s = battle_state(3, {general, mk(2, 0, UnitType::Swordsmen, 800, 500)},
                                   {mk(1, 1, UnitType::Knights, 1500, 500)});
        CHECK(aura_multiplier(*s.find_unit(0, 2), s) == 1.0);
    }
    SUBCASE("dead general costs 0.75") {
        GameState s = battle_state(3, {mk(2, 0, UnitType::Swordsmen, 500, 500)},
                                   {mk(1, 1, UnitType::Knights, 1500, 500)});
        CHECK(aura_multiplier(*s.find_unit(0, 2), s) == 0.75);
        CHECK(s.find_unit(0, 2)->eff_attack() == 15.0);
    }
    SUBCASE("leagues without generals always 1.0") {
        GameState s = battle_state(1, {mk(1, 0, UnitType::Swordsmen, 500, 500)},
                                   {mk(1, 1, UnitType::Knights, 600, 500)});
        CHECK(aura_multiplier(*s.find_unit(0, 1), s) == 1.0);
    }
}

TEST_CASE("check_terminal") {
    GameState s = battle_state(1, {mk(1, 0, UnitType::Swordsmen, 300, 900)},
                               {mk(1, 1, UnitType::Swordsmen, 300, 200),
                                mk(2, 1, UnitType::Archers, 600, 200),
                                mk(3, 1, UnitType::Knights, 900, 200)});
    SUBCASE("live battle has no verdict") { CHECK_FALSE(check_terminal(s).has_value()); }
    SUBCASE("an empty army loses") {
        s.armies[0].clear();
        auto r = check_terminal(s);
        REQUIRE(r.has_value());
        CHECK(r->winner == 1);
        CHECK(r->reason == GameResult::Reason::Elimination);
    }
    SUBCASE("both empty is a draw") {
        s.armies[0].clear();
        s.armies[1].clear();
        auto r = check_terminal(s);
        REQUIRE(r.has_value());
        CHECK_FALSE(r->winner.has_value());
    }
    SUBCASE("turn limit counts the living") {
        s.turn = 400;
        auto r = check_terminal(s);
        REQUIRE(r.has_value());
        CHECK(r->winner == 1);
        CHECK(r->reason == GameResult::Reason::TurnLimit);
    }
    SUBCASE("turn limit with equal counts is a draw") {
        s.armies[1].resize(1);
        s.turn = 400;
        auto r = check_terminal(s);
        REQUIRE(r.has_value());
        CHECK_FALSE(r->winner.has_value());
    }
}

TEST_CASE("step") {
    SUBCASE("knight advances 40 px per turn toward a far target") {
        GameState s = battle_state(1, {mk(1, 0, UnitType::Knights, 960, 900)},
                                   {mk(1, 1, UnitType::Archers, 100, 100)});
        GameState next = step(s, std::vector<Order>{{1, 0, 800}}, kNoOrders);
        CHECK(next.find_unit(0, 1)->pos == Vec2{960, 860});
        CHECK(next.turn == s.turn + 1);
    }
    SUBCASE("stepping a finished state throws") {
        GameState s = battle_state(1, {}, {});
        s.phase = Phase::Finished;
        CHECK_THROWS(step(s, kNoOrders, kNoOrders));
    }
    SUBCASE("two empty armies draw at the terminal check") {
        GameState s = battle_state(1, {}, {});
        GameState next = step(s, kNoOrders, kNoOrders);
        CHECK(next.phase == Phase::Finished);
        REQUIRE(next.result.has_value());
        CHECK_FALSE(next.result->winner.has_value());
    }
    SUBCASE("turn 399 with equal armies alive ends in a turn-limit draw") {
        GameState s = battle_state(1, {mk(1, 0, UnitType::Swordsmen, 300, 900)},
                                   {mk(1, 1, UnitType::Swordsmen, 300, 200)});
        s.turn = 399;
        GameState next = step(s, kNoOrders, kNoOrders);
        CHECK(next.phase == Phase::Finished);
        CHECK(next.result->reason == GameResult::Reason::TurnLimit);
        CHECK_FALSE(next.result->winner.has_value());
    }
    SUBCASE("deterministic: identical inputs give byte-identical states") {
        GameState s = league1_opening();
        std::vector<Order> o0{{1, 50, 120}, {3, -30, 200}};
        std::vector<Order> o1{{2, 10, 300}};
        GameState a = step(s, o0, o1);
        GameState b = step(s, o0, o1);
        CHECK(state_units_json(a) == state_units_json(b));
    }
    SUBCASE("facing follows movement") {
        GameState s = battle_state(1, {mk(1, 0, UnitType::Knights, 960, 900)},
                                   {mk(1, 1, UnitType::Archers, 100, 100)});
        GameState next = step(s, std::vector<Order>{{1, 300, 0}}, kNoOrders);
        CHECK(next.find_unit(0, 1)->facing == Direction::E);
    }
    SUBCASE("engaged melee exchanges simultaneously from pre-tick life") {
        GameState s = battle_state(1, {mk(1, 0, UnitType::Swordsmen, 500, 575)},
                                   {mk(1, 1, UnitType::Spearmen, 500, 425)});
        s.armies[0][0].engaged_with = 1;
        s.armies[1][0].engaged_with = 1;
        StepLog log;
        GameState next = step(s, kNoOrders, kNoOrders, &log);
        CHECK(next.find_unit(1, 1)->life == 230);  // took 20
        CHECK(next.find_unit(0, 1)->life == 240);  // took 10
    }
}

TEST_CASE("engagement lifecycle across steps") {
    // knight reaches the archer, charges it dead the next tick, disengages
    GameState s = battle_state(1, {mk(1, 0, UnitType::Knights, 500, 700)},
                               {mk(1, 1, UnitType::Archers, 500, 460),
                                mk(2, 1, UnitType::Swordsmen, 1500, 200)});
    StepLog log;
    GameState a = step(s, std::vector<Order>{{1, 0, 500}}, kNoOrders, &log);
    // 240 gap - 150 contact = 90 > 40: no contact yet, arrows fly though
    CHECK_FALSE(a.find_unit(0, 1)->engaged_with.has_value());
    GameState b = step(a, kNoOrders, kNoOrders, &log);   // moves 40, still short
    GameState c = step(b, kNoOrders, kNoOrders, &log);   // contact at 150 gap
    REQUIRE(c.find_unit(0, 1) != nullptr);
    // the charge one-shots the archer (100 charge vs 100 hp) and the knight
    // disengages the same turn the victim is removed
    CHECK(c.find_unit(1, 1) == nullptr);
    CHECK_FALSE(c.find_unit(0, 1)->engaged_with.has_value());
    CHECK_FALSE(c.find_unit(0, 1)->charge_spent);  // charge back after disengage
}

TEST_CASE("engine invariants over random battles") {
    // Seeded random-order battles from the league-1 opening; every step must
    // preserve bounds, non-overlap, monotone life and unit conservation.
    Rng rng(20240811);
    for (int game = 0; game < 3; ++game) {
        GameState s = league1_opening();
        for (int t = 0; t < 120 && s.phase == Phase::Battle; ++t) {
            std::vector<Order> orders[2];
            for (int p = 0; p < 2; ++p) {
                for (const Unit& u : s.armies[p]) {
                    if (rng.chance(0.5)) continue;
                    orders[p].push_back({u.id, rng.uniform_int(-800, 800),
                                         rng.uniform_int(-800, 800)});
                }
            }
            GameState next = step(s, orders[0], orders[1]);
            for (int p = 0; p < 2; ++p) {
                CHECK(next.armies[p].size() <= s.armies[p].size());
                for (const Unit& u : next.armies[p]) {
                    CHECK(u.life >= 1);
                    CHECK(u.pos.x >= 75.0);
                    CHECK(u.pos.x <= 1845.0);
                    CHECK(u.pos.y >= 75.0);
                    CHECK(u.pos.y <= 1005.0);
                    const Unit* before = s.find_unit(p, u.id);
                    REQUIRE(before != nullptr);
                    CHECK(u.life <= before->life);
                    for (const Unit& v : next.armies[p])
                        if (u.id < v.id)
                            CHECK_FALSE(squares_overlap(u.pos, v.pos, next.config.unit_size));
                }
            }
            CHECK(next.turn == s.turn + 1);
            s = next;
        }
    }
}
