#include "doctest.h"
#include "tbw/complexity.hpp"

using namespace tbw;

// Expected integers below were frozen from an independent bignum
// computation of the closed forms.

TEST_CASE("draft_action_count") {
    CHECK(draft_action_count(13, 7, 4) == 364);
    CHECK(draft_action_count(26, 14, 4) == 1456);
    CHECK(draft_action_count(1920, 1080, 4) == 8294400);
    CHECK(draft_action_count(1, 1, 1) == 1);
}

TEST_CASE("battle_action_count") {
    CHECK(battle_action_count(13, 7, 30) == 2730);
    CHECK(battle_action_count(26, 14, 9) == 3276);
    CHECK(battle_action_count(1920, 1080, 30) == 62208000);
    CHECK(battle_action_count(13, 7, 0) == 0);
}

TEST_CASE("army_combination_count") {
    CHECK(army_combination_count(1920, 1080, 4, 9) == 74649600);
    CHECK(army_combination_count(13, 7, 4, 30) == 10920);
    CHECK(army_combination_count(26, 14, 4, 30) == 43680);
}

TEST_CASE("state_count") {
    CHECK(state_count(1920, 1080, 8, 100, 4, 2, 4) ==
          BigInt("5843255589769052160000000000"));
    CHECK(state_count(13, 7, 8, 100, 4, 2, 4) == BigInt("493860290560000"));
    CHECK(state_count(26, 14, 8, 100, 4, 2, 9) == BigInt("160010734141440000"));
    CHECK(state_count(1920, 1080, 8, 100, 4, 2, 30) ==
          BigInt("328683126924509184000000000000"));
    CHECK(state_count(13, 7, 8, 100, 4, 2, 0) == 0);
}

TEST_CASE("format_sci2") {
    CHECK(format_sci2(BigInt(364)) == "3.6E2");
    CHECK(format_sci2(BigInt(2730)) == "2.7E3");
    CHECK(format_sci2(BigInt(74649600)) == "7.5E7");
    CHECK(format_sci2(BigInt("5843255589769052160000000000")) == "5.8E27");
    CHECK(format_sci2(BigInt("493860290560000")) == "4.9E14");
    CHECK(format_sci2(BigInt(1)) == "1");
    CHECK(format_sci2(BigInt(95)) == "9.5E1");
    CHECK(format_sci2(BigInt(996)) == "1.0E3");  // half-up carry bumps the exponent
    CHECK(format_sci2(BigInt(8294400)) == "8.3E6");
}

TEST_CASE("tables match the published two-significant-figure values") {
    auto expect = [](TableKind kind, std::vector<std::string> cells) {
        auto table = complexity_table(kind);
        REQUIRE(table.size() == cells.size());
        for (size_t i = 0; i < cells.size(); ++i) {
            INFO("cell ", i, " (", table[i].size_label, " league ", table[i].league, ")");
            CHECK(table[i].formatted == cells[i]);
        }
    };
    expect(TableKind::Draft, {"8.3E6", "1.5E3", "3.6E2"});
    expect(TableKind::Battle, {"8.3E6", "1.9E7", "6.2E7",   //
                               "1.5E3", "3.3E3", "1.1E4",   //
                               "3.6E2", "8.2E2", "2.7E3"});
    expect(TableKind::Armies, {"1", "7.5E7", "2.5E8",   //
                               "1", "1.3E4", "4.4E4",   //
                               "1", "3.3E3", "1.1E4"});
    // The 26x14 row of the states table as published contains two cells
    // (leagues 2 and 3) that are inconsistent with the formula itself; the
    // formula values below are the correct products (1.6E17, 1.8E18).
    expect(TableKind::States, {"5.8E27", "3.0E28", "3.3E29",   //
                               "3.2E16", "1.6E17", "1.8E18",   //
                               "4.9E14", "2.5E15", "2.8E16"});
}

TEST_CASE("counts are monotone in every parameter") {
    const std::int64_t base[] = {20, 11, 8, 100, 4, 2, 9};
    BigInt v0 = state_count(base[0], base[1], base[2], base[3], base[4], base[5], base[6]);
    for (int arg = 0; arg < 7; ++arg) {
        std::int64_t bumped[7];
        for (int i = 0; i < 7; ++i) bumped[i] = base[i] + (i == arg ? 3 : 0);
        BigInt v1 = state_count(bumped[0], bumped[1], bumped[2], bumped[3], bumped[4],
                                bumped[5], bumped[6]);
        CHECK(v1 >= v0);
    }
    CHECK(draft_action_count(14, 7, 4) >= draft_action_count(13, 7, 4));
    CHECK(battle_action_count(13, 8, 30) >= battle_action_count(13, 7, 30));
    CHECK(army_combination_count(13, 7, 5, 30) >= army_combination_count(13, 7, 4, 30));
}

TEST_CASE("render_table emits every cell") {
    std::string text = render_table(TableKind::States);
    CHECK(text.find("5.8E27") != std::string::npos);
    CHECK(text.find("3.3E29") != std::string::npos);
    CHECK(text.find("4.9E14") != std::string::npos);
    CHECK(text.find("1920x1080") != std::string::npos);
}
