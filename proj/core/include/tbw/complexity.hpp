#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace tbw {

using BigInt = boost::multiprecision::cpp_int;

/// Symbols of the complexity accounting: battlefield cells (or pixels)
/// H×W, t unit types, d facing octants, l health levels, m moving states,
/// n units per army.
struct ComplexityParams {
    std::int64_t t = 4;
    std::int64_t d = 8;
    std::int64_t l = 100;
    std::int64_t m = 2;
};

/// Placement choices for one draft turn: H·W·t.
BigInt draft_action_count(BigInt H, BigInt W, BigInt t);

/// Movement choices in one battle turn: H·W·n.
BigInt battle_action_count(BigInt H, BigInt W, BigInt n);

/// Army compositions reachable through a draft: H·W·t·n.
BigInt army_combination_count(BigInt H, BigInt W, BigInt t, BigInt n);

/// State count with hidden enemy destinations:
/// (H·W·d·l·t·m·H·W)·n·(H·W·d·l·t·m)·n — the second factor has no target
/// term because enemy targets are unobservable.
BigInt state_count(BigInt H, BigInt W, BigInt d, BigInt l, BigInt t, BigInt m, BigInt n);

/// Two-significant-figure scientific notation ("8.3E6"); values below ten
/// print as plain digits.
std::string format_sci2(const BigInt& value);

enum class TableKind { Draft, Battle, Armies, States };

struct ComplexityCell {
    std::string size_label;  // "1920x1080", "26x14", "13x7"
    int league = 0;          // 0 for the draft table (league-independent)
    BigInt value;
    std::string formatted;
};

/// All cells of one table, row-major over the three battlefield sizes.
/// The armies table reports 1 for league 1 (no draft, fixed opening army).
std::vector<ComplexityCell> complexity_table(TableKind kind, const ComplexityParams& p = {});

std::string render_table(TableKind kind, const ComplexityParams& p = {});

}  // namespace tbw
