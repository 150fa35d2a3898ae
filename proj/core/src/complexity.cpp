#include "tbw/complexity.hpp"

#include <array>
#include <iomanip>
#include <sstream>

namespace tbw {

namespace {

struct Size {
    const char* label;
    std::int64_t H, W;
};

constexpr std::array<Size, 3> kSizes = {{{"1920x1080", 1920, 1080}, {"26x14", 26, 14}, {"13x7", 13, 7}}};
constexpr std::array<std::int64_t, 3> kArmySizes = {4, 9, 30};

}  // namespace

BigInt draft_action_count(BigInt H, BigInt W, BigInt t) { return H * W * t; }

BigInt battle_action_count(BigInt H, BigInt W, BigInt n) { return H * W * n; }

BigInt army_combination_count(BigInt H, BigInt W, BigInt t, BigInt n) { return H * W * t * n; }

BigInt state_count(BigInt H, BigInt W, BigInt d, BigInt l, BigInt t, BigInt m, BigInt n) {
    const BigInt per_unit = H * W * d * l * t * m;
    return (per_unit * H * W) * n * per_unit * n;
}

std::string format_sci2(const BigInt& value) {
    const std::string digits = value.str();
    if (value < 10) return digits;
    int exponent = static_cast<int>(digits.size()) - 1;
    // Round half-up at the second significant digit.
    int two = (digits[0] - '0') * 10 + (digits.size() > 1 ? digits[1] - '0' : 0);
    if (digits.size() > 2 && digits[2] >= '5') ++two;
    if (two >= 100) {
        two /= 10;
        ++exponent;
    }
    std::ostringstream out;
    out << (two / 10) << '.' << (two % 10) << 'E' << exponent;
    return out.str();
}

std::vector<ComplexityCell> complexity_table(TableKind kind, const ComplexityParams& p) {
    std::vector<ComplexityCell> cells;
    for (const Size& s : kSizes) {
        if (kind == TableKind::Draft) {
            BigInt v = draft_action_count(s.H, s.W, p.t);
            cells.push_back({s.label, 0, v, format_sci2(v)});
            continue;
        }
        for (int league = 1; league <= 3; ++league) {
            const std::int64_t n = kArmySizes[league - 1];
            BigInt v;
            switch (kind) {
                case TableKind::Battle:
                    v = battle_action_count(s.H, s.W, n);
                    break;
                case TableKind::Armies:
                    // League 1 has no draft: a single fixed composition.
                    v = league == 1 ? BigInt(1) : army_combination_count(s.H, s.W, p.t, n);
                    break;
                case TableKind::States:
                    v = state_count(s.H, s.W, p.d, p.l, p.t, p.m, n);
                    break;
                case TableKind::Draft:
                    break;
            }
            cells.push_back({s.label, league, v, format_sci2(v)});
        }
    }
    return cells;
}

std::string render_table(TableKind kind, const ComplexityParams& p) {
    static const char* kTitles[] = {
        "Draft-phase actions (H*W*t)",
        "Battle-phase actions (H*W*n)",
        "Army combinations (H*W*t*n; league 1 is fixed)",
        "Battle-phase states ((H*W*d*l*t*m*H*W)*n*(H*W*d*l*t*m)*n)",
    };
    auto cells = complexity_table(kind, p);
    std::ostringstream out;
    out << kTitles[static_cast<int>(kind)] << '\n';
    out << std::left << std::setw(14) << "size";
    if (kind == TableKind::Draft)
        out << std::setw(10) << "actions";
    else
        out << std::setw(10) << "league1" << std::setw(10) << "league2" << std::setw(10)
            << "league3";
    out << '\n';
    const char* current = nullptr;
    for (const auto& c : cells) {
        if (!current || std::string_view(current) != c.size_label) {
            if (current) out << '\n';
            out << std::setw(14) << c.size_label;
            current = c.size_label.c_str();
        }
        out << std::setw(10) << c.formatted;
    }
    out << '\n';
    return out.str();
}

}  // namespace tbw
