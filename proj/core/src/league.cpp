#include "tbw/league.hpp"

#include <array>
#include <stdexcept>

namespace tbw {

const LeagueConfig& league_config(int league) {
    static const std::array<LeagueConfig, 3> kLeagues = {{
        {1, 4, 150.0, 0, false},
        {2, 9, 150.0, 9, false},
        {3, 30, 75.0, 30, true},
    }};
    if (league < 1 || league > 3) throw std::invalid_argument("league must be 1, 2 or 3");
    return kLeagues[league - 1];
}

}  // namespace tbw
