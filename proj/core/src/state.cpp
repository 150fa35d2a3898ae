#include "tbw/state.hpp"

namespace tbw {

const Unit* GameState::find_unit(int player, int id) const {
    for (const Unit& u : armies[player])
        if (u.id == id) return &u;
    return nullptr;
}

Unit* GameState::find_unit(int player, int id) {
    for (Unit& u : armies[player])
        if (u.id == id) return &u;
    return nullptr;
}

}  // namespace tbw
