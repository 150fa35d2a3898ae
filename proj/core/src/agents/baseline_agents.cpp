#include "tbw/agents_impl.hpp"

namespace tbw {

DraftPick PredefinedDraftAgent::draft_pick(const DraftObservation& obs, Deadline) {
    int slot = 0;
    for (const DraftRecord& r : obs.history)
        if (r.player == ctx_.player) ++slot;
    const auto& army = predefined_army(ctx_.config.league, ctx_.player);
    return army.at(std::min<size_t>(slot, army.size() - 1));
}

std::vector<Order> StayStaticAgent::act(const Observation&, Deadline) {
    return {};  // stand and fight whatever comes
}

std::vector<Order> AlwaysForwardAgent::act(const Observation& obs, Deadline) {
    std::vector<Order> orders;
    for (const OwnUnitRow& u : obs.own) {
        if (likely_engaged(u, obs, ctx_.config)) continue;
        orders.push_back({u.id, 0, forward_step_});
    }
    return orders;
}

void RandomAgent::start_match(const MatchContext& ctx) {
    Agent::start_match(ctx);
    rng_ = Rng(seed_override_ ? seed_override_ : derive_seed(ctx.seed, 0xA11D0ULL, ctx.player));
}

std::vector<Order> RandomAgent::act(const Observation& obs, Deadline) {
    std::vector<Order> orders;
    const int w = static_cast<int>(ctx_.config.field_width);
    const int h = static_cast<int>(ctx_.config.field_height);
    for (const OwnUnitRow& u : obs.own) {
        if (!rng_.chance(reorder_probability_)) continue;
        const int tx = rng_.uniform_int(0, w - 1);
        const int ty = rng_.uniform_int(0, h - 1);
        const int ddx = tx - u.x;
        const int ddy = ty - u.y;
        if (ctx_.player == 0)
            orders.push_back({u.id, ddx, -ddy});
        else
            orders.push_back({u.id, -ddx, ddy});
    }
    return orders;
}

DraftPick HeuristicAgent::draft_pick(const DraftObservation& obs, Deadline) {
    return heuristic_draft_pick(obs, ctx_.config, ctx_.player);
}

std::vector<Order> HeuristicAgent::act(const Observation& obs, Deadline) {
    std::vector<int> targets;
    targets.reserve(obs.own.size());
    for (const OwnUnitRow& u : obs.own) targets.push_back(heuristic_target(u, obs, ctx_.config));
    return orders_toward_targets(obs, ctx_.config, ctx_.player, targets);
}

}  // namespace tbw
