#pragma once

#include <algorithm>

#include "tbw/agents.hpp"

namespace tbw {

/// Shared draft behaviour of the three simple agents: walk through the
/// predefined army slot by slot.
class PredefinedDraftAgent : public Agent {
public:
    DraftPick draft_pick(const DraftObservation& obs, Deadline deadline) override;
};

class StayStaticAgent final : public PredefinedDraftAgent {
public:
    std::string_view name() const override { return "ss"; }
    std::vector<Order> act(const Observation& obs, Deadline deadline) override;
};

class AlwaysForwardAgent final : public PredefinedDraftAgent {
public:
    explicit AlwaysForwardAgent(int forward_step = 200) : forward_step_(forward_step) {}
    std::string_view name() const override { return "af"; }
    std::vector<Order> act(const Observation& obs, Deadline deadline) override;

private:
    int forward_step_;
};

class RandomAgent final : public PredefinedDraftAgent {
public:
    explicit RandomAgent(double reorder_probability = 0.5, std::uint64_t seed_override = 0)
        : seed_override_(seed_override), reorder_probability_(reorder_probability) {}
    std::string_view name() const override { return "rnd"; }
    void start_match(const MatchContext& ctx) override;
    std::vector<Order> act(const Observation& obs, Deadline deadline) override;

private:
    std::uint64_t seed_override_;
    double reorder_probability_;
    Rng rng_;
};

class HeuristicAgent final : public Agent {
public:
    std::string_view name() const override { return "heuristic"; }
    DraftPick draft_pick(const DraftObservation& obs, Deadline deadline) override;
    std::vector<Order> act(const Observation& obs, Deadline deadline) override;
};

}  // namespace tbw
