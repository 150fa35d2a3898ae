#include <map>
#include <stdexcept>

#include "tbw/agents_impl.hpp"

namespace tbw {

namespace {

struct SpecParts {
    std::string name;
    std::map<std::string, std::string> params;
};

SpecParts parse_spec(const std::string& spec) {
    SpecParts out;
    auto colon = spec.find(':');
    out.name = spec.substr(0, colon);
    if (colon == std::string::npos) return out;
    std::string rest = spec.substr(colon + 1);
    size_t start = 0;
    while (start < rest.size()) {
        size_t end = rest.find(',', start);
        if (end == std::string::npos) end = rest.size();
        std::string kv = rest.substr(start, end - start);
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("agent spec: expected key=value, got '" + kv + "'");
        out.params[kv.substr(0, eq)] = kv.substr(eq + 1);
        start = end + 1;
    }
    return out;
}

template <typename T, typename F>
T take(std::map<std::string, std::string>& params, const std::string& key, T fallback, F conv) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    T v = conv(it->second);
    params.erase(it);
    return v;
}

std::uint64_t to_u64(const std::string& s) { return std::stoull(s); }
int to_int(const std::string& s) { return std::stoi(s); }
double to_double(const std::string& s) { return std::stod(s); }

void reject_leftovers(const SpecParts& parts) {
    if (!parts.params.empty())
        throw std::invalid_argument("agent '" + parts.name + "': unknown parameter '" +
                                    parts.params.begin()->first + "'");
}

}  // namespace

std::unique_ptr<Agent> make_agent(const std::string& spec) {
    SpecParts parts = parse_spec(spec);
    auto seed = take<std::uint64_t>(parts.params, "seed", 0, to_u64);

    std::unique_ptr<Agent> agent;
    if (parts.name == "ss") {
        agent = std::make_unique<StayStaticAgent>();
    } else if (parts.name == "af") {
        int step = take<int>(parts.params, "step", 200, to_int);
        agent = std::make_unique<AlwaysForwardAgent>(step);
    } else if (parts.name == "rnd") {
        double p = take<double>(parts.params, "p", 0.5, to_double);
        agent = std::make_unique<RandomAgent>(p, seed);
    } else if (parts.name == "heuristic" || parts.name == "lambda") {
        agent = std::make_unique<HeuristicAgent>();
    } else if (parts.name == "oep") {
        OepParams params;
        params.population = take<int>(parts.params, "pop", params.population, to_int);
        params.max_generations = take<int>(parts.params, "gens", params.max_generations, to_int);
        params.rollout_ticks = take<int>(parts.params, "rollout", params.rollout_ticks, to_int);
        params.focus_fire_bonus =
            take<double>(parts.params, "focus", params.focus_fire_bonus, to_double);
        params.mutation_rate =
            take<double>(parts.params, "mutation", params.mutation_rate, to_double);
        params.safety_margin_ms =
            take<int>(parts.params, "margin", params.safety_margin_ms, to_int);
        agent = std::make_unique<OepAgent>(params, seed);
    } else {
        throw std::invalid_argument("unknown agent '" + parts.name +
                                    "' (expected ss, af, rnd, heuristic or oep)");
    }
    reject_leftovers(parts);
    return agent;
}

bool is_builtin_agent_spec(const std::string& spec) {
    auto name = spec.substr(0, spec.find(':'));
    return name == "ss" || name == "af" || name == "rnd" || name == "heuristic" ||
           name == "lambda" || name == "oep";
}

}  // namespace tbw
