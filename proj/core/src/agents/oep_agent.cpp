#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "tbw/agents.hpp"

namespace tbw {

namespace {

// λ on forward-model units, same factors as the observation flavour.
double lambda_state(const Unit& own, const Unit& enemy, const GameState& s) {
    double phi1 = counters(own.type, enemy.type) ? 1.0 : (counters(enemy.type, own.type) ? 0.0 : 0.5);

    double phi2 = 1.0;
    const double range = attributes(UnitType::Archers).throwing_distance.value_or(0);
    for (const Unit& e : s.armies[enemy.owner])
        if (e.type == UnitType::Archers && distance(enemy.pos, e.pos) <= range) {
            phi2 = 0.0;
            break;
        }

    double phi3 = own.life > enemy.life ? 1.0 : (own.life == enemy.life ? 0.5 : 0.0);

    double phi4 = dot(own.pos - enemy.pos, direction_vector(enemy.facing)) < 0.0 ? 1.0 : 0.0;

    const double dmax = std::hypot(s.config.field_width, s.config.field_height);
    double phi5 = 1.0 - distance(own.pos, enemy.pos) / dmax;

    double sum = phi1 + phi2 + phi3 + phi4 + phi5;
    double count = 5.0;
    if (s.config.has_general) {
        sum += enemy.is_general ? 1.0 : 0.0;
        count = 6.0;
    }
    return sum / count;
}

int genes_sharing_target(std::span<const int> genes) {
    int shared = 0;
    for (size_t i = 0; i < genes.size(); ++i)
        for (size_t j = 0; j < genes.size(); ++j)
            if (i != j && genes[i] == genes[j]) {
                ++shared;
                break;
            }
    return shared;
}

struct Individual {
    std::vector<int> genes;
    double fitness = 0.0;
};

}  // namespace

GameState state_from_observation(const Observation& obs, const LeagueConfig& config, int player) {
    GameState s;
    s.config = config;
    s.phase = Phase::Battle;
    s.turn = config.draft_turns;

    auto base_unit = [&](int id, int owner, int type_code, int x, int y, int dir_code, int life) {
        Unit u;
        u.id = id;
        u.owner = owner;
        u.type = unit_type_from_code(type_code).value_or(UnitType::Swordsmen);
        u.pos = {double(x), double(y)};
        u.facing = direction_from_code(dir_code).value_or(Direction::N);
        u.life = life;
        u.is_general = config.has_general && id == 1;  // first-drafted unit
        return u;
    };

    for (const OwnUnitRow& r : obs.own) {
        Unit u = base_unit(r.id, player, r.type, r.x, r.y, r.direction, r.life);
        if (r.moving) u.target = Vec2{double(r.target_x), double(r.target_y)};
        s.armies[player].push_back(u);
    }
    for (const EnemyUnitRow& r : obs.enemy) {
        Unit u = base_unit(r.id, 1 - player, r.type, r.x, r.y, r.direction, r.life);
        if (r.moving) {
            // Destination hidden: extrapolate far along the observed facing.
            Vec2 far = u.pos + direction_vector(u.facing) * 3000.0;
            u.target = clamp_center(far, config.unit_size);
        }
        s.armies[1 - player].push_back(u);
    }

    // Units in square contact are presumed locked in combat and to have
    // spent their charge.
    for (int p = 0; p < 2; ++p) {
        for (Unit& u : s.armies[p]) {
            const Unit* best = nullptr;
            double best_d = 0.0;
            for (const Unit& e : s.armies[1 - p]) {
                if (!squares_in_contact(u.pos, e.pos, config.unit_size)) continue;
                double d = distance(u.pos, e.pos);
                if (!best || d < best_d) {
                    best = &e;
                    best_d = d;
                }
            }
            if (best) {
                u.charge_spent = true;
                if (!u.engaged_with) u.engaged_with = best->id;
            }
        }
    }
    recompute_auras(s);
    return s;
}

OepAgent::OepAgent(OepParams params, std::uint64_t seed_override)
    : params_(params), seed_override_(seed_override) {
    params_.population = std::max(4, params_.population);
}

void OepAgent::start_match(const MatchContext& ctx) {
    Agent::start_match(ctx);
    rng_ = Rng(seed_override_ ? seed_override_ : derive_seed(ctx.seed, 0x0E9ULL, ctx.player));
}

DraftPick OepAgent::draft_pick(const DraftObservation& obs, Deadline) {
    return heuristic_draft_pick(obs, ctx_.config, ctx_.player);
}

double OepAgent::evaluate_genome(const Observation& obs, std::span<const int> genes) const {
    return evaluate_on(state_from_observation(obs, ctx_.config, ctx_.player), obs, genes);
}

double OepAgent::evaluate_on(const GameState& base, const Observation& obs,
                             std::span<const int> genes) const {
    GameState s = base;
    const int me = ctx_.player;

    for (int tick = 0; tick < params_.rollout_ticks && s.phase == Phase::Battle; ++tick) {
        std::vector<Order> mine;
        for (size_t i = 0; i < obs.own.size(); ++i) {
            const Unit* u = s.find_unit(me, obs.own[i].id);
            const Unit* tgt = s.find_unit(1 - me, genes[i]);
            if (!u || !tgt) continue;
            Vec2 delta = display_to_player_frame(me, u->pos, tgt->pos);
            mine.push_back({u->id, iround(delta.x), iround(delta.y)});
        }
        std::span<const Order> empty;
        s = me == 0 ? step(s, mine, empty) : step(s, empty, mine);
    }

    double sum = 0.0;
    int alive = 0;
    for (size_t i = 0; i < obs.own.size(); ++i) {
        const Unit* u = s.find_unit(me, obs.own[i].id);
        if (!u) continue;
        ++alive;
        const Unit* tgt = s.find_unit(1 - me, genes[i]);
        if (!tgt) {
            // Target killed during the rollout: score the follow-up spot,
            // the unit fights whoever is nearest next.
            double best_d = std::numeric_limits<double>::infinity();
            for (const Unit& e : s.armies[1 - me]) {
                double d = distance(u->pos, e.pos);
                if (d < best_d) {
                    best_d = d;
                    tgt = &e;
                }
            }
        }
        sum += tgt ? lambda_state(*u, *tgt, s) : 1.0;  // no enemies left at all
    }
    double score = alive > 0 ? sum / alive : 0.0;
    score += params_.focus_fire_bonus * genes_sharing_target(genes);
    return std::isfinite(score) ? score : 0.0;
}

std::vector<Order> OepAgent::act(const Observation& obs, Deadline deadline) {
    stats_ = {};
    if (obs.own.empty() || obs.enemy.empty()) return {};

    std::vector<int> enemy_ids;
    enemy_ids.reserve(obs.enemy.size());
    for (const EnemyUnitRow& e : obs.enemy) enemy_ids.push_back(e.id);

    const size_t n = obs.own.size();
    std::vector<int> seed_genes(n);
    for (size_t i = 0; i < n; ++i)
        seed_genes[i] = heuristic_target(obs.own[i], obs, ctx_.config);

    const auto cutoff =
        deadline - std::chrono::milliseconds(params_.safety_margin_ms);
    auto emit = [&](std::span<const int> genes) {
        return orders_toward_targets(obs, ctx_.config, ctx_.player, genes);
    };
    if (Clock::now() >= cutoff) return emit(seed_genes);

    const GameState base = state_from_observation(obs, ctx_.config, ctx_.player);
    std::vector<Individual> pop;
    pop.reserve(params_.population);
    pop.push_back({seed_genes, 0.0});
    while (pop.size() < static_cast<size_t>(params_.population)) {
        Individual ind;
        ind.genes.resize(n);
        for (size_t i = 0; i < n; ++i)
            ind.genes[i] = enemy_ids[rng_.below(enemy_ids.size())];
        pop.push_back(std::move(ind));
    }
    for (Individual& ind : pop) {
        ind.fitness = evaluate_on(base, obs, ind.genes);
        ++stats_.evaluations;
    }
    stats_.seed_fitness = pop.front().fitness;

    auto by_fitness_desc = [](const Individual& a, const Individual& b) {
        return a.fitness > b.fitness;
    };
    const size_t elite = std::max<size_t>(2, pop.size() / 2);

    while (Clock::now() < cutoff &&
           (params_.max_generations == 0 || stats_.generations < params_.max_generations)) {
        std::stable_sort(pop.begin(), pop.end(), by_fitness_desc);
        pop.resize(elite);
        while (pop.size() < static_cast<size_t>(params_.population)) {
            size_t pa = rng_.below(elite);
            size_t pb = rng_.below(elite - 1);
            if (pb >= pa) ++pb;  // two distinct parents
            Individual child;
            child.genes.resize(n);
            for (size_t i = 0; i < n; ++i) {
                child.genes[i] = (rng_.next() & 1) ? pop[pa].genes[i] : pop[pb].genes[i];
                if (rng_.unit() < params_.mutation_rate)
                    child.genes[i] = enemy_ids[rng_.below(enemy_ids.size())];
            }
            child.fitness = evaluate_on(base, obs, child.genes);
            ++stats_.evaluations;
            pop.push_back(std::move(child));
        }
        ++stats_.generations;
    }

    const Individual* best = &pop.front();
    for (const Individual& ind : pop)
        if (ind.fitness > best->fitness) best = &ind;
    stats_.best_fitness = best->fitness;
    return emit(best->genes);
}

}  // namespace tbw
