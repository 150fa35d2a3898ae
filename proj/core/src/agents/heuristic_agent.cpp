#include <algorithm>
#include <cmath>

#include "tbw/agents.hpp"

namespace tbw {

namespace {

double phi_matchup(UnitType own, UnitType enemy) {
    if (counters(own, enemy)) return 1.0;
    if (counters(enemy, own)) return 0.0;
    return 0.5;
}

double dist_rows(int ax, int ay, int bx, int by) {
    return std::hypot(double(ax - bx), double(ay - by));
}

}  // namespace

double lambda_score(const OwnUnitRow& own, const EnemyUnitRow& enemy, const Observation& obs,
                    const LeagueConfig& config) {
    const UnitType own_type = static_cast<UnitType>(own.type);
    const UnitType enemy_type = static_cast<UnitType>(enemy.type);

    const double phi1 = phi_matchup(own_type, enemy_type);

    // Safe from arrows: the spot we would attack lies outside every enemy
    // archer's throwing radius (the target archer's own radius included).
    double phi2 = 1.0;
    const double range = attributes(UnitType::Archers).throwing_distance.value_or(0);
    for (const EnemyUnitRow& e : obs.enemy) {
        if (static_cast<UnitType>(e.type) != UnitType::Archers) continue;
        if (dist_rows(enemy.x, enemy.y, e.x, e.y) <= range) {
            phi2 = 0.0;
            break;
        }
    }

    const double phi3 = own.life > enemy.life ? 1.0 : (own.life == enemy.life ? 0.5 : 0.0);

    // Flank: the defender faces away from where we come from. Exactly
    // sideways (dot = 0) still counts as frontal.
    double phi4 = 0.0;
    if (auto d = direction_from_code(enemy.direction)) {
        Vec2 approach{double(own.x - enemy.x), double(own.y - enemy.y)};
        if (dot(approach, direction_vector(*d)) < 0.0) phi4 = 1.0;
    }

    const double dmax = std::hypot(config.field_width, config.field_height);
    const double phi5 = 1.0 - dist_rows(own.x, own.y, enemy.x, enemy.y) / dmax;

    double sum = phi1 + phi2 + phi3 + phi4 + phi5;
    double count = 5.0;
    if (config.has_general) {
        sum += enemy.id == 1 ? 1.0 : 0.0;  // the first-drafted unit is the general
        count = 6.0;
    }
    return sum / count;
}

int heuristic_target(const OwnUnitRow& own, const Observation& obs, const LeagueConfig& config) {
    int best_id = 0;
    double best = -1.0;
    for (const EnemyUnitRow& e : obs.enemy) {
        double score = lambda_score(own, e, obs, config);
        if (score > best || (score == best && best_id > e.id)) {
            best = score;
            best_id = e.id;
        }
    }
    return best_id;
}

bool likely_engaged(const OwnUnitRow& own, const Observation& obs, const LeagueConfig& config) {
    const double slop = config.unit_size + 1.0;
    for (const EnemyUnitRow& e : obs.enemy)
        if (std::abs(own.x - e.x) <= slop && std::abs(own.y - e.y) <= slop) return true;
    return false;
}

std::vector<Order> orders_toward_targets(const Observation& obs, const LeagueConfig& config,
                                         int player, std::span<const int> enemy_ids) {
    std::vector<Order> orders;
    for (size_t i = 0; i < obs.own.size() && i < enemy_ids.size(); ++i) {
        const OwnUnitRow& u = obs.own[i];
        if (likely_engaged(u, obs, config)) continue;
        const EnemyUnitRow* target = nullptr;
        for (const EnemyUnitRow& e : obs.enemy)
            if (e.id == enemy_ids[i]) target = &e;
        if (!target) continue;
        const int ddx = target->x - u.x;
        const int ddy = target->y - u.y;
        if (player == 0)
            orders.push_back({u.id, ddx, -ddy});
        else
            orders.push_back({u.id, -ddx, ddy});
    }
    return orders;
}

DraftPick heuristic_draft_pick(const DraftObservation& obs, const LeagueConfig& config,
                               int player) {
    const DeploymentZone zone = deployment_zone(config, player);
    std::vector<Vec2> own_placed;
    std::array<int, kUnitTypeCount> own_counts{};
    const DraftRecord* last_opponent = nullptr;
    for (const DraftRecord& r : obs.history) {
        if (r.player == player) {
            own_placed.push_back({double(r.x), double(r.y)});
            if (auto t = unit_type_from_code(r.type)) ++own_counts[static_cast<int>(*t)];
        } else {
            last_opponent = &r;
        }
    }

    if (!last_opponent) {
        // Opening pick: a swordsman holding the middle (the general in
        // league 3, since the first pick is the general).
        Vec2 center{config.field_width / 2.0, zone.center_y()};
        return {UnitType::Swordsmen,
                nudge_to_legal(config, player, center, own_placed)};
    }

    UnitType choice = counter_pick(unit_type_from_code(last_opponent->type)
                                       .value_or(UnitType::Swordsmen));
    const int cap = (config.army_size + 2) / 3;  // ceil(n/3) per type
    if (own_counts[static_cast<int>(choice)] >= cap) {
        int best = 0;
        for (int t = 1; t < kUnitTypeCount; ++t)
            if (own_counts[t] < own_counts[best]) best = t;
        choice = static_cast<UnitType>(best);
    }

    Vec2 desired{double(last_opponent->x), zone.front_y(player)};
    return {choice, nudge_to_legal(config, player, desired, own_placed)};
}

}  // namespace tbw
