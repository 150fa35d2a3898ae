#include "tbw/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace tbw {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Pulled back from a friendly-block stop so rounding can never leave two
// same-army squares overlapping.
constexpr double kBlockBackoff = 1e-9;

void warn(StepLog* log, int player, int unit, std::string note) {
    if (!log) return;
    log->events.push_back({Event::Kind::Warning, player, unit, 0, 0, std::move(note)});
}

void apply_orders_inplace(GameState& state, int player, std::span<const Order> orders,
                          StepLog* log) {
    for (const Order& o : orders) {
        Unit* u = state.find_unit(player, o.unit_id);
        if (!u) {
            warn(log, player, o.unit_id, "order for unknown or dead unit");
            continue;
        }
        if (u->engaged_with) continue;  // locked in combat
        if (o.dx == 0 && o.dy == 0) {
            u->target.reset();
            continue;
        }
        Vec2 raw = player_frame_to_display(player, u->pos, {double(o.dx), double(o.dy)});
        u->target = clamp_center(raw, state.config.unit_size);
    }
}

// Open interval of travel parameter t where |p0 + v·t − q| < r on one axis;
// closed = true widens to <=.
struct Interval {
    double lo = kInf;
    double hi = -kInf;
    bool empty() const { return lo > hi; }
};

Interval axis_window(double p0, double v, double q, double r, bool closed) {
    if (v == 0.0) {
        bool inside = closed ? std::abs(p0 - q) <= r : std::abs(p0 - q) < r;
        return inside ? Interval{-kInf, kInf} : Interval{kInf, -kInf};
    }
    double a = (q - r - p0) / v;
    double b = (q + r - p0) / v;
    if (a > b) std::swap(a, b);
    return {a, b};
}

Interval box_window(Vec2 p0, Vec2 v, Vec2 q, double r, bool closed) {
    Interval x = axis_window(p0.x, v.x, q.x, r, closed);
    Interval y = axis_window(p0.y, v.y, q.y, r, closed);
    return {std::max(x.lo, y.lo), std::min(x.hi, y.hi)};
}

void engage(Unit& mover, Unit& enemy) {
    mover.engaged_with = enemy.id;
    if (!enemy.engaged_with) enemy.engaged_with = mover.id;
}

struct ContactEvent {
    int player = 0;  // initiator's owner
    int unit = 0;
    int enemy = 0;
};

MoveResult move_one(GameState& state, Unit& u, std::vector<ContactEvent>* contacts,
                    std::map<std::pair<int, int>, Vec2>* move_vecs) {
    MoveResult res;
    const double size = state.config.unit_size;
    const int enemy_side = 1 - u.owner;

    Vec2 to = *u.target;
    Vec2 diff = to - u.pos;
    double dist = norm(diff);
    if (dist == 0.0) {
        u.target.reset();
        res.reached_target = true;
        return res;
    }

    // Already touching an enemy: lock into combat instead of moving. No
    // charge, the contact was not created by this move.
    {
        const Unit* best = nullptr;
        double best_d = kInf;
        for (const Unit& e : state.armies[enemy_side]) {
            if (!squares_in_contact(u.pos, e.pos, size)) continue;
            double d = distance(u.pos, e.pos);
            if (d < best_d || (d == best_d && best && e.id < best->id)) {
                best = &e;
                best_d = d;
            }
        }
        if (best) {
            engage(u, *state.find_unit(enemy_side, best->id));
            res.contacted_enemy = best->id;
            return res;
        }
    }

    double limit = std::min(u.eff_speed(), dist);
    Vec2 dir = diff * (1.0 / dist);

    double t_enemy = kInf;
    int enemy_id = 0;
    for (const Unit& e : state.armies[enemy_side]) {
        Interval w = box_window(u.pos, dir, e.pos, size, /*closed=*/true);
        if (w.empty() || w.hi < 0.0 || w.lo > limit) continue;
        double t = std::max(0.0, w.lo);
        if (t < t_enemy || (t == t_enemy && e.id < enemy_id)) {
            t_enemy = t;
            enemy_id = e.id;
        }
    }

    // Friendly squares are resolved at the landing point: the unit ends at
    // the last position along the line that overlaps no friend (a square
    // sitting across the whole reach still blocks outright; a shallow graze
    // en route does not wedge the mover in place).
    const double cap = std::min(limit, t_enemy);
    std::vector<Interval> blocks;
    for (const Unit& f : state.armies[u.owner]) {
        if (f.id == u.id) continue;
        Interval w = box_window(u.pos, dir, f.pos, size, /*closed=*/false);
        if (w.empty() || w.hi <= 0.0 || w.lo >= cap) continue;
        blocks.push_back({std::max(0.0, w.lo), w.hi});
    }
    std::sort(blocks.begin(), blocks.end(), [](const Interval& a, const Interval& b) {
        return a.lo < b.lo;
    });
    double travel = cap;
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        if (travel > it->lo && travel < it->hi)
            travel = std::max(0.0, it->lo - kBlockBackoff);
    }
    if (travel < cap) res.blocked_by_friendly = true;

    Vec2 landing = u.pos + dir * travel;
    // Guard against floating-point overshoot into a friendly square.
    for (int guard = 0; guard < 8; ++guard) {
        bool bad = false;
        for (const Unit& f : state.armies[u.owner])
            if (f.id != u.id && squares_overlap(landing, f.pos, size)) bad = true;
        if (!bad) break;
        travel = std::max(0.0, travel - 1e-6);
        landing = u.pos + dir * travel;
        res.blocked_by_friendly = true;
    }

    if (travel > 0.0) {
        if (move_vecs) (*move_vecs)[{u.owner, u.id}] = landing - u.pos;
        u.pos = landing;
        res.moved = true;
    }

    if (!res.blocked_by_friendly && t_enemy <= limit) {
        Unit* e = state.find_unit(enemy_side, enemy_id);
        engage(u, *e);
        res.contacted_enemy = enemy_id;
        if (contacts) contacts->push_back({u.owner, u.id, enemy_id});
        return res;
    }
    if (!res.blocked_by_friendly && travel == dist) {
        u.target.reset();
        res.reached_target = true;
    }
    return res;
}

void log_event(StepLog* log, Event::Kind kind, int player, int unit, int victim, int damage) {
    if (!log) return;
    log->events.push_back({kind, player, unit, victim, damage, {}});
}

}  // namespace

GameState apply_orders(const GameState& state, int player, std::span<const Order> orders,
                       StepLog* log) {
    if (state.phase != Phase::Battle) throw std::logic_error("apply_orders: not in battle phase");
    GameState next = state;
    apply_orders_inplace(next, player, orders, log);
    return next;
}

MoveResult move_unit(GameState& state, int player, int unit_id) {
    Unit* u = state.find_unit(player, unit_id);
    if (!u || u->engaged_with || !u->target) return {};
    return move_one(state, *u, nullptr, nullptr);
}

int resolve_charge(Unit& attacker, Unit& defender) {
    if (attacker.charge_spent) return 0;
    attacker.charge_spent = true;
    double raw = attacker.eff_charge_power() - defender.eff_charge_resistance();
    int dmg = std::max(0, iround(raw));
    defender.life = std::max(0, defender.life - dmg);
    return dmg;
}

int melee_tick_damage(const Unit& attacker, const Unit& defender) {
    double adv = counters(attacker.type, defender.type) ? 1.5 : 1.0;
    double raw = attacker.eff_attack() * adv - defender.eff_defence() / 2.0;
    return std::max(1, iround(raw));
}

int arrow_damage_against(const Unit& archer, const Unit& victim) {
    double raw = archer.eff_arrow_damage() - victim.eff_arrow_defence() / 2.0;
    return std::max(1, iround(raw));
}

void resolve_archery(GameState& state, StepLog* log) {
    struct Hit {
        Unit* victim;
        int damage;
        Event::Kind kind;
        int player;
        int archer;
    };
    std::vector<Hit> hits;

    for (int p = 0; p < 2; ++p) {
        for (Unit& archer : state.armies[p]) {
            if (archer.type != UnitType::Archers || archer.life <= 0) continue;
            const double range = attributes(UnitType::Archers).throwing_distance.value_or(0);
            Unit* target = nullptr;
            double best = kInf;
            for (Unit& e : state.armies[1 - p]) {
                if (e.life <= 0) continue;
                double d = distance(archer.pos, e.pos);
                if (d > range) continue;
                if (d < best || (d == best && target && e.id < target->id)) {
                    target = &e;
                    best = d;
                }
            }
            if (!target) continue;
            int dmg = arrow_damage_against(archer, *target);
            hits.push_back({target, dmg, Event::Kind::Arrow, p, archer.id});
            // Arrows land around the target: own troops close to it catch
            // half of what the volley would do to them.
            for (Unit& f : state.armies[p]) {
                if (f.id == archer.id || f.life <= 0) continue;
                if (distance(f.pos, target->pos) > kFriendlyFireRadius) continue;
                int splash = iround(arrow_damage_against(archer, f) / 2.0);
                hits.push_back({&f, splash, Event::Kind::FriendlyFire, p, archer.id});
            }
        }
    }

    for (const Hit& h : hits) {
        h.victim->life = std::max(0, h.victim->life - h.damage);
        log_event(log, h.kind, h.player, h.archer, h.victim->id, h.damage);
    }
}

double aura_multiplier(const Unit& unit, const GameState& state) {
    if (!state.config.has_general) return 1.0;
    const Unit* general = nullptr;
    for (const Unit& u : state.armies[unit.owner])
        if (u.is_general) general = &u;
    if (!general || general->life <= 0) return kGeneralDeadPenalty;
    return distance(unit.pos, general->pos) <= kGeneralAuraRadius ? kGeneralAliveBonus : 1.0;
}

void recompute_auras(GameState& state) {
    for (auto& army : state.armies)
        for (Unit& u : army) u.aura = aura_multiplier(u, state);
}

std::optional<GameResult> check_terminal(const GameState& state) {
    const bool empty0 = state.armies[0].empty();
    const bool empty1 = state.armies[1].empty();
    if (empty0 && empty1) return GameResult{std::nullopt, GameResult::Reason::Elimination};
    if (empty0) return GameResult{1, GameResult::Reason::Elimination};
    if (empty1) return GameResult{0, GameResult::Reason::Elimination};
    if (state.battle_turn() >= state.config.max_turns) {
        const auto n0 = state.armies[0].size();
        const auto n1 = state.armies[1].size();
        if (n0 == n1) return GameResult{std::nullopt, GameResult::Reason::TurnLimit};
        return GameResult{n0 > n1 ? 0 : 1, GameResult::Reason::TurnLimit};
    }
    return std::nullopt;
}

GameState step(const GameState& state, std::span<const Order> orders_p0,
               std::span<const Order> orders_p1, StepLog* log) {
    if (state.phase != Phase::Battle) throw std::logic_error("step: not in battle phase");

    GameState s = state;

    // (1) orders
    apply_orders_inplace(s, 0, orders_p0, log);
    apply_orders_inplace(s, 1, orders_p1, log);

    // (2) movement, player 0's units by id then player 1's; contacts are
    // collected for charge resolution. Units engaged by an earlier mover
    // lose their slot.
    std::vector<ContactEvent> contacts;
    std::map<std::pair<int, int>, Vec2> move_vecs;
    for (int p = 0; p < 2; ++p) {
        std::vector<int> ids;
        ids.reserve(s.armies[p].size());
        for (const Unit& u : s.armies[p]) ids.push_back(u.id);
        for (int id : ids) {
            Unit* u = s.find_unit(p, id);
            if (!u || u->engaged_with || !u->target) continue;
            move_one(s, *u, &contacts, &move_vecs);
        }
    }

    // (3) charges, in contact order
    for (const ContactEvent& c : contacts) {
        Unit* a = s.find_unit(c.player, c.unit);
        Unit* d = s.find_unit(1 - c.player, c.enemy);
        if (!a || !d || a->life <= 0) continue;
        int dmg = resolve_charge(*a, *d);
        log_event(log, Event::Kind::Charge, c.player, c.unit, c.enemy, dmg);
    }

    // (4) melee: every engaged attacker strikes its opponent; both
    // directions are computed before any of the damage lands.
    {
        struct Strike {
            Unit* victim;
            int damage;
            int player, unit;
        };
        std::vector<Strike> strikes;
        for (int p = 0; p < 2; ++p) {
            for (Unit& u : s.armies[p]) {
                if (u.life <= 0 || !u.engaged_with) continue;
                Unit* v = s.find_unit(1 - p, *u.engaged_with);
                if (!v || v->life <= 0) continue;
                strikes.push_back({v, melee_tick_damage(u, *v), p, u.id});
            }
        }
        for (const Strike& st : strikes) {
            st.victim->life = std::max(0, st.victim->life - st.damage);
            log_event(log, Event::Kind::Melee, st.player, st.unit, st.victim->id, st.damage);
        }
    }

    // (5) archery
    resolve_archery(s, log);

    // (6) remove the dead; simultaneous deaths all count. Survivors whose
    // opponent fell disengage and regain their one-time charge.
    {
        std::array<std::vector<int>, 2> dead;
        for (int p = 0; p < 2; ++p) {
            auto& army = s.armies[p];
            for (const Unit& u : army)
                if (u.life <= 0) {
                    dead[p].push_back(u.id);
                    log_event(log, Event::Kind::Death, p, u.id, 0, 0);
                }
            std::erase_if(army, [](const Unit& u) { return u.life <= 0; });
        }
        for (int p = 0; p < 2; ++p) {
            for (Unit& u : s.armies[p]) {
                if (u.engaged_with &&
                    std::find(dead[1 - p].begin(), dead[1 - p].end(), *u.engaged_with) !=
                        dead[1 - p].end()) {
                    u.engaged_with.reset();
                    u.charge_spent = false;
                }
            }
        }
    }

    // (7) upkeep: stick un-engaged units that are still touching an enemy
    // into combat, then facing, then auras.
    for (int p = 0; p < 2; ++p) {
        for (Unit& u : s.armies[p]) {
            if (u.engaged_with) continue;
            Unit* best = nullptr;
            double best_d = kInf;
            for (Unit& e : s.armies[1 - p]) {
                if (!squares_in_contact(u.pos, e.pos, s.config.unit_size)) continue;
                double d = distance(u.pos, e.pos);
                if (d < best_d || (d == best_d && best && e.id < best->id)) {
                    best = &e;
                    best_d = d;
                }
            }
            if (best) engage(u, *best);
        }
    }
    for (int p = 0; p < 2; ++p) {
        for (Unit& u : s.armies[p]) {
            if (u.engaged_with) {
                const Unit* opp = s.find_unit(1 - p, *u.engaged_with);
                if (opp)
                    if (auto d = quantize_direction(opp->pos - u.pos)) u.facing = *d;
            } else if (auto it = move_vecs.find({p, u.id}); it != move_vecs.end()) {
                if (auto d = quantize_direction(it->second)) u.facing = *d;
            }
        }
    }
    recompute_auras(s);

    // (8) + (9)
    s.turn += 1;
    if (auto r = check_terminal(s)) {
        s.result = r;
        s.phase = Phase::Finished;
    }
    return s;
}

Observation observe(const GameState& state, int player) {
    if (state.phase == Phase::Draft) throw std::logic_error("observe: draft phase has no battle view");
    Observation obs;
    for (const Unit& u : state.armies[player]) {
        OwnUnitRow r;
        r.id = u.id;
        r.x = iround(u.pos.x);
        r.y = iround(u.pos.y);
        r.direction = static_cast<int>(u.facing);
        r.life = u.life;
        r.type = static_cast<int>(u.type);
        r.moving = u.moving() ? 1 : 0;
        Vec2 t = u.target.value_or(u.pos);
        r.target_x = iround(t.x);
        r.target_y = iround(t.y);
        obs.own.push_back(r);
    }
    for (const Unit& u : state.armies[1 - player]) {
        EnemyUnitRow r;
        r.id = u.id;
        r.x = iround(u.pos.x);
        r.y = iround(u.pos.y);
        r.direction = static_cast<int>(u.facing);
        r.life = u.life;
        r.type = static_cast<int>(u.type);
        r.moving = u.moving() ? 1 : 0;
        obs.enemy.push_back(r);
    }
    return obs;
}

}  // namespace tbw
