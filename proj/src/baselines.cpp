#include "yardstack/baselines.hpp"

#include <algorithm>
#include <optional>

#include "yardstack/moves.hpp"

namespace yardstack {

void GaParams::validate() const {
    if (population_size < 2)
        throw ValidationError("population size must be >= 2");
    if (generations_stall < 1)
        throw ValidationError("stall window must be >= 1");
    if (max_generations < 1)
        throw ValidationError("max generations must be >= 1");
    if (crossover_rate < 0.0 || crossover_rate > 1.0)
        throw ValidationError("crossover rate must be in [0,1]");
    if (mutation_rate < 0.0 || mutation_rate > 1.0)
        throw ValidationError("mutation rate must be in [0,1]");
}

namespace {

struct Individual {
    StowagePlan plan;
    Fitness fitness;
};

// Kept part of a plan under repair: grid plus per-container positions.
struct PartialState {
    OccupancyGrid grid;
    std::vector<std::optional<Slot>> pos;

    explicit PartialState(const Instance& inst)
        : grid(inst.yard()), pos(static_cast<std::size_t>(inst.size())) {}

    void place(int id, const Slot& s) {
        grid.place(s, id);
        pos[static_cast<std::size_t>(id)] = s;
    }
    void remove(int id) {
        grid.clear(*pos[static_cast<std::size_t>(id)]);
        pos[static_cast<std::size_t>(id)].reset();
    }
};

// Remove one offender per rule breach until the kept set is clean; each pass
// removes at least one container, so this terminates. Newly floating
// containers surface as Floating breaches on the next pass.
void evict_rule_breakers(PartialState& state, const Instance& inst,
                         const FeasibilityOptions& opts,
                         std::vector<int>& displaced) {
    const YardConfig& yard = inst.yard();
    for (;;) {
        std::optional<int> victim;
        for (int id = 0; id < inst.size() && !victim; ++id) {
            const auto& maybe = state.pos[static_cast<std::size_t>(id)];
            if (!maybe)
                continue;
            const Slot s = *maybe;
            const Container& c = inst.container(id);
            if (s.z > 0) {
                const int below = state.grid.at(Slot{s.block, s.x, s.y, s.z - 1});
                if (below == OccupancyGrid::kEmpty) {
                    victim = id; // floating
                    break;
                }
                const ContainerType bt = inst.container(below).ctype;
                if (bt == ContainerType::OpenTop || bt == ContainerType::OpenSide ||
                    (bt == ContainerType::Tank && c.ctype != ContainerType::Tank) ||
                    (c.ctype == ContainerType::Tank && opts.tank_bidirectional &&
                     bt != ContainerType::Tank)) {
                    victim = id; // resting on the wrong thing
                    break;
                }
            }
            const bool powered = yard.is_reefer_block(s.block);
            if ((c.ctype == ContainerType::Reefer && !powered) ||
                (c.ctype != ContainerType::Reefer && powered && opts.reefer_exclusive)) {
                victim = id;
                break;
            }
            if (c.ctype == ContainerType::OpenSide) {
                const int reach =
                    opts.open_side == OpenSideRule::Adjacent ? 1 : yard.n1;
                for (int xn = s.x + 1; xn <= s.x + reach && xn < yard.n1; ++xn) {
                    const int blocker = state.grid.at(Slot{s.block, xn, s.y, s.z});
                    if (blocker != OccupancyGrid::kEmpty) {
                        victim = blocker; // evict the blocker, keep the open-side
                        break;
                    }
                }
            }
        }
        if (!victim)
            return;
        state.remove(*victim);
        displaced.push_back(*victim);
    }
}

// Turn a crossover offspring (total but possibly colliding / rule-breaking)
// into a feasible plan. Conflicting containers are unassigned and reinserted
// at random feasible slots; if reinsertion dead-ends repeatedly the child is
// rebuilt from scratch.
StowagePlan repair(const std::vector<Slot>& child, const Instance& inst, Rng& rng,
                   const FeasibilityOptions& opts) {
    PartialState kept(inst);
    std::vector<int> displaced;
    for (int id = 0; id < inst.size(); ++id) {
        const Slot& s = child[static_cast<std::size_t>(id)];
        if (kept.grid.empty(s))
            kept.place(id, s);
        else
            displaced.push_back(id); // slot collision, first occupant wins
    }
    evict_rule_breakers(kept, inst, opts, displaced);

    RemainingDemand displaced_demand;
    for (int id : displaced) {
        switch (inst.container(id).ctype) {
        case ContainerType::Reefer: ++displaced_demand.reefer; break;
        case ContainerType::Tank: ++displaced_demand.tank; break;
        default: ++displaced_demand.other; break;
        }
    }

    constexpr int kReinsertTries = 10;
    for (int round = 0; round < kReinsertTries; ++round) {
        PartialState state = kept;
        std::vector<int> todo = displaced;
        rng.shuffle(todo);
        RemainingDemand demand = displaced_demand;
        bool ok = true;
        for (int id : todo) {
            const Container& c = inst.container(id);
            RemainingDemand after = demand;
            after.remove(c.ctype);
            std::vector<Slot> options = feasible_slots(state.grid, inst, c, opts);
            bool found = false;
            while (!options.empty()) {
                const int pick =
                    rng.uniform_int(0, static_cast<int>(options.size()) - 1);
                const Slot s = options[static_cast<std::size_t>(pick)];
                state.grid.place(s, id);
                if (capacity_sufficient(state.grid, inst, after, opts)) {
                    state.grid.clear(s);
                    state.place(id, s);
                    found = true;
                    break;
                }
                state.grid.clear(s);
                options.erase(options.begin() + pick);
            }
            if (!found) {
                ok = false;
                break;
            }
            demand = after;
        }
        if (ok) {
            std::vector<Slot> slots(static_cast<std::size_t>(inst.size()));
            for (int id = 0; id < inst.size(); ++id)
                slots[static_cast<std::size_t>(id)] = *state.pos[static_cast<std::size_t>(id)];
            return StowagePlan{std::move(slots)};
        }
    }
    return create_solution(inst, rng, opts);
}

int roulette(const std::vector<Individual>& pop, Rng& rng) {
    // weight = worst_total - total + 1: strictly positive, rank-preserving
    int worst = 0;
    for (const Individual& ind : pop)
        worst = std::max(worst, ind.fitness.total);
    double sum = 0.0;
    for (const Individual& ind : pop)
        sum += static_cast<double>(worst - ind.fitness.total + 1);
    double r = rng.real01() * sum;
    for (int i = 0; i < static_cast<int>(pop.size()); ++i) {
        r -= static_cast<double>(worst - pop[static_cast<std::size_t>(i)].fitness.total + 1);
        if (r < 0.0)
            return i;
    }
    return static_cast<int>(pop.size()) - 1;
}

Individual make_individual(StowagePlan plan, const Instance& inst, Rng& rng,
                           double mutation_rate) {
    Fitness fitness = evaluate(plan, inst);
    if (rng.bernoulli(mutation_rate)) {
        if (auto move = random_same_type_swap(plan, inst, rng))
            fitness = fitness_after_swap(fitness, plan, inst, move->slot_a_after,
                                         move->slot_b_after);
    }
    return {std::move(plan), std::move(fitness)};
}

} // namespace

SolveResult ga_solve(const Instance& inst, const GaParams& params, Rng& rng,
                     std::optional<std::chrono::milliseconds> deadline,
                     const FeasibilityOptions& opts) {
    params.validate();
    const auto start = std::chrono::steady_clock::now();
    auto out_of_time = [&] {
        return deadline && std::chrono::steady_clock::now() - start >= *deadline;
    };

    std::vector<Individual> pop;
    pop.reserve(static_cast<std::size_t>(params.population_size));
    for (int i = 0; i < params.population_size; ++i) {
        StowagePlan plan = create_solution(inst, rng, opts);
        Fitness fitness = evaluate(plan, inst);
        pop.push_back({std::move(plan), std::move(fitness)});
    }

    // Survivors are the best population_size of parents plus offspring, with
    // incumbents winning ties, so the best individual always carries over.
    auto by_fitness = [](const Individual& a, const Individual& b) {
        return a.fitness.total < b.fitness.total;
    };
    std::stable_sort(pop.begin(), pop.end(), by_fitness);

    SolveResult result;
    result.f_initial = pop.front().fitness.total;

    const int n = inst.size();
    int stall = 0;
    int generation = 0;
    while (pop.front().fitness.total > 0 && generation < params.max_generations &&
           stall < params.generations_stall && !out_of_time()) {
        const int worst_before = pop.back().fitness.total;
        std::vector<Individual> offspring;
        offspring.reserve(pop.size());

        while (static_cast<int>(offspring.size()) < params.population_size) {
            const Individual& p1 = pop[static_cast<std::size_t>(roulette(pop, rng))];
            const Individual& p2 = pop[static_cast<std::size_t>(roulette(pop, rng))];

            std::vector<Slot> c1 = p1.plan.slots;
            std::vector<Slot> c2 = p2.plan.slots;
            if (rng.bernoulli(params.crossover_rate) && n > 0) {
                int a = rng.uniform_int(0, n);
                int b = rng.uniform_int(0, n);
                if (a > b)
                    std::swap(a, b);
                for (int i = a; i < b; ++i)
                    std::swap(c1[static_cast<std::size_t>(i)], c2[static_cast<std::size_t>(i)]);
            }
            for (std::vector<Slot>* child : {&c1, &c2}) {
                if (static_cast<int>(offspring.size()) >= params.population_size)
                    break;
                offspring.push_back(make_individual(repair(*child, inst, rng, opts),
                                                    inst, rng, params.mutation_rate));
                ++result.improvisations;
            }
        }

        bool improved = false;
        for (const Individual& child : offspring)
            if (child.fitness.total < worst_before)
                improved = true;

        // offspring ahead of equally fit parents: equal-fitness turnover keeps
        // the population drifting instead of freezing into clones
        std::vector<Individual> merged;
        merged.reserve(pop.size() + offspring.size());
        for (Individual& child : offspring)
            merged.push_back(std::move(child));
        for (Individual& parent : pop)
            merged.push_back(std::move(parent));
        std::stable_sort(merged.begin(), merged.end(), by_fitness);
        merged.resize(static_cast<std::size_t>(params.population_size));
        pop = std::move(merged);

        ++generation;
        stall = improved ? 0 : stall + 1;
    }

    Individual best = std::move(pop.front());

    result.f_final = best.fitness.total;
    result.best_plan = std::move(best.plan);
    result.best_fitness = std::move(best.fitness);
    result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return result;
}

SolveResult lifo_solve(const Instance& inst, Rng& rng,
                       const FeasibilityOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    const YardConfig& yard = inst.yard();
    const BuildLimits limits;

    std::vector<int> order(static_cast<std::size_t>(inst.size()));
    for (int i = 0; i < inst.size(); ++i)
        order[static_cast<std::size_t>(i)] = i;

    for (int round = 0; round <= limits.max_restarts; ++round) {
        rng.shuffle(order); // arrival order
        OccupancyGrid grid(yard);
        std::vector<Slot> slots(static_cast<std::size_t>(inst.size()));
        RemainingDemand demand = RemainingDemand::of(inst);
        // A container with no safe slot yet waits at the back of the queue
        // until the stacks have grown; only a full pass that places nothing
        // is a dead end.
        std::vector<int> queue = order;
        std::vector<int> unplaced;
        while (!queue.empty()) {
            std::vector<int> waiting;
            bool progressed = false;
            for (int id : queue) {
                const Container& c = inst.container(id);
                RemainingDemand after = demand;
                after.remove(c.ctype);
                bool placed = false;
                for (int b = 0; b < yard.num_blocks() && !placed; ++b)
                    for (int x = 0; x < yard.n1 && !placed; ++x)
                        for (int y = 0; y < yard.n2 && !placed; ++y)
                            for (int z = 0; z < yard.n3 && !placed; ++z) {
                                const Slot s{b, x, y, z};
                                if (constructive_ok(grid, inst, c, s, after, opts)) {
                                    grid.place(s, id);
                                    slots[static_cast<std::size_t>(id)] = s;
                                    demand = after;
                                    placed = true;
                                }
                            }
                if (placed)
                    progressed = true;
                else
                    waiting.push_back(id);
            }
            if (!progressed) {
                unplaced = waiting;
                break;
            }
            queue = std::move(waiting);
        }
        if (unplaced.empty()) {
            StowagePlan plan{std::move(slots)};
            Fitness fitness = evaluate(plan, inst);
            SolveResult result;
            result.f_initial = fitness.total;
            result.f_final = fitness.total;
            result.best_plan = std::move(plan);
            result.best_fitness = std::move(fitness);
            result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start);
            return result;
        }
        if (round == limits.max_restarts) {
            std::sort(unplaced.begin(), unplaced.end());
            throw ConstructionError("sequential stacking failed after " +
                                        std::to_string(limits.max_restarts) +
                                        " restarts",
                                    std::move(unplaced));
        }
    }
    throw ConstructionError("unreachable", {});
}

} // namespace yardstack
