#include "yardstack/harmony.hpp"

#include <algorithm>

#include "yardstack/moves.hpp"

namespace yardstack {

std::optional<SwapMove> random_same_type_swap(StowagePlan& plan,
                                              const Instance& inst, Rng& rng) {
    const int n = inst.size();
    if (n == 0)
        return std::nullopt;
    const int a = rng.uniform_int(0, n - 1);
    const auto& peers = inst.ids_of_type(inst.container(a).ctype);
    const int b = rng.pick(peers);
    if (a == b)
        return std::nullopt;
    std::swap(plan.slots[static_cast<std::size_t>(a)],
              plan.slots[static_cast<std::size_t>(b)]);
    return SwapMove{a, b, plan.slot_of(a), plan.slot_of(b)};
}

void HsParams::validate() const {
    if (hms < 1)
        throw ValidationError("hms must be >= 1");
    if (hmcr < 0.0 || hmcr > 1.0)
        throw ValidationError("hmcr must be in [0,1]");
    if (par < 0.0 || par > 1.0)
        throw ValidationError("par must be in [0,1]");
    if (n_iter_stall < 1)
        throw ValidationError("stall window must be >= 1");
    if (max_improvisations < 1)
        throw ValidationError("max improvisations must be >= 1");
    if (bw_swaps < 1)
        throw ValidationError("bw swaps must be >= 1");
}

int HarmonyMemory::best_index() const {
    int best = 0;
    for (int i = 1; i < static_cast<int>(entries.size()); ++i)
        if (entries[static_cast<std::size_t>(i)].fitness.total <
            entries[static_cast<std::size_t>(best)].fitness.total)
            best = i;
    return best;
}

void HarmonyMemory::recompute_worst() {
    worst_index = 0;
    for (int i = 1; i < static_cast<int>(entries.size()); ++i)
        if (entries[static_cast<std::size_t>(i)].fitness.total >
            entries[static_cast<std::size_t>(worst_index)].fitness.total)
            worst_index = i;
}

HarmonyMemory init_memory(const Instance& inst, const HsParams& params, Rng& rng,
                          const FeasibilityOptions& opts) {
    params.validate();
    HarmonyMemory memory;
    memory.entries.reserve(static_cast<std::size_t>(params.hms));
    for (int i = 0; i < params.hms; ++i) {
        StowagePlan plan = create_solution(inst, rng, opts);
        Fitness fitness = evaluate(plan, inst);
        memory.entries.push_back({std::move(plan), std::move(fitness)});
    }
    memory.recompute_worst();
    return memory;
}

namespace {

// One improvisation attempt; nullopt when some container has no feasible slot.
//
// Inherited slots that are merely not placeable yet (their support arrives
// with a container drawn later in the same order) are deferred and retried,
// so a memory pitch is only abandoned when it truly conflicts with the plan
// built so far.
std::optional<StowagePlan> improvise_attempt(const HarmonyMemory& memory,
                                             const Instance& inst,
                                             const HsParams& params, Rng& rng,
                                             const FeasibilityOptions& opts) {
    const int n = inst.size();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        order[static_cast<std::size_t>(i)] = i;
    rng.shuffle(order);

    OccupancyGrid grid(inst.yard());
    std::vector<Slot> slots(static_cast<std::size_t>(n));
    const int hms = static_cast<int>(memory.entries.size());
    // Two stored harmonies donate this improvisation's remembered pitches.
    // Mixing every container across the whole memory shreds plans against
    // the injectivity and support rules; a donor pair keeps inherited
    // structure intact while still recombining stored material.
    const StowagePlan& donor_a =
        memory.entries[static_cast<std::size_t>(rng.uniform_int(0, hms - 1))].plan;
    const StowagePlan& donor_b =
        memory.entries[static_cast<std::size_t>(rng.uniform_int(0, hms - 1))].plan;
    RemainingDemand demand = RemainingDemand::of(inst);

    struct Pending {
        int id;
        std::optional<Slot> inherited;
    };
    std::vector<Pending> deferred; // inherited slot not placeable yet
    std::vector<Pending> fallback_queue;

    auto place = [&](int id, const Slot& s) {
        grid.place(s, id);
        slots[static_cast<std::size_t>(id)] = s;
        demand.remove(inst.container(id).ctype);
    };

    auto try_inherited = [&](int id, const Slot& s) {
        const Container& c = inst.container(id);
        RemainingDemand after = demand;
        after.remove(c.ctype);
        if (!constructive_ok(grid, inst, c, s, after, opts))
            return false;
        place(id, s);
        return true;
    };

    auto drain_deferred = [&] {
        bool progress = true;
        while (progress) {
            progress = false;
            for (std::size_t i = 0; i < deferred.size();) {
                if (try_inherited(deferred[i].id, *deferred[i].inherited)) {
                    deferred.erase(deferred.begin() + static_cast<long>(i));
                    progress = true;
                } else {
                    ++i;
                }
            }
        }
    };

    for (int id : order) {
        if (rng.bernoulli(params.hmcr)) {
            const StowagePlan& donor = rng.bernoulli(0.5) ? donor_a : donor_b;
            const Slot inherited = donor.slot_of(id);
            if (try_inherited(id, inherited)) {
                drain_deferred();
            } else if (grid.empty(inherited)) {
                deferred.push_back({id, inherited}); // may become placeable later
            } else {
                fallback_queue.push_back({id, std::nullopt}); // slot already used
            }
        } else {
            fallback_queue.push_back({id, std::nullopt});
        }
    }

    drain_deferred();
    // pitches that never became playable keep one last shot at their slot,
    // then draw a random one
    for (Pending& p : deferred)
        fallback_queue.push_back(std::move(p));
    deferred.clear();

    for (const Pending& p : fallback_queue) {
        if (p.inherited && try_inherited(p.id, *p.inherited))
            continue;
        const Container& c = inst.container(p.id);
        RemainingDemand after = demand;
        after.remove(c.ctype);
        // uniform over the feasible slots that do not strand capacity
        std::vector<Slot> options = feasible_slots(grid, inst, c, opts);
        bool placed = false;
        while (!options.empty()) {
            const int pick = rng.uniform_int(0, static_cast<int>(options.size()) - 1);
            const Slot s = options[static_cast<std::size_t>(pick)];
            grid.place(s, p.id);
            if (capacity_sufficient(grid, inst, after, opts)) {
                grid.clear(s);
                place(p.id, s);
                placed = true;
                break;
            }
            grid.clear(s);
            options.erase(options.begin() + pick);
        }
        if (!placed)
            return std::nullopt;
    }
    return StowagePlan{std::move(slots)};
}

struct ImprovisedEntry {
    StowagePlan plan;
    Fitness fitness;
};

ImprovisedEntry improvise_entry(const HarmonyMemory& memory, const Instance& inst,
                                const HsParams& params, Rng& rng,
                                const FeasibilityOptions& opts,
                                const BuildLimits& limits = {}) {
    std::optional<StowagePlan> plan;
    for (int round = 0; round <= limits.max_restarts && !plan; ++round)
        plan = improvise_attempt(memory, inst, params, rng, opts);
    if (!plan)
        throw ConstructionError("improvisation failed after " +
                                    std::to_string(limits.max_restarts) +
                                    " restarts: no feasible slot for some container",
                                {});

    Fitness fitness = evaluate(*plan, inst);
    if (rng.bernoulli(params.par)) {
        for (int k = 0; k < params.bw_swaps; ++k) {
            if (auto move = random_same_type_swap(*plan, inst, rng))
                fitness = fitness_after_swap(fitness, *plan, inst, move->slot_a_after,
                                             move->slot_b_after);
        }
    }
    return {std::move(*plan), std::move(fitness)};
}

} // namespace

StowagePlan improvise(const HarmonyMemory& memory, const Instance& inst,
                      const HsParams& params, Rng& rng,
                      const FeasibilityOptions& opts) {
    params.validate();
    return improvise_entry(memory, inst, params, rng, opts).plan;
}

bool update_memory(HarmonyMemory& memory, HarmonyMemory::Entry candidate) {
    HarmonyMemory::Entry& worst =
        memory.entries[static_cast<std::size_t>(memory.worst_index)];
    if (candidate.fitness.total >= worst.fitness.total)
        return false;
    worst = std::move(candidate);
    memory.recompute_worst();
    return true;
}

SolveResult solve(const Instance& inst, const HsParams& params, Rng& rng,
                  std::optional<std::chrono::milliseconds> deadline,
                  const FeasibilityOptions& opts) {
    params.validate();
    const auto start = std::chrono::steady_clock::now();
    auto out_of_time = [&] {
        return deadline && std::chrono::steady_clock::now() - start >= *deadline;
    };

    HarmonyMemory memory = init_memory(inst, params, rng, opts);
    HarmonyMemory::Entry best = memory.entries[static_cast<std::size_t>(memory.best_index())];

    SolveResult result;
    result.f_initial = best.fitness.total;

    // One stall unit spans hms improvisations, matching what one GA
    // generation costs in evaluations, and resets whenever a candidate is
    // good enough to enter the memory. A new global best always enters
    // (it beats the worst), so best-improvements reset the window too.
    const long stall_budget =
        static_cast<long>(params.n_iter_stall) * static_cast<long>(params.hms);
    long since_accept = 0;
    while (best.fitness.total > 0 && result.improvisations < params.max_improvisations &&
           since_accept < stall_budget && !out_of_time()) {
        ImprovisedEntry candidate = improvise_entry(memory, inst, params, rng, opts);
        ++result.improvisations;
        if (candidate.fitness.total < best.fitness.total)
            best = {candidate.plan, candidate.fitness};
        const bool accepted = update_memory(
            memory, {std::move(candidate.plan), std::move(candidate.fitness)});
        since_accept = accepted ? 0 : since_accept + 1;
    }

    result.f_final = best.fitness.total;
    result.best_plan = std::move(best.plan);
    result.best_fitness = std::move(best.fitness);
    result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return result;
}

} // namespace yardstack
