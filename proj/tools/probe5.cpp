// Scratch probe: dissect a plateau-1 final plan.
#include <cstdio>

#include "yardstack/harmony.hpp"
#include "yardstack/instances.hpp"
#include "yardstack/objective.hpp"

using namespace yardstack;

int main() {
    const std::uint64_t seed = 5;
    Rng irng = Rng(seed).split(1);
    Instance inst = generate(preset("table3-instance1"), irng);
    Rng rng = Rng(seed).split(2);
    HsParams hp;
    hp.hms = 30;
    hp.n_iter_stall = 20;
    SolveResult res = solve(inst, hp, rng);
    std::printf("f_final=%d\n", res.f_final);

    const StowagePlan& plan = res.best_plan;
    Fitness fit = evaluate(plan, inst);
    for (int id = 0; id < inst.size(); ++id) {
        if (fit.per_container[(size_t)id] == 0)
            continue;
        const Slot s = plan.slot_of(id);
        std::printf("container %d type=%d d=%d at %s blocked_by:", id,
                    (int)inst.container(id).ctype, inst.container(id).departure,
                    to_string(s).c_str());
        for (int above : stack_above(plan, inst, id))
            std::printf(" [id=%d type=%d d=%d]", above, (int)inst.container(above).ctype,
                        inst.container(above).departure);
        std::printf("\n");
        // swap fixes: same-type w for the blocker u s.t. swap removes inversion
        for (int above : stack_above(plan, inst, id)) {
            if (inst.container(above).departure <= inst.container(id).departure)
                continue;
            int fixers = 0;
            for (int w : inst.ids_of_type(inst.container(above).ctype)) {
                if (w == above)
                    continue;
                StowagePlan trial = plan;
                std::swap(trial.slots[(size_t)w], trial.slots[(size_t)above]);
                if (evaluate(trial, inst).total == 0)
                    ++fixers;
            }
            std::printf("  blocker %d: %d zero-fixing same-type swaps (of %zu peers)\n",
                        above, fixers,
                        inst.ids_of_type(inst.container(above).ctype).size() - 1);
        }
        // also: same-type swaps of the blocked container itself
        int fixers = 0;
        for (int w : inst.ids_of_type(inst.container(id).ctype)) {
            if (w == id)
                continue;
            StowagePlan trial = plan;
            std::swap(trial.slots[(size_t)w], trial.slots[(size_t)id]);
            if (evaluate(trial, inst).total == 0)
                ++fixers;
        }
        std::printf("  blocked %d itself: %d zero-fixing same-type swaps\n", id, fixers);
    }
    // occupancy summary
    const OccupancyGrid grid = occupancy(plan, inst);
    int ground_free = 0;
    const YardConfig& yard = inst.yard();
    for (int b = 0; b < yard.n_regular; ++b)
        for (int x = 0; x < yard.n1; ++x)
            for (int y = 0; y < yard.n2; ++y)
                if (grid.empty(Slot{b, x, y, 0}))
                    ++ground_free;
    std::printf("free regular ground cells: %d of %d\n", ground_free,
                yard.n_regular * yard.n1 * yard.n2);
    return 0;
}
