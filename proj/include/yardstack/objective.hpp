#pragma once

#include <vector>

#include "yardstack/model.hpp"

namespace yardstack {

/// Rehandle-count objective value: per container, the number of containers
/// above it in its stack that depart strictly later.
struct Fitness {
    int total = 0;
    std::vector<int> per_container; // indexed by container id

    bool operator==(const Fitness&) const = default;
};

/// Rehandles charged to one container: containers above it departing
/// strictly later. Ties do not count.
int blocking_count(const StowagePlan& plan, const Instance& inst, int id);

/// Full evaluation. Requires a total, injective plan; feasibility is not
/// required, so diagnostic evaluation of infeasible plans is allowed.
Fitness evaluate(const StowagePlan& plan, const Instance& inst);

/// Swap-local re-evaluation: given the fitness before two containers swapped
/// slots `a` and `b`, recompute only the counts of containers in the affected
/// stacks of the post-swap plan. Full evaluate() is the oracle for this path.
Fitness fitness_after_swap(const Fitness& before, const StowagePlan& after,
                           const Instance& inst, const Slot& a, const Slot& b);

} // namespace yardstack
