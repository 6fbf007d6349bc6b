#pragma once

#include "yardstack/feasibility.hpp"
#include "yardstack/model.hpp"
#include "yardstack/rng.hpp"

namespace yardstack {

struct BuildLimits {
    int max_restarts = 1000;
};

/// What is still waiting to be stored, split by the pools the stacking rules
/// create: reefers (powered blocks only), tanks (ground or tank tops),
/// open-sides (need a free +X neighbour), and everything else.
struct RemainingDemand {
    int reefer = 0;
    int tank = 0;
    int open_side = 0;
    int other = 0;

    static RemainingDemand of(const Instance& inst);
    void remove(ContainerType t);
    bool empty() const {
        return reefer == 0 && tank == 0 && open_side == 0 && other == 0;
    }
};

/// Whether the empty cells still reachable under the stacking rules can hold
/// the remaining demand, pool by pool. A false result proves the state is a
/// dead end; a true result makes no promise. Assumes stacks grew bottom-up,
/// which every constructive path here guarantees.
bool capacity_sufficient(const OccupancyGrid& grid, const Instance& inst,
                         const RemainingDemand& demand,
                         const FeasibilityOptions& opts = {});

/// placement_ok plus the dead-end test above with `c` hypothetically placed.
/// `after` is the demand left once `c` is stored. Constructive solvers use
/// this instead of bare placement_ok so they stop stranding capacity that
/// later containers need; it never rejects a placement from which the
/// remaining containers could still all be stored.
bool constructive_ok(OccupancyGrid& grid, const Instance& inst, const Container& c,
                     const Slot& slot, const RemainingDemand& after,
                     const FeasibilityOptions& opts = {});

/// Randomized constructive generation of a feasible plan. Sweeps slots in
/// (block, x, y, z) order; at each empty slot draws a random type with
/// unstored containers, then a random unstored container of that type, and
/// places it if the placement passes every rule, resampling a bounded number
/// of times before skipping the slot. Sweeps repeat until all containers are
/// stored; a sweep that places nothing triggers a restart with fresh
/// randomness. Throws ConstructionError naming the unplaced containers once
/// the restart budget is spent.
StowagePlan create_solution(const Instance& inst, Rng& rng,
                            const FeasibilityOptions& opts = {},
                            const BuildLimits& limits = {});

} // namespace yardstack
