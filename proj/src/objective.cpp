#include "yardstack/objective.hpp"

namespace yardstack {

namespace {

// Count within one stack of the grid, scanning cells above the container.
int blocking_in_grid(const OccupancyGrid& grid, const Instance& inst, int id,
                     const Slot& at) {
    int count = 0;
    const int d = inst.container(id).departure;
    for (int z = at.z + 1; z < grid.yard().n3; ++z) {
        const int above = grid.at(Slot{at.block, at.x, at.y, z});
        if (above != OccupancyGrid::kEmpty && inst.container(above).departure > d)
            ++count;
    }
    return count;
}

} // namespace

int blocking_count(const StowagePlan& plan, const Instance& inst, int id) {
    if (id < 0 || id >= inst.size())
        throw NotFoundError("unknown container id " + std::to_string(id));
    const int d = inst.container(id).departure;
    int count = 0;
    for (int other : stack_above(plan, inst, id))
        if (inst.container(other).departure > d)
            ++count;
    return count;
}

Fitness evaluate(const StowagePlan& plan, const Instance& inst) {
    const OccupancyGrid grid = occupancy(plan, inst);
    Fitness f;
    f.per_container.assign(static_cast<std::size_t>(inst.size()), 0);
    for (int id = 0; id < inst.size(); ++id) {
        const int m = blocking_in_grid(grid, inst, id, plan.slot_of(id));
        f.per_container[static_cast<std::size_t>(id)] = m;
        f.total += m;
    }
    return f;
}

Fitness fitness_after_swap(const Fitness& before, const StowagePlan& after,
                           const Instance& inst, const Slot& a, const Slot& b) {
    Fitness f = before;
    const bool same_stack = a.block == b.block && a.x == b.x && a.y == b.y;

    // Collect the members of the affected stacks from the post-swap plan.
    std::vector<int> touched;
    for (int id = 0; id < after.size(); ++id) {
        const Slot& s = after.slot_of(id);
        const bool in_a = s.block == a.block && s.x == a.x && s.y == a.y;
        const bool in_b = !same_stack && s.block == b.block && s.x == b.x && s.y == b.y;
        if (in_a || in_b)
            touched.push_back(id);
    }
    for (int id : touched) {
        const int m = blocking_count(after, inst, id);
        f.total += m - f.per_container[static_cast<std::size_t>(id)];
        f.per_container[static_cast<std::size_t>(id)] = m;
    }
    return f;
}

} // namespace yardstack
