#include "yardstack/builder.hpp"

#include <algorithm>
#include <optional>

namespace yardstack {

RemainingDemand RemainingDemand::of(const Instance& inst) {
    RemainingDemand d;
    for (const Container& c : inst.containers())
        switch (c.ctype) {
        case ContainerType::Reefer: ++d.reefer; break;
        case ContainerType::Tank: ++d.tank; break;
        case ContainerType::OpenSide: ++d.open_side; break;
        default: ++d.other; break;
        }
    return d;
}

void RemainingDemand::remove(ContainerType t) {
    switch (t) {
    case ContainerType::Reefer: --reefer; break;
    case ContainerType::Tank: --tank; break;
    case ContainerType::OpenSide: --open_side; break;
    default: --other; break;
    }
}

namespace {

bool blocked_laterally(const OccupancyGrid& grid, const Instance& inst, int b,
                       int x, int y, int z, const FeasibilityOptions& opts) {
    const int reach = opts.open_side == OpenSideRule::Adjacent ? 1 : x;
    for (int xn = x - 1; xn >= x - reach && xn >= 0; --xn) {
        const int id = grid.at(Slot{b, xn, y, z});
        if (id != OccupancyGrid::kEmpty &&
            inst.container(id).ctype == ContainerType::OpenSide)
            return true;
    }
    return false;
}

} // namespace

bool capacity_sufficient(const OccupancyGrid& grid, const Instance& inst,
                         const RemainingDemand& demand,
                         const FeasibilityOptions& opts) {
    if (demand.empty())
        return true;
    const YardConfig& yard = grid.yard();
    long cap_reefer = 0;     // cells reefers can reach
    long cap_open = 0;       // cells open to non-tank containers
    long cap_tank_only = 0;  // cells above a tank top
    long cap_fresh = 0;      // cells of untouched stacks (tanks may start here)
    long cap_open_side = 0;  // open cells whose +X neighbour is empty or absent
    long cap_total = 0;

    for (int b = 0; b < yard.num_blocks(); ++b) {
        const bool powered = yard.is_reefer_block(b);
        for (int x = 0; x < yard.n1; ++x)
            for (int y = 0; y < yard.n2; ++y) {
                int h = 0;
                while (h < yard.n3 && grid.occupied(Slot{b, x, y, h}))
                    ++h;
                if (h == yard.n3)
                    continue;
                bool closed = false;
                bool tank_top = false;
                if (h > 0) {
                    const ContainerType t =
                        inst.container(grid.at(Slot{b, x, y, h - 1})).ctype;
                    closed = t == ContainerType::OpenTop || t == ContainerType::OpenSide;
                    tank_top = t == ContainerType::Tank;
                }
                if (closed)
                    continue;
                int usable = 0;
                int side_capable = 0;
                for (int z = h; z < yard.n3; ++z) {
                    if (grid.occupied(Slot{b, x, y, z}))
                        break;
                    if (blocked_laterally(grid, inst, b, x, y, z, opts))
                        break;
                    ++usable;
                    bool side_ok = true;
                    const int x_end =
                        opts.open_side == OpenSideRule::Adjacent ? x + 2 : yard.n1;
                    for (int xn = x + 1; xn < x_end && xn < yard.n1; ++xn)
                        if (grid.occupied(Slot{b, xn, y, z})) {
                            side_ok = false;
                            break;
                        }
                    if (side_ok)
                        ++side_capable;
                }
                if (usable == 0)
                    continue;
                cap_total += usable;
                if (powered) {
                    cap_reefer += usable;
                    if (opts.reefer_exclusive)
                        continue; // nothing else may use powered cells
                }
                if (tank_top) {
                    cap_tank_only += usable;
                } else {
                    cap_open += usable;
                    // an open-side closes its stack, so one per stack at most
                    if (side_capable > 0)
                        ++cap_open_side;
                    if (h == 0)
                        cap_fresh += usable;
                }
            }
    }

    if (demand.reefer > cap_reefer)
        return false;
    const long cap_tank =
        opts.tank_bidirectional ? cap_tank_only + cap_fresh : cap_tank_only + cap_open;
    if (demand.tank > cap_tank)
        return false;
    if (demand.open_side > cap_open_side)
        return false;
    const long nontank = static_cast<long>(demand.other) + demand.open_side;
    if (nontank > cap_open)
        return false;
    // tank-only cells beyond the tank demand can never be filled
    const long tank_only_live = std::min<long>(cap_tank_only, demand.tank);
    if (opts.reefer_exclusive)
        return nontank + demand.tank <= cap_open + tank_only_live;
    return nontank + demand.tank + demand.reefer <=
           cap_total - (cap_tank_only - tank_only_live);
}

bool constructive_ok(OccupancyGrid& grid, const Instance& inst, const Container& c,
                     const Slot& slot, const RemainingDemand& after,
                     const FeasibilityOptions& opts) {
    if (!placement_ok(grid, inst, c, slot, opts))
        return false;
    grid.place(slot, c.id);
    const bool ok = capacity_sufficient(grid, inst, after, opts);
    grid.clear(slot);
    return ok;
}

namespace {

struct Pools {
    // Unstored container ids per type; types holding at least one id.
    std::vector<std::vector<int>> by_type{kNumContainerTypes};
    std::vector<int> live_types;
    int unstored = 0;

    explicit Pools(const Instance& inst) {
        for (int t = 1; t <= kNumContainerTypes; ++t) {
            by_type[static_cast<std::size_t>(t - 1)] =
                inst.ids_of_type(static_cast<ContainerType>(t));
            if (!by_type[static_cast<std::size_t>(t - 1)].empty())
                live_types.push_back(t);
        }
        unstored = inst.size();
    }

    void remove(int type, int index_in_pool) {
        auto& pool = by_type[static_cast<std::size_t>(type - 1)];
        pool.erase(pool.begin() + index_in_pool);
        if (pool.empty())
            live_types.erase(std::find(live_types.begin(), live_types.end(), type));
        --unstored;
    }

    std::vector<int> remaining_ids() const {
        std::vector<int> ids;
        for (const auto& pool : by_type)
            ids.insert(ids.end(), pool.begin(), pool.end());
        std::sort(ids.begin(), ids.end());
        return ids;
    }
};

std::optional<StowagePlan> attempt(const Instance& inst, Rng& rng,
                                   const FeasibilityOptions& opts,
                                   std::vector<int>& unplaced_out) {
    const YardConfig& yard = inst.yard();
    OccupancyGrid grid(yard);
    std::vector<Slot> slots(static_cast<std::size_t>(inst.size()));
    Pools pools(inst);
    RemainingDemand demand = RemainingDemand::of(inst);

    while (pools.unstored > 0) {
        bool progressed = false;
        for (int b = 0; b < yard.num_blocks() && pools.unstored > 0; ++b)
            for (int x = 0; x < yard.n1 && pools.unstored > 0; ++x)
                for (int y = 0; y < yard.n2 && pools.unstored > 0; ++y)
                    for (int z = 0; z < yard.n3 && pools.unstored > 0; ++z) {
                        const Slot slot{b, x, y, z};
                        if (grid.occupied(slot))
                            continue;
                        const int budget = pools.unstored;
                        for (int attempt = 0; attempt < budget; ++attempt) {
                            const int t = pools.live_types[static_cast<std::size_t>(
                                rng.uniform_int(0, static_cast<int>(pools.live_types.size()) - 1))];
                            auto& pool = pools.by_type[static_cast<std::size_t>(t - 1)];
                            const int pick =
                                rng.uniform_int(0, static_cast<int>(pool.size()) - 1);
                            const int id = pool[static_cast<std::size_t>(pick)];
                            const Container& c = inst.container(id);
                            RemainingDemand after = demand;
                            after.remove(c.ctype);
                            if (constructive_ok(grid, inst, c, slot, after, opts)) {
                                grid.place(slot, id);
                                slots[static_cast<std::size_t>(id)] = slot;
                                pools.remove(t, pick);
                                demand = after;
                                progressed = true;
                                break;
                            }
                        }
                    }
        if (!progressed) {
            unplaced_out = pools.remaining_ids();
            return std::nullopt; // dead end: a full sweep placed nothing
        }
    }
    return StowagePlan{std::move(slots)};
}

} // namespace

StowagePlan create_solution(const Instance& inst, Rng& rng,
                            const FeasibilityOptions& opts,
                            const BuildLimits& limits) {
    std::vector<int> unplaced;
    for (int round = 0; round <= limits.max_restarts; ++round) {
        if (auto plan = attempt(inst, rng, opts, unplaced))
            return std::move(*plan);
    }
    std::string msg = "constructive placement failed after " +
                      std::to_string(limits.max_restarts) + " restarts; " +
                      std::to_string(unplaced.size()) + " of " +
                      std::to_string(inst.size()) + " containers unplaced";
    throw ConstructionError(msg, std::move(unplaced));
}

} // namespace yardstack
