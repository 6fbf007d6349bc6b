#include "yardstack/feasibility.hpp"

namespace yardstack {

namespace {

bool is_type(const Instance& inst, int id, ContainerType t) {
    return inst.container(id).ctype == t;
}

ConstraintViolation make(ViolationKind kind, int subject, std::string detail) {
    return ConstraintViolation{kind, subject, std::move(detail)};
}

} // namespace

const char* violation_kind_name(ViolationKind k) {
    switch (k) {
    case ViolationKind::Floating: return "floating";
    case ViolationKind::AboveOpenTopOrSide: return "above-open-top-or-side";
    case ViolationKind::OpenSideBlocked: return "open-side-blocked";
    case ViolationKind::ReeferBlockMismatch: return "reefer-block-mismatch";
    case ViolationKind::NonTankOnTank: return "non-tank-on-tank";
    case ViolationKind::TankNotOnTank: return "tank-not-on-tank";
    }
    return "?";
}

std::vector<ConstraintViolation> check_support(const OccupancyGrid& grid) {
    std::vector<ConstraintViolation> out;
    const YardConfig& yard = grid.yard();
    for (int b = 0; b < yard.num_blocks(); ++b)
        for (int x = 0; x < yard.n1; ++x)
            for (int y = 0; y < yard.n2; ++y)
                for (int z = 1; z < yard.n3; ++z) {
                    const Slot s{b, x, y, z};
                    const int id = grid.at(s);
                    if (id != OccupancyGrid::kEmpty &&
                        grid.empty(Slot{b, x, y, z - 1}))
                        out.push_back(make(ViolationKind::Floating, id,
                                           "container " + std::to_string(id) +
                                               " at " + to_string(s) +
                                               " has no container below"));
                }
    return out;
}

std::vector<ConstraintViolation> check_top_access(const OccupancyGrid& grid,
                                                  const Instance& inst) {
    std::vector<ConstraintViolation> out;
    const YardConfig& yard = grid.yard();
    for (int b = 0; b < yard.num_blocks(); ++b)
        for (int x = 0; x < yard.n1; ++x)
            for (int y = 0; y < yard.n2; ++y)
                for (int z = 0; z + 1 < yard.n3; ++z) {
                    const int id = grid.at(Slot{b, x, y, z});
                    if (id == OccupancyGrid::kEmpty)
                        continue;
                    const ContainerType t = inst.container(id).ctype;
                    if (t != ContainerType::OpenTop && t != ContainerType::OpenSide)
                        continue;
                    const int above = grid.at(Slot{b, x, y, z + 1});
                    if (above != OccupancyGrid::kEmpty)
                        out.push_back(make(ViolationKind::AboveOpenTopOrSide, id,
                                           std::string(container_type_name(t)) +
                                               " container " + std::to_string(id) +
                                               " has container " +
                                               std::to_string(above) + " above it"));
                }
    return out;
}

std::vector<ConstraintViolation> check_open_side(const OccupancyGrid& grid,
                                                 const Instance& inst,
                                                 const FeasibilityOptions& opts) {
    std::vector<ConstraintViolation> out;
    const YardConfig& yard = grid.yard();
    for (int b = 0; b < yard.num_blocks(); ++b)
        for (int x = 0; x < yard.n1; ++x)
            for (int y = 0; y < yard.n2; ++y)
                for (int z = 0; z < yard.n3; ++z) {
                    const int id = grid.at(Slot{b, x, y, z});
                    if (id == OccupancyGrid::kEmpty ||
                        !is_type(inst, id, ContainerType::OpenSide))
                        continue;
                    const int x_end =
                        opts.open_side == OpenSideRule::Adjacent ? x + 2 : yard.n1;
                    for (int xn = x + 1; xn < x_end && xn < yard.n1; ++xn) {
                        const int blocker = grid.at(Slot{b, xn, y, z});
                        if (blocker != OccupancyGrid::kEmpty) {
                            out.push_back(make(
                                ViolationKind::OpenSideBlocked, id,
                                "open-side container " + std::to_string(id) +
                                    " is blocked by container " +
                                    std::to_string(blocker) + " at " +
                                    to_string(Slot{b, xn, y, z})));
                            break;
                        }
                    }
                }
    return out;
}

std::vector<ConstraintViolation> check_reefer_block(const StowagePlan& plan,
                                                    const Instance& inst,
                                                    const FeasibilityOptions& opts) {
    std::vector<ConstraintViolation> out;
    const YardConfig& yard = inst.yard();
    for (int id = 0; id < plan.size(); ++id) {
        const bool reefer = is_type(inst, id, ContainerType::Reefer);
        const bool powered = yard.is_reefer_block(plan.slot_of(id).block);
        if (reefer && !powered)
            out.push_back(make(ViolationKind::ReeferBlockMismatch, id,
                               "reefer container " + std::to_string(id) +
                                   " stored in regular block " +
                                   std::to_string(plan.slot_of(id).block)));
        else if (!reefer && powered && opts.reefer_exclusive)
            out.push_back(make(ViolationKind::ReeferBlockMismatch, id,
                               std::string(container_type_name(
                                   inst.container(id).ctype)) +
                                   " container " + std::to_string(id) +
                                   " stored in reefer block " +
                                   std::to_string(plan.slot_of(id).block)));
    }
    return out;
}

std::vector<ConstraintViolation> check_tank_stacking(const OccupancyGrid& grid,
                                                     const Instance& inst,
                                                     const FeasibilityOptions& opts) {
    std::vector<ConstraintViolation> out;
    const YardConfig& yard = grid.yard();
    for (int b = 0; b < yard.num_blocks(); ++b)
        for (int x = 0; x < yard.n1; ++x)
            for (int y = 0; y < yard.n2; ++y)
                for (int z = 1; z < yard.n3; ++z) {
                    const int id = grid.at(Slot{b, x, y, z});
                    if (id == OccupancyGrid::kEmpty)
                        continue;
                    const int below = grid.at(Slot{b, x, y, z - 1});
                    const bool tank_above = is_type(inst, id, ContainerType::Tank);
                    const bool tank_below = below != OccupancyGrid::kEmpty &&
                                            is_type(inst, below, ContainerType::Tank);
                    if (!tank_above && tank_below)
                        out.push_back(make(ViolationKind::NonTankOnTank, id,
                                           "container " + std::to_string(id) +
                                               " rests on tank container " +
                                               std::to_string(below)));
                    else if (tank_above && opts.tank_bidirectional &&
                             below != OccupancyGrid::kEmpty && !tank_below)
                        out.push_back(make(ViolationKind::TankNotOnTank, id,
                                           "tank container " + std::to_string(id) +
                                               " rests on non-tank container " +
                                               std::to_string(below)));
                }
    return out;
}

std::vector<ConstraintViolation> check_all(const StowagePlan& plan,
                                           const Instance& inst,
                                           const FeasibilityOptions& opts) {
    const OccupancyGrid grid = occupancy(plan, inst); // integrity + bounds
    std::vector<ConstraintViolation> out = check_support(grid);
    auto append = [&out](std::vector<ConstraintViolation> v) {
        out.insert(out.end(), std::make_move_iterator(v.begin()),
                   std::make_move_iterator(v.end()));
    };
    append(check_top_access(grid, inst));
    append(check_open_side(grid, inst, opts));
    append(check_reefer_block(plan, inst, opts));
    append(check_tank_stacking(grid, inst, opts));
    return out;
}

bool placement_ok(const OccupancyGrid& grid, const Instance& inst,
                  const Container& c, const Slot& slot,
                  const FeasibilityOptions& opts) {
    const YardConfig& yard = grid.yard();
    if (!slot.in_bounds(yard))
        throw BoundsError("slot " + to_string(slot) + " out of yard bounds");
    if (grid.occupied(slot))
        return false;

    // block kind
    const bool powered = yard.is_reefer_block(slot.block);
    if (c.ctype == ContainerType::Reefer) {
        if (!powered)
            return false;
    } else if (powered && opts.reefer_exclusive) {
        return false;
    }

    // support and what we would rest on
    if (slot.z > 0) {
        const int below = grid.at(Slot{slot.block, slot.x, slot.y, slot.z - 1});
        if (below == OccupancyGrid::kEmpty)
            return false;
        const ContainerType bt = inst.container(below).ctype;
        if (bt == ContainerType::OpenTop || bt == ContainerType::OpenSide)
            return false;
        if (bt == ContainerType::Tank && c.ctype != ContainerType::Tank)
            return false;
        if (c.ctype == ContainerType::Tank && opts.tank_bidirectional &&
            bt != ContainerType::Tank)
            return false;
    }

    // lateral access, in both directions
    const int reach = opts.open_side == OpenSideRule::Adjacent ? 1 : yard.n1;
    if (c.ctype == ContainerType::OpenSide) {
        for (int xn = slot.x + 1; xn <= slot.x + reach && xn < yard.n1; ++xn)
            if (grid.occupied(Slot{slot.block, xn, slot.y, slot.z}))
                return false;
    }
    for (int xn = slot.x - 1; xn >= slot.x - reach && xn >= 0; --xn) {
        const int left = grid.at(Slot{slot.block, xn, slot.y, slot.z});
        if (left != OccupancyGrid::kEmpty &&
            inst.container(left).ctype == ContainerType::OpenSide)
            return false;
    }
    return true;
}

std::vector<Slot> feasible_slots(const OccupancyGrid& grid, const Instance& inst,
                                 const Container& c,
                                 const FeasibilityOptions& opts) {
    const YardConfig& yard = grid.yard();
    std::vector<Slot> out;
    for (int b = 0; b < yard.num_blocks(); ++b)
        for (int x = 0; x < yard.n1; ++x)
            for (int y = 0; y < yard.n2; ++y)
                for (int z = 0; z < yard.n3; ++z) {
                    const Slot s{b, x, y, z};
                    if (placement_ok(grid, inst, c, s, opts))
                        out.push_back(s);
                }
    return out;
}

std::vector<int> floor_counts(const OccupancyGrid& grid, int block) {
    const YardConfig& yard = grid.yard();
    std::vector<int> counts(static_cast<std::size_t>(yard.n3), 0);
    for (int x = 0; x < yard.n1; ++x)
        for (int y = 0; y < yard.n2; ++y)
            for (int z = 0; z < yard.n3; ++z)
                if (grid.occupied(Slot{block, x, y, z}))
                    ++counts[static_cast<std::size_t>(z)];
    return counts;
}

} // namespace yardstack
