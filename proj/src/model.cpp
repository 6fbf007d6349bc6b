#include "yardstack/model.hpp"

#include <algorithm>

namespace yardstack {

ContainerType container_type_from_code(int code) {
    if (code < 1 || code > kNumContainerTypes)
        throw ValidationError("container type code must be in [1,6], got " +
                              std::to_string(code));
    return static_cast<ContainerType>(code);
}

const char* container_type_name(ContainerType t) {
    switch (t) {
    case ContainerType::Dry: return "dry";
    case ContainerType::Empty: return "empty";
    case ContainerType::OpenTop: return "open-top";
    case ContainerType::OpenSide: return "open-side";
    case ContainerType::Tank: return "tank";
    case ContainerType::Reefer: return "reefer";
    }
    return "?";
}

void YardConfig::validate() const {
    if (n_regular < 0 || n_reefer < 0)
        throw ValidationError("block counts must be non-negative");
    if (num_blocks() < 1)
        throw ValidationError("yard must have at least one block");
    if (n1 < 1 || n2 < 1 || n3 < 1)
        throw ValidationError("grid bounds n1, n2, n3 must be >= 1");
}

std::string to_string(const Slot& s) {
    return "(b" + std::to_string(s.block) + "," + std::to_string(s.x) + "," +
           std::to_string(s.y) + "," + std::to_string(s.z) + ")";
}

Instance::Instance(YardConfig yard, std::vector<Container> containers)
    : yard_(yard), containers_(std::move(containers)) {
    yard_.validate();

    const int n = static_cast<int>(containers_.size());
    if (n > yard_.capacity())
        throw ValidationError("instance has " + std::to_string(n) +
                              " containers but yard capacity is " +
                              std::to_string(yard_.capacity()));

    std::sort(containers_.begin(), containers_.end(),
              [](const Container& a, const Container& b) { return a.id < b.id; });
    for (int i = 0; i < n; ++i) {
        const Container& c = containers_[static_cast<std::size_t>(i)];
        if (c.id != i) {
            if (i > 0 && containers_[static_cast<std::size_t>(i - 1)].id == c.id)
                throw ValidationError("duplicate container id " + std::to_string(c.id));
            throw ValidationError("container ids must be dense in [0, " +
                                  std::to_string(n) + "); missing id " +
                                  std::to_string(i));
        }
        if (c.departure < 0)
            throw ValidationError("container " + std::to_string(c.id) +
                                  " has negative departure date");
    }

    by_type_.assign(kNumContainerTypes, {});
    for (const Container& c : containers_)
        by_type_[static_cast<std::size_t>(static_cast<int>(c.ctype) - 1)].push_back(c.id);

    if (count_of_type(ContainerType::Reefer) > yard_.reefer_capacity())
        throw ValidationError(
            "instance infeasible: " +
            std::to_string(count_of_type(ContainerType::Reefer)) +
            " reefer containers exceed reefer-block capacity " +
            std::to_string(yard_.reefer_capacity()));
}

const Container& Instance::container(int id) const {
    if (id < 0 || id >= size())
        throw NotFoundError("unknown container id " + std::to_string(id));
    return containers_[static_cast<std::size_t>(id)];
}

const std::vector<int>& Instance::ids_of_type(ContainerType t) const {
    return by_type_[static_cast<std::size_t>(static_cast<int>(t) - 1)];
}

OccupancyGrid::OccupancyGrid(const YardConfig& yard) : yard_(yard) {
    yard_.validate();
    cells_.assign(static_cast<std::size_t>(yard_.capacity()), kEmpty);
}

std::size_t OccupancyGrid::index(const Slot& s) const {
    if (!s.in_bounds(yard_))
        throw BoundsError("slot " + to_string(s) + " out of yard bounds");
    return static_cast<std::size_t>(
        ((s.block * yard_.n1 + s.x) * yard_.n2 + s.y) * yard_.n3 + s.z);
}

void OccupancyGrid::place(const Slot& s, int id) {
    int& cell = cells_[index(s)];
    if (cell != kEmpty)
        throw IntegrityError("slot " + to_string(s) + " already holds container " +
                             std::to_string(cell) + "; cannot place container " +
                             std::to_string(id));
    cell = id;
    ++count_;
}

void OccupancyGrid::clear(const Slot& s) {
    int& cell = cells_[index(s)];
    if (cell != kEmpty) {
        cell = kEmpty;
        --count_;
    }
}

OccupancyGrid occupancy(const StowagePlan& plan, const Instance& inst) {
    if (plan.size() != inst.size())
        throw ValidationError("plan covers " + std::to_string(plan.size()) +
                              " containers but instance has " +
                              std::to_string(inst.size()));
    OccupancyGrid grid(inst.yard());
    for (int id = 0; id < plan.size(); ++id) {
        const Slot& s = plan.slot_of(id);
        const int prev = grid.at(s);
        if (prev != OccupancyGrid::kEmpty)
            throw IntegrityError("containers " + std::to_string(prev) + " and " +
                                 std::to_string(id) + " both assigned to slot " +
                                 to_string(s));
        grid.place(s, id);
    }
    return grid;
}

std::vector<int> stack_above(const StowagePlan& plan, const Instance& inst, int id) {
    if (id < 0 || id >= inst.size())
        throw NotFoundError("unknown container id " + std::to_string(id));
    const Slot base = plan.slot_of(id);
    std::vector<int> above;
    for (int id2 = 0; id2 < plan.size(); ++id2) {
        const Slot& s = plan.slot_of(id2);
        if (s.block == base.block && s.x == base.x && s.y == base.y && s.z > base.z)
            above.push_back(id2);
    }
    std::sort(above.begin(), above.end(), [&](int a, int b) {
        return plan.slot_of(a).z < plan.slot_of(b).z;
    });
    return above;
}

} // namespace yardstack
