#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "yardstack/errors.hpp"

namespace yardstack {

/// The six container types handled by the solver. Numeric codes are part of
/// the file format, so they are fixed.
enum class ContainerType : int {
    Dry = 1,
    Empty = 2,
    OpenTop = 3,
    OpenSide = 4,
    Tank = 5,
    Reefer = 6,
};

constexpr int kNumContainerTypes = 6;

ContainerType container_type_from_code(int code);
const char* container_type_name(ContainerType t);

struct Container {
    int id = 0;
    ContainerType ctype = ContainerType::Dry;
    int departure = 0; // abstract time units; larger departs later

    bool operator==(const Container&) const = default;
};

/// Yard geometry: n_regular ordinary blocks followed by n_reefer powered
/// blocks, each an n1 x n2 x n3 grid. Block indices below n_regular are
/// regular, the rest are reefer-powered.
struct YardConfig {
    int n_regular = 0;
    int n_reefer = 0;
    int n1 = 1;
    int n2 = 1;
    int n3 = 1;

    int num_blocks() const { return n_regular + n_reefer; }
    int block_capacity() const { return n1 * n2 * n3; }
    int capacity() const { return num_blocks() * block_capacity(); }
    int reefer_capacity() const { return n_reefer * block_capacity(); }
    int regular_capacity() const { return n_regular * block_capacity(); }
    bool is_reefer_block(int block) const { return block >= n_regular; }

    void validate() const;

    bool operator==(const YardConfig&) const = default;
};

/// One storage cell: block plus 0-based grid coordinates, z = 0 is the ground.
struct Slot {
    int block = 0;
    int x = 0;
    int y = 0;
    int z = 0;

    bool operator==(const Slot&) const = default;
    auto operator<=>(const Slot&) const = default;
    bool in_bounds(const YardConfig& yard) const {
        return block >= 0 && block < yard.num_blocks() && x >= 0 && x < yard.n1 &&
               y >= 0 && y < yard.n2 && z >= 0 && z < yard.n3;
    }
};

std::string to_string(const Slot& s);

/// A problem instance: yard geometry plus the containers to store.
/// Container ids are dense in [0, size()), so container(id) is an index.
class Instance {
public:
    Instance() = default;

    /// Validates and normalizes (sorts containers by id). Throws
    /// ValidationError on duplicate/non-dense ids, capacity overflow, or
    /// reefer demand exceeding reefer-block capacity.
    Instance(YardConfig yard, std::vector<Container> containers);

    const YardConfig& yard() const { return yard_; }
    const std::vector<Container>& containers() const { return containers_; }
    int size() const { return static_cast<int>(containers_.size()); }

    const Container& container(int id) const;

    /// Container ids of the given type.
    const std::vector<int>& ids_of_type(ContainerType t) const;

    int count_of_type(ContainerType t) const {
        return static_cast<int>(ids_of_type(t).size());
    }

    bool operator==(const Instance& other) const {
        return yard_ == other.yard_ && containers_ == other.containers_;
    }

private:
    YardConfig yard_;
    std::vector<Container> containers_;
    std::vector<std::vector<int>> by_type_; // index = type code - 1
};

/// Total assignment of every container to a slot, indexed by container id.
/// Totality is structural; injectivity is enforced when an occupancy grid is
/// built from the plan.
struct StowagePlan {
    std::vector<Slot> slots;

    const Slot& slot_of(int id) const {
        if (id < 0 || id >= static_cast<int>(slots.size()))
            throw NotFoundError("unknown container id " + std::to_string(id));
        return slots[static_cast<std::size_t>(id)];
    }
    int size() const { return static_cast<int>(slots.size()); }

    bool operator==(const StowagePlan&) const = default;
};

/// Dense per-cell lookup: container id or kEmpty. Mutable so constructive
/// solvers can maintain one incrementally.
class OccupancyGrid {
public:
    static constexpr int kEmpty = -1;

    explicit OccupancyGrid(const YardConfig& yard);

    const YardConfig& yard() const { return yard_; }

    int at(const Slot& s) const { return cells_[index(s)]; }
    bool occupied(const Slot& s) const { return at(s) != kEmpty; }
    bool empty(const Slot& s) const { return at(s) == kEmpty; }

    void place(const Slot& s, int id);
    void clear(const Slot& s);

    /// Cells occupied overall.
    int count() const { return count_; }

private:
    std::size_t index(const Slot& s) const;

    YardConfig yard_;
    std::vector<int> cells_;
    int count_ = 0;
};

/// Builds the dense grid for a plan. Throws IntegrityError naming both
/// container ids if two containers share a slot, BoundsError if a slot is
/// outside the yard.
OccupancyGrid occupancy(const StowagePlan& plan, const Instance& inst);

/// Container ids strictly above `id` in its stack, ordered by increasing z.
std::vector<int> stack_above(const StowagePlan& plan, const Instance& inst, int id);

} // namespace yardstack
