#pragma once

#include <string>
#include <vector>

#include "yardstack/model.hpp"

namespace yardstack {

enum class ViolationKind {
    Floating,            // occupied cell with an empty cell below it
    AboveOpenTopOrSide,  // something stacked on an open-top or open-side container
    OpenSideBlocked,     // open-side container with its lateral access occupied
    ReeferBlockMismatch, // reefer outside a powered block, or non-reefer inside one
    NonTankOnTank,       // non-tank container resting on a tank
    TankNotOnTank,       // elevated tank resting on a non-tank
};

const char* violation_kind_name(ViolationKind k);

struct ConstraintViolation {
    ViolationKind kind;
    int subject; // offending container id
    std::string detail;
};

enum class OpenSideRule {
    Adjacent, // the +X neighbour cell at the same level must be empty
    FullRow,  // every +X cell at the same (y, z) level must be empty
};

/// Strictness switches for the rules whose published statements are ambiguous.
struct FeasibilityOptions {
    OpenSideRule open_side = OpenSideRule::Adjacent;
    bool reefer_exclusive = true;    // non-reefers barred from reefer blocks
    bool tank_bidirectional = true;  // elevated tanks must rest on tanks

    bool operator==(const FeasibilityOptions&) const = default;
};

// Individual checkers. Each is total over its inputs and reports every
// violation it finds rather than stopping at the first.
std::vector<ConstraintViolation> check_support(const OccupancyGrid& grid);
std::vector<ConstraintViolation> check_top_access(const OccupancyGrid& grid,
                                                  const Instance& inst);
std::vector<ConstraintViolation> check_open_side(const OccupancyGrid& grid,
                                                 const Instance& inst,
                                                 const FeasibilityOptions& opts = {});
std::vector<ConstraintViolation> check_reefer_block(const StowagePlan& plan,
                                                    const Instance& inst,
                                                    const FeasibilityOptions& opts = {});
std::vector<ConstraintViolation> check_tank_stacking(const OccupancyGrid& grid,
                                                     const Instance& inst,
                                                     const FeasibilityOptions& opts = {});

/// All checkers over a full plan. Empty result <=> plan feasible. Throws
/// IntegrityError / BoundsError if the plan is not a valid assignment at all.
std::vector<ConstraintViolation> check_all(const StowagePlan& plan,
                                           const Instance& inst,
                                           const FeasibilityOptions& opts = {});

/// Incremental check used by constructive solvers: true iff placing `c` at
/// `slot` on top of the feasible partial occupancy `grid` keeps every rule
/// satisfied, including the lateral rule seen from both sides. Throws
/// BoundsError if `slot` is outside the yard.
bool placement_ok(const OccupancyGrid& grid, const Instance& inst,
                  const Container& c, const Slot& slot,
                  const FeasibilityOptions& opts = {});

/// Every slot where placement_ok holds for `c`, in (block, x, y, z) order.
std::vector<Slot> feasible_slots(const OccupancyGrid& grid, const Instance& inst,
                                 const Container& c,
                                 const FeasibilityOptions& opts = {});

/// Containers per floor z of one block; used to cross-check that per-cell
/// support implies monotone floor counts.
std::vector<int> floor_counts(const OccupancyGrid& grid, int block);

} // namespace yardstack
