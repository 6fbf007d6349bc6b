#pragma once

#include <optional>

#include "yardstack/model.hpp"
#include "yardstack/rng.hpp"

namespace yardstack {

struct SwapMove {
    int a = 0;
    int b = 0;
    Slot slot_a_after; // slot `a` occupies after the swap (b's old slot)
    Slot slot_b_after;
};

/// Exchange the slots of two random containers of the same type: draws a
/// container uniformly, then a second uniformly among that type (the same
/// container may be drawn again, which leaves the plan unchanged). Same-type
/// swaps preserve feasibility since every rule depends only on the type
/// occupying each cell. Returns the applied move, or nullopt for the no-op.
std::optional<SwapMove> random_same_type_swap(StowagePlan& plan,
                                              const Instance& inst, Rng& rng);

} // namespace yardstack
