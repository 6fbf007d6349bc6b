#pragma once

#include <chrono>
#include <optional>

#include "yardstack/builder.hpp"
#include "yardstack/objective.hpp"

namespace yardstack {

struct HsParams {
    int hms = 50;        // harmony memory size
    double hmcr = 0.95;  // memory consideration rate, recommended 0.7..0.99
    double par = 0.1;    // pitch adjustment rate, recommended 0.1..0.5
    // Patience: stop after n_iter_stall * hms consecutive improvisations in
    // which no candidate was good enough to enter the memory.
    int n_iter_stall = 20;
    long max_improvisations = 100000;
    int bw_swaps = 1;    // discrete bandwidth: same-type swaps per adjustment

    void validate() const;
};

/// Population of stored plans with cached fitness. worst_index always points
/// at a maximal-total entry (ties resolved to the lowest index).
struct HarmonyMemory {
    struct Entry {
        StowagePlan plan;
        Fitness fitness;
    };

    std::vector<Entry> entries;
    int worst_index = 0;

    int best_index() const;
    void recompute_worst();
};

struct SolveResult {
    StowagePlan best_plan;
    Fitness best_fitness;
    int f_initial = 0; // best total right after initialization
    int f_final = 0;   // best total at termination
    long improvisations = 0;
    std::chrono::milliseconds elapsed{0};
};

/// Fill a memory with independently constructed feasible plans.
HarmonyMemory init_memory(const Instance& inst, const HsParams& params, Rng& rng,
                          const FeasibilityOptions& opts = {});

/// Build one new feasible plan: a uniformly random memory entry donates the
/// remembered slots; containers are visited in a random order and each takes
/// the donor's slot with probability hmcr (falling back to a uniformly
/// random feasible slot if the donated one is taken or invalid), otherwise
/// draws a random feasible slot directly. With probability par the finished
/// plan is pitch-adjusted by bw_swaps same-type swaps.
StowagePlan improvise(const HarmonyMemory& memory, const Instance& inst,
                      const HsParams& params, Rng& rng,
                      const FeasibilityOptions& opts = {});

/// Replace the worst entry if the candidate is strictly better; ties are
/// rejected. Returns whether the candidate was accepted.
bool update_memory(HarmonyMemory& memory, HarmonyMemory::Entry candidate);

/// Full harmony-search run: init, improvise/update loop, termination on
/// stall, improvisation cap, optional time budget, or a proven optimum of 0.
SolveResult solve(const Instance& inst, const HsParams& params, Rng& rng,
                  std::optional<std::chrono::milliseconds> deadline = std::nullopt,
                  const FeasibilityOptions& opts = {});

} // namespace yardstack
