#pragma once

#include "yardstack/harmony.hpp"

namespace yardstack {

struct GaParams {
    int population_size = 30;
    int generations_stall = 20; // stop after this many generations without a new best
    int max_generations = 10000;
    double crossover_rate = 0.9;
    double mutation_rate = 0.1;

    void validate() const;
};

/// Genetic-algorithm baseline: random initial population, roulette-wheel
/// parent selection on inverted fitness, two-point crossover over the
/// container-indexed slot vector with repair of colliding or rule-breaking
/// offspring, same-type-swap mutation, and size-1 elitism. Termination
/// mirrors the harmony solver. SolveResult.improvisations counts offspring
/// evaluations.
SolveResult ga_solve(const Instance& inst, const GaParams& params, Rng& rng,
                     std::optional<std::chrono::milliseconds> deadline = std::nullopt,
                     const FeasibilityOptions& opts = {});

/// Departure-blind sequential stacking: containers arrive in a random order
/// and each takes the first slot, in (block, x, y, z) sweep order, where the
/// placement rules hold. A container with no safe slot yet waits at the back
/// of the queue. No search, so f_initial = f_final.
SolveResult lifo_solve(const Instance& inst, Rng& rng,
                       const FeasibilityOptions& opts = {});

} // namespace yardstack
