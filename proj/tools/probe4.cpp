// Scratch probe: per-seed details for the stubborn instances.
#include <cstdio>
#include <cstdlib>

#include "yardstack/baselines.hpp"
#include "yardstack/harmony.hpp"
#include "yardstack/instances.hpp"

using namespace yardstack;

int main(int argc, char** argv) {
    const char* name = argc > 1 ? argv[1] : "table3-instance1";
    HsParams hp;
    hp.hms = 30;
    hp.n_iter_stall = 20;
    GaParams gp;
    gp.population_size = 30;
    gp.generations_stall = 20;
    if (argc > 2)
        gp.mutation_rate = std::atof(argv[2]);

    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        Rng irng = Rng(seed).split(1);
        Instance inst = generate(preset(name), irng);
        Rng hs_rng = Rng(seed).split(2);
        Rng ga_rng = Rng(seed).split(2);
        try {
            SolveResult hs = solve(inst, hp, hs_rng);
            SolveResult ga = ga_solve(inst, gp, ga_rng);
            std::printf(
                "seed %2llu  HS f_i=%3d f_f=%2d improv=%6ld (%4lldms)   GA f_i=%3d "
                "f_f=%2d evals=%6ld (%4lldms)\n",
                (unsigned long long)seed, hs.f_initial, hs.f_final, hs.improvisations,
                (long long)hs.elapsed.count(), ga.f_initial, ga.f_final,
                ga.improvisations, (long long)ga.elapsed.count());
        } catch (const std::exception& e) {
            std::printf("seed %2llu  EXCEPTION: %s\n", (unsigned long long)seed, e.what());
        }
    }
    return 0;
}
