// Scratch probe: per-attempt builder success rates on the tight presets.
#include <cstdio>

#include "yardstack/builder.hpp"
#include "yardstack/instances.hpp"

using namespace yardstack;

int main() {
    for (const char* name : {"table3-instance1", "table3-instance2", "table3-instance4",
                             "table3-instance5", "table2", "table1-row5"}) {
        Rng inst_rng(42);
        Instance inst = generate(preset(name), inst_rng);
        Rng rng(7);
        int ok = 0;
        const int attempts = 2000;
        BuildLimits one{0}; // no retries: count raw attempt successes
        for (int i = 0; i < attempts; ++i) {
            try {
                create_solution(inst, rng, {}, one);
                ++ok;
            } catch (const ConstructionError&) {
            }
        }
        std::printf("%-18s raw attempt success: %d/%d\n", name, ok, attempts);
    }
    return 0;
}
