// Scratch probe: dissect builder dead ends on table3-instance5.
#include <cstdio>
#include <vector>

#include "yardstack/builder.hpp"
#include "yardstack/instances.hpp"

using namespace yardstack;

int main() {
    Rng inst_rng(42);
    Instance inst = generate(preset("table3-instance5"), inst_rng);
    const YardConfig& yard = inst.yard();
    Rng rng(7);
    FeasibilityOptions opts;

    int fails = 0;
    for (int attempt = 0; attempt < 200 && fails < 3; ++attempt) {
        OccupancyGrid grid(yard);
        RemainingDemand demand = RemainingDemand::of(inst);
        std::vector<std::vector<int>> pools(7);
        for (const Container& c : inst.containers())
            pools[static_cast<std::size_t>(static_cast<int>(c.ctype))].push_back(c.id);
        int unstored = inst.size();

        bool progress = true;
        while (unstored > 0 && progress) {
            progress = false;
            for (int b = 0; b < yard.num_blocks(); ++b)
                for (int x = 0; x < yard.n1; ++x)
                    for (int y = 0; y < yard.n2; ++y)
                        for (int z = 0; z < yard.n3; ++z) {
                            const Slot s{b, x, y, z};
                            if (grid.occupied(s))
                                continue;
                            std::vector<int> live;
                            for (int t = 1; t <= 6; ++t)
                                if (!pools[t].empty())
                                    live.push_back(t);
                            if (live.empty())
                                continue;
                            for (int k = 0; k < unstored; ++k) {
                                int t = live[rng.uniform_int(0, (int)live.size() - 1)];
                                int pi = rng.uniform_int(0, (int)pools[t].size() - 1);
                                int id = pools[t][pi];
                                RemainingDemand after = demand;
                                after.remove(inst.container(id).ctype);
                                if (constructive_ok(grid, inst, inst.container(id), s,
                                                    after, opts)) {
                                    grid.place(s, id);
                                    pools[t].erase(pools[t].begin() + pi);
                                    demand = after;
                                    --unstored;
                                    progress = true;
                                    break;
                                }
                            }
                        }
        }
        if (unstored > 0) {
            ++fails;
            std::printf("dead end: unstored=%d  demand r=%d t=%d os=%d o=%d\n", unstored,
                        demand.reefer, demand.tank, demand.open_side, demand.other);
            std::printf("  capacity_sufficient says: %s\n",
                        capacity_sufficient(grid, inst, demand, opts) ? "OK" : "DEAD");
            for (int t = 1; t <= 6; ++t)
                if (!pools[t].empty())
                    std::printf("  type %d remaining: %zu\n", t, pools[t].size());
            // count feasible slots for one remaining container of each type
            for (int t = 1; t <= 6; ++t)
                if (!pools[t].empty()) {
                    auto fs = feasible_slots(grid, inst, inst.container(pools[t][0]), opts);
                    std::printf("  type %d feasible slots (ignoring guard): %zu\n", t,
                                fs.size());
                }
            // dump stacks of block 0..2 (regular)
            for (int b = 0; b < yard.num_blocks(); ++b) {
                std::printf("  block %d:%s\n", b, yard.is_reefer_block(b) ? " (reefer)" : "");
                for (int y = 0; y < yard.n2; ++y) {
                    std::printf("    ");
                    for (int x = 0; x < yard.n1; ++x) {
                        char col[4] = {'.', '.', '.'};
                        for (int z = 0; z < yard.n3; ++z) {
                            int id = grid.at(Slot{b, x, y, z});
                            if (id != OccupancyGrid::kEmpty)
                                col[z] = '0' + static_cast<int>(inst.container(id).ctype);
                        }
                        std::printf("%c%c%c ", col[0], col[1], col[2]);
                    }
                    std::printf("\n");
                }
            }
        }
    }
    return 0;
}
