// Scratch probe: dissect LIFO dead ends on table3-instance5 seed 6.
#include <cstdio>
#include <vector>

#include "yardstack/builder.hpp"
#include "yardstack/instances.hpp"

using namespace yardstack;

int main() {
    const std::uint64_t seed = 6;
    Rng irng = Rng(seed).split(1);
    Instance inst = generate(preset("table3-instance5"), irng);
    const YardConfig& yard = inst.yard();
    Rng rng = Rng(seed).split(2);

    std::vector<int> order(static_cast<std::size_t>(inst.size()));
    for (int i = 0; i < inst.size(); ++i)
        order[(size_t)i] = i;

    for (int round = 0; round < 3; ++round) {
        rng.shuffle(order);
        OccupancyGrid grid(yard);
        RemainingDemand demand = RemainingDemand::of(inst);
        FeasibilityOptions opts;
        int placed_count = 0;
        int dead_id = -1;
        for (int id : order) {
            const Container& c = inst.container(id);
            RemainingDemand after = demand;
            after.remove(c.ctype);
            bool placed = false;
            for (int b = 0; b < yard.num_blocks() && !placed; ++b)
                for (int x = 0; x < yard.n1 && !placed; ++x)
                    for (int y = 0; y < yard.n2 && !placed; ++y)
                        for (int z = 0; z < yard.n3 && !placed; ++z) {
                            const Slot s{b, x, y, z};
                            if (constructive_ok(grid, inst, c, s, after, opts)) {
                                grid.place(s, id);
                                demand = after;
                                placed = true;
                            }
                        }
            if (!placed) {
                dead_id = id;
                break;
            }
            ++placed_count;
        }
        if (dead_id < 0) {
            std::printf("round %d: completed\n", round);
            continue;
        }
        std::printf("round %d: stuck after %d placements on container type=%d; demand r=%d t=%d os=%d o=%d\n",
                    round, placed_count, (int)inst.container(dead_id).ctype,
                    demand.reefer, demand.tank, demand.open_side, demand.other);
        for (int b = 0; b < yard.num_blocks(); ++b) {
            std::printf("  block %d:%s\n", b, yard.is_reefer_block(b) ? " (reefer)" : "");
            for (int y = 0; y < yard.n2; ++y) {
                std::printf("    ");
                for (int x = 0; x < yard.n1; ++x) {
                    char col[4] = {'.', '.', '.'};
                    for (int z = 0; z < yard.n3; ++z) {
                        int id2 = grid.at(Slot{b, x, y, z});
                        if (id2 != OccupancyGrid::kEmpty)
                            col[z] = '0' + (int)inst.container(id2).ctype;
                    }
                    std::printf("%c%c%c ", col[0], col[1], col[2]);
                }
                std::printf("\n");
            }
        }
    }
    return 0;
}
