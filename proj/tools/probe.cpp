// Scratch probe for convergence behaviour; not part of the deliverable.
#include <cstdio>
#include <cstdlib>

#include "yardstack/harness.hpp"

using namespace yardstack;

int main(int argc, char** argv) {
    ExperimentConfig cfg;
    cfg.hs.hms = 30;
    cfg.hs.n_iter_stall = 20;
    cfg.ga.population_size = 30;
    cfg.ga.generations_stall = 20;
    if (argc > 1)
        cfg.ga.mutation_rate = std::atof(argv[1]);
    cfg.measure_time = true;
    cfg.threads = 8;

    std::vector<std::uint64_t> seeds;
    for (std::uint64_t s = 1; s <= 15; ++s)
        seeds.push_back(s);

    for (int i = 1; i <= 5; ++i) {
        const std::string name = "table3-instance" + std::to_string(i);
        auto res = compare(name, seeds, cfg);
        int failures = static_cast<int>(res.failures.size());
        for (const auto& f : res.failures)
            std::printf("  FAILURE %s %s seed=%llu: %s\n", f.instance_name.c_str(),
                        solver_kind_name(f.solver), (unsigned long long)f.seed,
                        f.message.c_str());
        double mean_hs = 0, mean_ga = 0, mean_lifo = 0, ms_hs = 0, ms_ga = 0, ms_lifo = 0;
        int zero_hs = 0, zero_ga = 0;
        for (const auto& r : res.records) {
            if (r.solver == SolverKind::HS) {
                mean_hs += r.f_final;
                ms_hs += r.elapsed_ms;
                zero_hs += r.f_final == 0;
            }
            if (r.solver == SolverKind::GA) {
                mean_ga += r.f_final;
                ms_ga += r.elapsed_ms;
                zero_ga += r.f_final == 0;
            }
            if (r.solver == SolverKind::LIFO) {
                mean_lifo += r.f_final;
                ms_lifo += r.elapsed_ms;
            }
        }
        int n = 15;
        std::printf(
            "%s  HS mean=%.2f zeros=%d/%d (%.0fms)  GA mean=%.2f zeros=%d/%d (%.0fms)  "
            "LIFO mean=%.2f (%.0fms)  failures=%d\n",
            name.c_str(), mean_hs / n, zero_hs, n, ms_hs / n, mean_ga / n, zero_ga, n,
            ms_ga / n, mean_lifo / n, ms_lifo / n, failures);
    }
    return 0;
}
