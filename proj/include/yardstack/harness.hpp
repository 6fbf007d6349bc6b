#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "yardstack/baselines.hpp"
#include "yardstack/harmony.hpp"
#include "yardstack/instances.hpp"

namespace yardstack {

enum class SolverKind { HS, GA, LIFO };

const char* solver_kind_name(SolverKind k);
SolverKind solver_kind_from_name(const std::string& name);

struct ExperimentRecord {
    std::string instance_name;
    SolverKind solver = SolverKind::HS;
    std::uint64_t seed = 0;
    int f_initial = 0;
    int f_final = 0;
    std::int64_t elapsed_ms = 0;
    std::string params_digest;

    bool operator==(const ExperimentRecord&) const = default;
};

struct RunFailure {
    std::string instance_name;
    SolverKind solver = SolverKind::HS;
    std::uint64_t seed = 0;
    std::string message;
};

struct ExperimentConfig {
    HsParams hs;
    GaParams ga;
    FeasibilityOptions feas;
    // Wall-clock timing is off by default so repeated runs with the same
    // seeds emit byte-identical tables; switch on to fill elapsed_ms.
    bool measure_time = false;
    int threads = 1;
    int repetitions = 1; // re-run the whole seed list and verify records match
};

/// Where instances come from: a preset regenerated per seed (each seed draws
/// its own departure dates), or a fixed instance shared by every seed.
class InstanceSource {
public:
    static InstanceSource from_preset(const std::string& name);
    static InstanceSource fixed(std::string name, Instance inst);

    const std::string& name() const { return name_; }
    Instance materialize(std::uint64_t seed) const;

private:
    std::string name_;
    bool is_preset_ = false;
    Instance fixed_;
};

struct ExperimentResult {
    std::vector<ExperimentRecord> records; // sorted; one per successful run
    std::vector<RunFailure> failures;
};

/// Short stable fingerprint of the solver parameters and strictness options.
std::string params_digest(SolverKind solver, const ExperimentConfig& config);

/// One solver over one source, one run per seed. Each run re-validates the
/// returned plan (all rules plus a fresh fitness evaluation) before its
/// record is kept; failures are collected, not thrown. With repetitions > 1
/// the whole seed list is re-run and compared as a determinism check.
ExperimentResult run_experiment(const InstanceSource& source, SolverKind solver,
                                const ExperimentConfig& config,
                                const std::vector<std::uint64_t>& seeds);

/// Cartesian product of sources x solvers x seeds, sharing one task pool.
ExperimentResult run_matrix(const std::vector<InstanceSource>& sources,
                            const std::vector<SolverKind>& solvers,
                            const ExperimentConfig& config,
                            const std::vector<std::uint64_t>& seeds);

/// Three-solver comparison (HS, GA, LIFO) over a preset name or group.
ExperimentResult compare(const std::string& preset_or_group,
                         const std::vector<std::uint64_t>& seeds,
                         const ExperimentConfig& config);

enum class TableFormat { Csv, Aligned };

/// Render records plus mean/stddev footer rows per (instance, solver,
/// params) group. CSV columns:
/// instance,solver,seed,f_initial,f_final,elapsed_ms,params_digest
std::string render_table(const std::vector<ExperimentRecord>& records,
                         TableFormat format);
void emit_table(const std::vector<ExperimentRecord>& records, TableFormat format,
                std::ostream& out);
/// Writes to the given path, "-" meaning stdout. Throws Error on IO failure.
void emit_table(const std::vector<ExperimentRecord>& records, TableFormat format,
                const std::string& path);

/// Seed list syntax: "7" (one seed), "1,2,5" (list), "1..10" (inclusive range).
std::vector<std::uint64_t> parse_seed_spec(const std::string& spec);

} // namespace yardstack
