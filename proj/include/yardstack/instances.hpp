#pragma once

#include <array>
#include <string>
#include <vector>

#include "yardstack/model.hpp"
#include "yardstack/rng.hpp"

namespace yardstack {

enum class DeparturePolicyKind {
    UniformRandom, // independent draws in [lo, hi]
    AllEqual,      // every container departs at `value`
    Permutation,   // departures are a random permutation of 1..N
};

struct DeparturePolicy {
    DeparturePolicyKind kind = DeparturePolicyKind::UniformRandom;
    int lo = 1;
    int hi = 100;
    int value = 1; // AllEqual only
};

/// Recipe for a generated instance: yard, per-type container counts
/// (index = type code - 1), and how departure dates are drawn.
struct InstanceSpec {
    YardConfig yard;
    std::array<int, kNumContainerTypes> counts{};
    DeparturePolicy departures;

    int total() const;
    void validate() const;
};

/// Materialize an instance: sequential ids grouped by ascending type code,
/// departures drawn from the policy.
Instance generate(const InstanceSpec& spec, Rng& rng);

/// Named configurations used by the bundled experiments. Unknown names raise
/// ValidationError listing what exists.
InstanceSpec preset(const std::string& name);
std::vector<std::string> preset_names();

/// Preset groups driving multi-instance experiment commands ("table1",
/// "table3"/"table4"); single preset names resolve to themselves.
std::vector<std::string> resolve_preset_group(const std::string& name);

// JSON serialization. Output is canonical: sorted keys, records in id order,
// two-space indent, trailing newline, so equal values save byte-identically.
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);
void save_instance(const Instance& inst, const std::string& path);
Instance load_instance(const std::string& path);

std::string plan_to_json(const StowagePlan& plan);
/// Validates totality, injectivity and bounds against the instance, but not
/// feasibility: infeasible plans may be stored for diagnostics.
StowagePlan plan_from_json(const std::string& text, const Instance& inst);
void save_plan(const StowagePlan& plan, const std::string& path);
StowagePlan load_plan(const std::string& path, const Instance& inst);

} // namespace yardstack
