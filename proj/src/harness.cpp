#include "yardstack/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "yardstack/feasibility.hpp"
#include "yardstack/objective.hpp"

namespace yardstack {

namespace {

// Derivation tags so the instance draw and the solver stream never overlap.
constexpr std::uint64_t kInstanceStream = 1;
constexpr std::uint64_t kSolverStream = 2;

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string feas_tag(const FeasibilityOptions& feas) {
    std::string s = "os=";
    s += feas.open_side == OpenSideRule::Adjacent ? "adjacent" : "full_row";
    s += ";rx=";
    s += feas.reefer_exclusive ? "on" : "off";
    s += ";tb=";
    s += feas.tank_bidirectional ? "on" : "off";
    return s;
}

} // namespace

const char* solver_kind_name(SolverKind k) {
    switch (k) {
    case SolverKind::HS: return "hs";
    case SolverKind::GA: return "ga";
    case SolverKind::LIFO: return "lifo";
    }
    return "?";
}

SolverKind solver_kind_from_name(const std::string& name) {
    if (name == "hs") return SolverKind::HS;
    if (name == "ga") return SolverKind::GA;
    if (name == "lifo") return SolverKind::LIFO;
    throw ValidationError("unknown solver '" + name + "'; expected hs, ga or lifo");
}

std::string params_digest(SolverKind solver, const ExperimentConfig& config) {
    std::ostringstream s;
    s << solver_kind_name(solver) << ";";
    switch (solver) {
    case SolverKind::HS:
        s << "hms=" << config.hs.hms << ";hmcr=" << format_double(config.hs.hmcr)
          << ";par=" << format_double(config.hs.par)
          << ";stall=" << config.hs.n_iter_stall
          << ";max=" << config.hs.max_improvisations
          << ";bw=" << config.hs.bw_swaps << ";";
        break;
    case SolverKind::GA:
        s << "pop=" << config.ga.population_size
          << ";stall=" << config.ga.generations_stall
          << ";maxgen=" << config.ga.max_generations
          << ";cx=" << format_double(config.ga.crossover_rate)
          << ";mut=" << format_double(config.ga.mutation_rate) << ";";
        break;
    case SolverKind::LIFO:
        break;
    }
    s << feas_tag(config.feas);
    return hex64(fnv1a(s.str()));
}

InstanceSource InstanceSource::from_preset(const std::string& name) {
    preset(name); // validate early
    InstanceSource src;
    src.name_ = name;
    src.is_preset_ = true;
    return src;
}

InstanceSource InstanceSource::fixed(std::string name, Instance inst) {
    InstanceSource src;
    src.name_ = std::move(name);
    src.fixed_ = std::move(inst);
    return src;
}

Instance InstanceSource::materialize(std::uint64_t seed) const {
    if (!is_preset_)
        return fixed_;
    Rng rng = Rng(seed).split(kInstanceStream);
    return generate(preset(name_), rng);
}

namespace {

struct Task {
    const InstanceSource* source;
    SolverKind solver;
    std::uint64_t seed;
};

// One solver run plus re-validation of the plan it returned.
ExperimentRecord execute(const Task& task, const ExperimentConfig& config) {
    const Instance inst = task.source->materialize(task.seed);
    Rng rng = Rng(task.seed).split(kSolverStream);

    SolveResult result;
    switch (task.solver) {
    case SolverKind::HS:
        result = solve(inst, config.hs, rng, std::nullopt, config.feas);
        break;
    case SolverKind::GA:
        result = ga_solve(inst, config.ga, rng, std::nullopt, config.feas);
        break;
    case SolverKind::LIFO:
        result = lifo_solve(inst, rng, config.feas);
        break;
    }

    const auto violations = check_all(result.best_plan, inst, config.feas);
    if (!violations.empty())
        throw Error("solver returned an infeasible plan: " + violations.front().detail);
    if (evaluate(result.best_plan, inst).total != result.best_fitness.total ||
        result.best_fitness.total != result.f_final)
        throw Error("reported fitness does not match re-evaluation");

    ExperimentRecord record;
    record.instance_name = task.source->name();
    record.solver = task.solver;
    record.seed = task.seed;
    record.f_initial = result.f_initial;
    record.f_final = result.f_final;
    record.elapsed_ms = config.measure_time ? result.elapsed.count() : 0;
    record.params_digest = params_digest(task.solver, config);
    return record;
}

struct Outcome {
    bool ok = false;
    ExperimentRecord record;
    RunFailure failure;
};

std::vector<Outcome> run_tasks(const std::vector<Task>& tasks,
                               const ExperimentConfig& config) {
    std::vector<Outcome> outcomes(tasks.size());
    const int threads = std::max(1, config.threads);
    auto worker_body = [&](std::atomic<std::size_t>& cursor) {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= tasks.size())
                return;
            try {
                outcomes[i].record = execute(tasks[i], config);
                outcomes[i].ok = true;
            } catch (const std::exception& e) {
                outcomes[i].ok = false;
                outcomes[i].failure = {tasks[i].source->name(), tasks[i].solver,
                                       tasks[i].seed, e.what()};
            }
        }
    };
    if (threads == 1) {
        std::atomic<std::size_t> cursor{0};
        worker_body(cursor);
    } else {
        std::atomic<std::size_t> cursor{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] { worker_body(cursor); });
        for (auto& th : pool)
            th.join();
    }
    return outcomes;
}

bool record_equal_ignoring_time(const ExperimentRecord& a, const ExperimentRecord& b) {
    return a.instance_name == b.instance_name && a.solver == b.solver &&
           a.seed == b.seed && a.f_initial == b.f_initial && a.f_final == b.f_final &&
           a.params_digest == b.params_digest;
}

void sort_records(std::vector<ExperimentRecord>& records) {
    std::sort(records.begin(), records.end(),
              [](const ExperimentRecord& a, const ExperimentRecord& b) {
                  return std::tie(a.instance_name, a.solver, a.seed, a.params_digest) <
                         std::tie(b.instance_name, b.solver, b.seed, b.params_digest);
              });
}

} // namespace

ExperimentResult run_matrix(const std::vector<InstanceSource>& sources,
                            const std::vector<SolverKind>& solvers,
                            const ExperimentConfig& config,
                            const std::vector<std::uint64_t>& seeds) {
    std::vector<Task> tasks;
    for (const InstanceSource& source : sources)
        for (SolverKind solver : solvers)
            for (std::uint64_t seed : seeds)
                tasks.push_back({&source, solver, seed});

    ExperimentResult result;
    std::vector<Outcome> reference;
    const int reps = std::max(1, config.repetitions);
    for (int rep = 0; rep < reps; ++rep) {
        std::vector<Outcome> outcomes = run_tasks(tasks, config);
        if (rep == 0) {
            reference = std::move(outcomes);
            continue;
        }
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            const bool same =
                reference[i].ok == outcomes[i].ok &&
                (!reference[i].ok ||
                 record_equal_ignoring_time(reference[i].record, outcomes[i].record));
            if (!same)
                throw Error("repetition mismatch: run is not deterministic for seed " +
                            std::to_string(tasks[i].seed));
        }
    }

    for (Outcome& outcome : reference) {
        if (outcome.ok)
            result.records.push_back(std::move(outcome.record));
        else
            result.failures.push_back(std::move(outcome.failure));
    }
    sort_records(result.records);
    return result;
}

ExperimentResult run_experiment(const InstanceSource& source, SolverKind solver,
                                const ExperimentConfig& config,
                                const std::vector<std::uint64_t>& seeds) {
    return run_matrix({source}, {solver}, config, seeds);
}

ExperimentResult compare(const std::string& preset_or_group,
                         const std::vector<std::uint64_t>& seeds,
                         const ExperimentConfig& config) {
    std::vector<InstanceSource> sources;
    for (const std::string& name : resolve_preset_group(preset_or_group))
        sources.push_back(InstanceSource::from_preset(name));
    return run_matrix(sources, {SolverKind::HS, SolverKind::GA, SolverKind::LIFO},
                      config, seeds);
}

namespace {

struct GroupStats {
    std::string instance_name;
    SolverKind solver;
    std::string digest;
    std::vector<const ExperimentRecord*> rows;

    double mean(double (*get)(const ExperimentRecord&)) const {
        double sum = 0.0;
        for (const auto* r : rows)
            sum += get(*r);
        return sum / static_cast<double>(rows.size());
    }
    double stddev(double (*get)(const ExperimentRecord&)) const {
        if (rows.size() < 2)
            return 0.0;
        const double m = mean(get);
        double acc = 0.0;
        for (const auto* r : rows)
            acc += (get(*r) - m) * (get(*r) - m);
        return std::sqrt(acc / static_cast<double>(rows.size() - 1));
    }
};

// Groups keep their first-seen order, which is deterministic because the
// records are already sorted.
std::vector<GroupStats> group_records(const std::vector<ExperimentRecord>& records) {
    std::vector<GroupStats> groups;
    for (const ExperimentRecord& r : records) {
        GroupStats* found = nullptr;
        for (GroupStats& g : groups)
            if (g.instance_name == r.instance_name && g.solver == r.solver &&
                g.digest == r.params_digest)
                found = &g;
        if (found)
            found->rows.push_back(&r);
        else
            groups.push_back({r.instance_name, r.solver, r.params_digest, {&r}});
    }
    return groups;
}

double get_f_initial(const ExperimentRecord& r) { return r.f_initial; }
double get_f_final(const ExperimentRecord& r) { return r.f_final; }
double get_elapsed(const ExperimentRecord& r) {
    return static_cast<double>(r.elapsed_ms);
}

std::vector<std::vector<std::string>> table_cells(
    const std::vector<ExperimentRecord>& records) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"instance", "solver", "seed", "f_initial", "f_final",
                    "elapsed_ms", "params_digest"});
    for (const ExperimentRecord& r : records)
        rows.push_back({r.instance_name, solver_kind_name(r.solver),
                        std::to_string(r.seed), std::to_string(r.f_initial),
                        std::to_string(r.f_final), std::to_string(r.elapsed_ms),
                        r.params_digest});
    for (const GroupStats& g : group_records(records)) {
        rows.push_back({g.instance_name, solver_kind_name(g.solver), "mean",
                        format_double(g.mean(get_f_initial)),
                        format_double(g.mean(get_f_final)),
                        format_double(g.mean(get_elapsed)), g.digest});
        rows.push_back({g.instance_name, solver_kind_name(g.solver), "stddev",
                        format_double(g.stddev(get_f_initial)),
                        format_double(g.stddev(get_f_final)),
                        format_double(g.stddev(get_elapsed)), g.digest});
    }
    return rows;
}

std::string csv_field(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

} // namespace

std::string render_table(const std::vector<ExperimentRecord>& records,
                         TableFormat format) {
    const auto rows = table_cells(records);
    std::ostringstream out;
    if (format == TableFormat::Csv) {
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << csv_field(row[i]);
            out << "\n";
        }
        return out.str();
    }
    std::vector<std::size_t> widths(rows.front().size(), 0);
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << row[i];
            if (i + 1 < row.size())
                out << std::string(widths[i] - row[i].size() + 2, ' ');
        }
        out << "\n";
    }
    return out.str();
}

void emit_table(const std::vector<ExperimentRecord>& records, TableFormat format,
                std::ostream& out) {
    out << render_table(records, format);
    if (!out)
        throw Error("failed writing table to stream");
}

void emit_table(const std::vector<ExperimentRecord>& records, TableFormat format,
                const std::string& path) {
    if (path.empty() || path == "-") {
        emit_table(records, format, std::cout);
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error("cannot write file: " + path);
    emit_table(records, format, out);
}

std::vector<std::uint64_t> parse_seed_spec(const std::string& spec) {
    std::vector<std::uint64_t> seeds;
    std::stringstream ss(spec);
    std::string part;
    auto parse_u64 = [&spec](const std::string& text) {
        try {
            std::size_t pos = 0;
            const unsigned long long v = std::stoull(text, &pos);
            if (pos != text.size())
                throw std::invalid_argument("trailing characters");
            return static_cast<std::uint64_t>(v);
        } catch (const std::exception&) {
            throw ValidationError("bad seed spec '" + spec +
                                  "': expected N, A,B,C or A..B");
        }
    };
    while (std::getline(ss, part, ',')) {
        if (part.empty())
            throw ValidationError("bad seed spec '" + spec + "': empty element");
        const auto dots = part.find("..");
        if (dots == std::string::npos) {
            seeds.push_back(parse_u64(part));
            continue;
        }
        const std::uint64_t lo = parse_u64(part.substr(0, dots));
        const std::uint64_t hi = parse_u64(part.substr(dots + 2));
        if (hi < lo)
            throw ValidationError("bad seed range '" + part + "'");
        for (std::uint64_t s = lo; s <= hi; ++s)
            seeds.push_back(s);
    }
    if (seeds.empty())
        throw ValidationError("seed spec '" + spec + "' yields no seeds");
    return seeds;
}

} // namespace yardstack
