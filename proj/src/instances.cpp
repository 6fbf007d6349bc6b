#include "yardstack/instances.hpp"

#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace yardstack {

using nlohmann::json;

int InstanceSpec::total() const {
    return std::accumulate(counts.begin(), counts.end(), 0);
}

void InstanceSpec::validate() const {
    yard.validate();
    for (int t = 0; t < kNumContainerTypes; ++t)
        if (counts[static_cast<std::size_t>(t)] < 0)
            throw ValidationError("negative count for type " + std::to_string(t + 1));
    if (total() > yard.capacity())
        throw ValidationError("spec asks for " + std::to_string(total()) +
                              " containers but yard capacity is " +
                              std::to_string(yard.capacity()));
    const int reefers = counts[static_cast<int>(ContainerType::Reefer) - 1];
    if (reefers > yard.reefer_capacity())
        throw ValidationError("spec asks for " + std::to_string(reefers) +
                              " reefer containers but reefer-block capacity is " +
                              std::to_string(yard.reefer_capacity()));
}

Instance generate(const InstanceSpec& spec, Rng& rng) {
    spec.validate();
    const int n = spec.total();

    std::vector<int> departures(static_cast<std::size_t>(n));
    switch (spec.departures.kind) {
    case DeparturePolicyKind::UniformRandom:
        for (int i = 0; i < n; ++i)
            departures[static_cast<std::size_t>(i)] =
                rng.uniform_int(spec.departures.lo, spec.departures.hi);
        break;
    case DeparturePolicyKind::AllEqual:
        std::fill(departures.begin(), departures.end(), spec.departures.value);
        break;
    case DeparturePolicyKind::Permutation:
        std::iota(departures.begin(), departures.end(), 1);
        rng.shuffle(departures);
        break;
    }

    std::vector<Container> containers;
    containers.reserve(static_cast<std::size_t>(n));
    int id = 0;
    for (int t = 1; t <= kNumContainerTypes; ++t)
        for (int k = 0; k < spec.counts[static_cast<std::size_t>(t - 1)]; ++k) {
            containers.push_back(Container{id, static_cast<ContainerType>(t),
                                           departures[static_cast<std::size_t>(id)]});
            ++id;
        }
    return Instance(spec.yard, std::move(containers));
}

namespace {

InstanceSpec make_spec(YardConfig yard, std::array<int, kNumContainerTypes> counts) {
    InstanceSpec spec;
    spec.yard = yard;
    spec.counts = counts;
    return spec;
}

const std::map<std::string, InstanceSpec>& preset_table() {
    static const std::map<std::string, InstanceSpec> table = [] {
        std::map<std::string, InstanceSpec> m;
        const YardConfig yard44{4, 4, 3, 3, 3};
        const YardConfig yard33{3, 3, 3, 3, 3};
        const YardConfig yard32{3, 2, 3, 3, 3};

        m["table1-row1"] = make_spec(yard44, {10, 10, 0, 0, 0, 0});
        m["table1-row2"] = make_spec(yard44, {10, 10, 8, 0, 0, 0});
        m["table1-row3"] = make_spec(yard44, {10, 10, 8, 8, 0, 0});
        m["table1-row4"] = make_spec(yard44, {10, 10, 8, 8, 15, 0});
        m["table1-row5"] = make_spec(yard44, {10, 10, 8, 8, 15, 10});

        m["table2"] = make_spec(yard33, {20, 20, 15, 0, 10, 20});

        m["table3-instance1"] = make_spec(yard32, {50, 0, 15, 0, 0, 0});
        m["table3-instance2"] = make_spec(yard32, {25, 25, 10, 0, 0, 0});
        m["table3-instance3"] = make_spec(yard32, {0, 0, 8, 5, 7, 15});
        m["table3-instance4"] = make_spec(yard32, {0, 14, 8, 5, 7, 15});
        m["table3-instance5"] = make_spec(yard32, {25, 14, 9, 8, 7, 12});
        for (int i = 1; i <= 5; ++i)
            m["table4-instance" + std::to_string(i)] =
                m["table3-instance" + std::to_string(i)];
        return m;
    }();
    return table;
}

} // namespace

InstanceSpec preset(const std::string& name) {
    const auto& table = preset_table();
    const auto it = table.find(name);
    if (it == table.end()) {
        std::string names;
        for (const auto& [key, value] : table)
            names += (names.empty() ? "" : ", ") + key;
        throw ValidationError("unknown preset '" + name + "'; available: " + names);
    }
    return it->second;
}

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const auto& [key, value] : preset_table())
        names.push_back(key);
    return names;
}

std::vector<std::string> resolve_preset_group(const std::string& name) {
    if (name == "table1") {
        std::vector<std::string> out;
        for (int i = 1; i <= 5; ++i)
            out.push_back("table1-row" + std::to_string(i));
        return out;
    }
    if (name == "table3" || name == "table4") {
        std::vector<std::string> out;
        for (int i = 1; i <= 5; ++i)
            out.push_back("table3-instance" + std::to_string(i));
        return out;
    }
    preset(name); // throws on unknown names
    return {name};
}

namespace {

json parse_document(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("failed to parse " + what + ": " + e.what());
    }
}

int require_int(const json& node, const char* field, const std::string& where) {
    if (!node.contains(field) || !node[field].is_number_integer())
        throw ValidationError(where + ": missing or non-integer field '" +
                              std::string(field) + "'");
    return node[field].get<int>();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw ValidationError("cannot write file: " + path);
    out << text;
    if (!out)
        throw ValidationError("write failed: " + path);
}

} // namespace

std::string instance_to_json(const Instance& inst) {
    json doc;
    doc["yard"] = {{"n_regular", inst.yard().n_regular},
                   {"n_reefer", inst.yard().n_reefer},
                   {"n1", inst.yard().n1},
                   {"n2", inst.yard().n2},
                   {"n3", inst.yard().n3}};
    json containers = json::array();
    for (const Container& c : inst.containers())
        containers.push_back({{"id", c.id},
                              {"type", static_cast<int>(c.ctype)},
                              {"departure", c.departure}});
    doc["containers"] = std::move(containers);
    return doc.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
    const json doc = parse_document(text, "instance");
    if (!doc.contains("yard") || !doc["yard"].is_object())
        throw ValidationError("instance: missing 'yard' object");
    if (!doc.contains("containers") || !doc["containers"].is_array())
        throw ValidationError("instance: missing 'containers' array");

    const json& y = doc["yard"];
    YardConfig yard;
    yard.n_regular = require_int(y, "n_regular", "yard");
    yard.n_reefer = require_int(y, "n_reefer", "yard");
    yard.n1 = require_int(y, "n1", "yard");
    yard.n2 = require_int(y, "n2", "yard");
    yard.n3 = require_int(y, "n3", "yard");

    std::vector<Container> containers;
    int index = 0;
    for (const json& node : doc["containers"]) {
        const std::string where = "containers[" + std::to_string(index++) + "]";
        if (!node.is_object())
            throw ValidationError(where + ": expected an object");
        Container c;
        c.id = require_int(node, "id", where);
        c.ctype = container_type_from_code(require_int(node, "type", where));
        c.departure = require_int(node, "departure", where);
        containers.push_back(c);
    }
    return Instance(yard, std::move(containers));
}

void save_instance(const Instance& inst, const std::string& path) {
    write_file(path, instance_to_json(inst));
}

Instance load_instance(const std::string& path) {
    try {
        return instance_from_json(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

std::string plan_to_json(const StowagePlan& plan) {
    json assignments = json::array();
    for (int id = 0; id < plan.size(); ++id) {
        const Slot& s = plan.slot_of(id);
        assignments.push_back(
            {{"id", id}, {"block", s.block}, {"x", s.x}, {"y", s.y}, {"z", s.z}});
    }
    json doc;
    doc["assignments"] = std::move(assignments);
    return doc.dump(2) + "\n";
}

StowagePlan plan_from_json(const std::string& text, const Instance& inst) {
    const json doc = parse_document(text, "plan");
    if (!doc.contains("assignments") || !doc["assignments"].is_array())
        throw ValidationError("plan: missing 'assignments' array");

    std::vector<Slot> slots(static_cast<std::size_t>(inst.size()));
    std::vector<bool> seen(static_cast<std::size_t>(inst.size()), false);
    int index = 0;
    for (const json& node : doc["assignments"]) {
        const std::string where = "assignments[" + std::to_string(index++) + "]";
        const int id = require_int(node, "id", where);
        if (id < 0 || id >= inst.size())
            throw ValidationError(where + ": unknown container id " + std::to_string(id));
        if (seen[static_cast<std::size_t>(id)])
            throw ValidationError(where + ": container " + std::to_string(id) +
                                  " assigned twice");
        seen[static_cast<std::size_t>(id)] = true;
        Slot s;
        s.block = require_int(node, "block", where);
        s.x = require_int(node, "x", where);
        s.y = require_int(node, "y", where);
        s.z = require_int(node, "z", where);
        if (!s.in_bounds(inst.yard()))
            throw ValidationError(where + ": slot " + to_string(s) +
                                  " out of yard bounds");
        slots[static_cast<std::size_t>(id)] = s;
    }
    for (int id = 0; id < inst.size(); ++id)
        if (!seen[static_cast<std::size_t>(id)])
            throw ValidationError("plan: container " + std::to_string(id) +
                                  " has no assignment");

    StowagePlan plan{std::move(slots)};
    occupancy(plan, inst); // injectivity
    return plan;
}

void save_plan(const StowagePlan& plan, const std::string& path) {
    write_file(path, plan_to_json(plan));
}

StowagePlan load_plan(const std::string& path, const Instance& inst) {
    try {
        return plan_from_json(read_file(path), inst);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

} // namespace yardstack
