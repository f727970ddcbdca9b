#include "stepsched/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace stepsched {

using nlohmann::json;

namespace {

Time read_time(const json& job, const char* key) {
    if (!job.contains(key)) throw FormatError(std::string("job is missing field '") + key + "'");
    const auto& v = job.at(key);
    if (!v.is_number_integer()) throw FormatError(std::string("field '") + key + "' must be an integer");
    return v.get<Time>();
}

}  // namespace

Instance instance_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("malformed instance JSON: ") + e.what());
    }
    if (!doc.is_object()) throw FormatError("instance JSON must be an object");
    Instance inst;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw FormatError("'name' must be a string");
        inst.name = doc["name"].get<std::string>();
    }
    if (doc.contains("seed") && !doc["seed"].is_null()) {
        if (!doc["seed"].is_number_integer()) throw FormatError("'seed' must be an integer or null");
        inst.seed = doc["seed"].get<std::uint64_t>();
    }
    if (!doc.contains("jobs") || !doc["jobs"].is_array()) throw FormatError("'jobs' must be an array");
    for (const auto& j : doc["jobs"]) {
        if (!j.is_object()) throw FormatError("each job must be an object");
        Job job;
        job.id = static_cast<JobId>(read_time(j, "id"));
        job.a = read_time(j, "a");
        job.b = read_time(j, "b");
        job.d = read_time(j, "d");
        job.h = read_time(j, "h");
        inst.jobs.push_back(job);
    }
    require_valid(inst);
    std::sort(inst.jobs.begin(), inst.jobs.end(), [](const Job& x, const Job& y) { return x.id < y.id; });
    return inst;
}

std::string instance_to_json(const Instance& instance) {
    std::vector<Job> jobs = instance.jobs;
    std::sort(jobs.begin(), jobs.end(), [](const Job& x, const Job& y) { return x.id < y.id; });

    // Hand-rolled so that key order is fixed and each job sits on one line.
    std::ostringstream out;
    out << "{\n  \"name\": " << json(instance.name).dump() << ",\n  \"seed\": ";
    if (instance.seed) out << *instance.seed;
    else out << "null";
    out << ",\n  \"jobs\": [";
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        const Job& j = jobs[k];
        out << (k ? ",\n" : "\n") << "    {\"id\": " << j.id << ", \"a\": " << j.a << ", \"b\": " << j.b
            << ", \"d\": " << j.d << ", \"h\": " << j.h << "}";
    }
    out << (jobs.empty() ? "]" : "\n  ]") << "\n}\n";
    return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << text;
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

Instance load_instance(const std::filesystem::path& path) {
    try {
        return instance_from_json(read_text_file(path));
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void save_instance(const Instance& instance, const std::filesystem::path& path) {
    write_text_file(path, instance_to_json(instance));
}

Instance example8_instance() {
    constexpr Time a[] = {49, 44, 45, 31, 51, 52, 82, 80};
    constexpr Time d[] = {113, 86, 114, 218, 156, 461, 215, 93};
    constexpr Time h[] = {271, 255, 91, 131, 205, 101, 367, 85};
    constexpr Time b[] = {33, 19, 41, 27, 18, 47, 44, 28};
    Instance inst;
    inst.name = "example8";
    for (int k = 0; k < 8; ++k) inst.jobs.push_back({k + 1, a[k], b[k], d[k], h[k]});
    return inst;
}

}  // namespace stepsched
