#include "symch/jobspec.hpp"
#include "symch/parser.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace symch {

using nlohmann::json;

namespace {

RingDescriptor ring_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw error("job file: ring must be an object with a kind");
    RingDescriptor ring;
    ring.kind = ring_kind_from_name(j.at("kind").get<std::string>());
    ring.generator_count = j.value("generators", 0u);
    switch (ring.kind) {
        case RingKind::rational:
        case RingKind::upper_triangular2:
            if (ring.generator_count != 0) throw error("job file: this ring kind has no generators");
            break;
        case RingKind::grassmann:
            ring.generator_prefix = j.value("prefix", std::string("v"));
            break;
        default:
            ring.generator_prefix = j.value("prefix", std::string("x"));
            break;
    }
    return ring;
}

json ring_to_json(const RingDescriptor& ring) {
    json j;
    j["kind"] = ring_kind_name(ring.kind);
    if (ring.kind != RingKind::rational && ring.kind != RingKind::upper_triangular2) {
        j["generators"] = ring.generator_count;
        j["prefix"] = ring.generator_prefix;
    }
    return j;
}

std::vector<std::vector<std::string>> grid_from_json(const json& j, unsigned n, const char* what) {
    if (!j.is_array() || j.size() != n) {
        throw error(std::string("job file: ") + what + " must be an n x n array of strings");
    }
    std::vector<std::vector<std::string>> grid;
    grid.reserve(n);
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != n) {
            throw error(std::string("job file: ") + what + " must be an n x n array of strings");
        }
        std::vector<std::string> r;
        r.reserve(n);
        for (const auto& cell : row) r.push_back(cell.get<std::string>());
        grid.push_back(std::move(r));
    }
    return grid;
}

} // namespace

JobSpec parse_jobspec(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw error(std::string("job file: not valid JSON: ") + e.what());
    }
    JobSpec job;
    job.ring = ring_from_json(j.at("ring"));
    job.n = j.value("n", 0u);
    if (job.n < 1) throw error("job file: n must be >= 1");
    if (j.contains("entries")) {
        job.entries = grid_from_json(j.at("entries"), job.n, "entries");
    } else {
        throw error("job file: missing entries");
    }
    if (j.contains("conjugator")) {
        job.conjugator = grid_from_json(j.at("conjugator"), job.n, "conjugator");
    }
    if (j.contains("targets")) {
        for (const auto& t : j.at("targets")) job.targets.push_back(t.get<std::string>());
    }
    if (j.contains("options")) {
        const auto& o = j.at("options");
        job.options.seed = o.value("seed", static_cast<uint64_t>(1));
        job.options.trials = o.value("trials", 100u);
    }
    return job;
}

JobSpec load_jobspec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open job file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_jobspec(buf.str());
}

std::string jobspec_to_json_text(const JobSpec& job) {
    json j;
    j["ring"] = ring_to_json(job.ring);
    j["n"] = job.n;
    j["entries"] = job.entries;
    if (job.conjugator) j["conjugator"] = *job.conjugator;
    if (!job.targets.empty()) j["targets"] = job.targets;
    j["options"] = {{"seed", job.options.seed}, {"trials", job.options.trials}};
    return j.dump(2) + "\n";
}

Matrix build_matrix(const JobSpec& job) {
    Matrix m(job.ring, job.n);
    for (unsigned i = 0; i < job.n; ++i) {
        for (unsigned jx = 0; jx < job.n; ++jx) {
            try {
                m.at(i, jx) = parse_element(job.entries[i][jx], job.ring);
            } catch (const parse_error& e) {
                throw parse_error("entry (" + std::to_string(i + 1) + "," +
                                  std::to_string(jx + 1) + "): " + e.what(), e.offset);
            }
        }
    }
    return m;
}

std::optional<Matrix> build_conjugator(const JobSpec& job) {
    if (!job.conjugator) return std::nullopt;
    Matrix g(job.ring, job.n);
    for (unsigned i = 0; i < job.n; ++i) {
        for (unsigned jx = 0; jx < job.n; ++jx) {
            g.at(i, jx) = parse_element((*job.conjugator)[i][jx], job.ring);
        }
    }
    return g;
}

} // namespace symch
