// jobspec.hpp -- the JSON job file consumed by the CLI: a ring, a matrix
// of element-expression strings, optional conjugator / targets, and run
// options.
#pragma once

#include "symch/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symch {

struct JobOptions {
    uint64_t seed = 1;
    unsigned trials = 100;
};

struct JobSpec {
    RingDescriptor ring;
    unsigned n = 1;
    std::vector<std::vector<std::string>> entries;
    std::optional<std::vector<std::vector<std::string>>> conjugator;
    std::vector<std::string> targets;   // ideal-membership expressions
    JobOptions options;
};

JobSpec load_jobspec(const std::string& path);
JobSpec parse_jobspec(const std::string& json_text);
std::string jobspec_to_json_text(const JobSpec& job);

// Parses every entry expression in the declared ring.
Matrix build_matrix(const JobSpec& job);
std::optional<Matrix> build_conjugator(const JobSpec& job);

} // namespace symch
