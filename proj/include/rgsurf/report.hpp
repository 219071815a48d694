#pragma once

// Command runners behind the C API and the CLI. Each takes a canonical JSON
// inputs object and returns the results object; errors propagate as
// DomainError / TheoremViolation.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "rgsurf/isometry.hpp"

namespace rgs {

using Json = nlohmann::json;

struct RunOptions {
  int threads = 1;
};

// JSON array of (N+1)x(N+1) row-major integer matrices. N is inferred from
// the matrices; a conflicting `n` is an error.
std::vector<Isometry> parse_group_json(const Json &matrices, std::optional<int> n = std::nullopt);

Json class_to_json(const CohClass &c);
Json class_to_json(const SymplecticClass &w);
// Integers or "p/q" strings.
SymplecticClass symplectic_from_json(const Json &coords);
CohClass integral_from_json(const Json &coords);

const std::vector<std::string> &command_names();
Json run_command(const std::string &command, const Json &inputs, const RunOptions &opt = {});

std::uint64_t fnv1a64(std::string_view s);

// {command, inputs, inputs_digest, results, version[, timing_seconds]} with
// sorted keys, two-space indentation and a trailing newline.
std::string render_report(const std::string &command, const Json &inputs, const Json &results,
                          std::optional<double> seconds = std::nullopt);

} // namespace rgs
