// JSON (de)serialization for instances. The schema is strict: unknown keys
// are rejected so a typo in a config file fails loudly instead of silently
// falling back to a default.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rsvplan/domain/instance.hpp"

namespace rsvplan::domain {

// Optional experiment settings an instance file may carry. Anything unset
// falls back to the CLI defaults.
struct ExperimentDefaults {
  std::optional<double> threshold_step;
  std::optional<std::vector<double>> probability_grid;
  std::optional<std::vector<double>> multipliers;
  std::optional<std::vector<std::uint64_t>> random_seeds;
  std::optional<std::uint64_t> base_seed;
};

struct InstanceFile {
  Instance instance;
  ExperimentDefaults experiments;
};

// Parses and validates. Throws ValidationError with a path-qualified message
// on schema violations (unknown key, wrong type, bad value).
InstanceFile parse_instance(const std::string& json_text);

InstanceFile load_instance(const std::string& path);

std::string serialize_instance(const InstanceFile& file);

}  // namespace rsvplan::domain
