#pragma once

#include <iosfwd>

#include "becmirror/scenario.hpp"

namespace becmirror {

enum class OutputFormat { csv, json };

// Exit conventions shared with the CLI front end: 0 success, 1 invariant
// failure, 2 configuration error (raised as ConfigError before these run).
int run_fringes(const ScenarioConfig& cfg, std::ostream& out, OutputFormat format);
int run_spectrum(const ScenarioConfig& cfg, std::ostream& out, OutputFormat format,
                 int threads = 1);
int run_displacement(const ScenarioConfig& cfg, std::ostream& out, OutputFormat format);
// Human-readable self-check report over the configured parameters.
int run_validate(const ScenarioConfig& cfg, std::ostream& out);

} // namespace becmirror
