// Optimizer budgets from a plain `key = value` config file; command-line
// flags override file values.  TVBOUNDS_CONFIG names a fallback file.
#pragma once

#include <string>

#include "tvbounds/optimizer.hpp"

namespace tvbounds {

// Recognized keys: grid_alpha1, grid_alpha2, grid_theta, refine_starts,
// simplex_max_iter, simplex_tol, box_alpha_span, box_alpha_pad, box_theta_lo,
// box_theta_scale, box_theta_pad.  '#' starts a comment; blank lines ignored.
// Unknown keys or malformed lines throw std::invalid_argument.
OptimizerConfig parse_optimizer_config(const std::string& text,
                                       OptimizerConfig base = {});

// Reads and parses the file; throws std::runtime_error when the file cannot
// be read (distinct from parse failures so the CLI can map exit codes).
OptimizerConfig load_optimizer_config(const std::string& path,
                                      OptimizerConfig base = {});

// Throws std::invalid_argument on out-of-range budgets.
void validate_optimizer_config(const OptimizerConfig& cfg);

}  // namespace tvbounds
