// Lambda sweep producing the ratio curves between the upper-bound coefficient
// and each lower-bound coefficient; CSV output is byte-stable.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tvbounds/optimizer.hpp"
#include "tvbounds/report.hpp"

namespace tvbounds {

struct SweepRow {
    double lambda = 0.0;
    double upper_coeff = 0.0;
    std::optional<double> k1_three;
    std::optional<double> k1_common;
    std::optional<double> k1_closed;
    double bh_lower_coeff = 0.0;
    std::optional<double> ratio_three;
    std::optional<double> ratio_common;
    std::optional<double> ratio_closed;
    double ratio_bh = 0.0;
};

enum class SweepScale { log, linear };

// One row per grid lambda, in ascending order.  Requires
// 0 < lambda_min < lambda_max and points >= 2.
std::vector<SweepRow> run_sweep(double lambda_min, double lambda_max, int points,
                                SweepScale scale,
                                const VariantSelection& variants = {},
                                const OptimizerConfig& config = {});

// Header row fixed to the field order of SweepRow; absent variants render as
// empty cells.
std::string render_sweep_csv(const std::vector<SweepRow>& rows);
std::string render_sweep_json(const std::vector<SweepRow>& rows);

}  // namespace tvbounds
