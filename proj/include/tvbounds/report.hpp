// Bound report for one instance: every coefficient and absolute bound, with
// vacuity flags and the exact TV distance when the instance is small enough.
#pragma once

#include <optional>
#include <string>

#include "tvbounds/distributions.hpp"
#include "tvbounds/optimizer.hpp"

namespace tvbounds {

inline constexpr int kReportSchemaVersion = 1;

struct VariantSelection {
    bool three_param = true;
    bool common_alpha = true;
    bool closed_form = true;
};

struct BoundReport {
    double lambda = 0.0;
    double sum_p2 = 0.0;
    std::size_t n = 0;
    std::optional<double> theta_star;  // absent for lambda ~ 0 (no finite limit)

    // Coefficients (multipliers of sum p_i^2; asymptotic included for
    // reference).
    double bh_upper_coeff = 0.0;
    double bh_lower_coeff = 0.0;
    double k1_closed_coeff = 0.0;
    std::optional<double> k1_common_coeff;
    std::optional<double> k1_three_coeff;
    double asymptotic_coeff = 0.0;

    // Absolute bounds for this instance.
    double le_cam = 0.0;
    double bh_upper = 0.0;
    double bh_lower = 0.0;
    double corollary_lower = 0.0;
    std::optional<double> k1_common_alpha_lower;
    std::optional<double> k1_lower;
    double asymptotic_tv = 0.0;

    // True when the corresponding lower-bound coefficient is <= 0.
    bool bh_lower_vacuous = false;
    bool corollary_vacuous = false;
    std::optional<bool> k1_common_vacuous;
    std::optional<bool> k1_vacuous;

    std::optional<double> exact_tv;

    bool operator==(const BoundReport&) const = default;
};

BoundReport make_bound_report(const ProbVector& p,
                              const VariantSelection& variants = {},
                              const OptimizerConfig& config = {},
                              std::size_t exact_limit = kDefaultExactTvLimit);

// JSON with top-level schema_version; parse_report rejects unknown schema
// versions.  parse_report(render_report(r)) == r.
std::string render_report(const BoundReport& report);
BoundReport parse_report(const std::string& json_text);

// Fixed-order human-readable table and two-line CSV renderings.
std::string render_report_table(const BoundReport& report);
std::string render_report_csv(const BoundReport& report);

}  // namespace tvbounds
