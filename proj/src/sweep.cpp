#include "tvbounds/sweep.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "tvbounds/bounds.hpp"
#include "tvbounds/format.hpp"

namespace tvbounds {

namespace {

std::string cell(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

nlohmann::json opt_json(const std::optional<double>& v) {
    if (v) return *v;
    return nullptr;
}

}  // namespace

std::vector<SweepRow> run_sweep(double lambda_min, double lambda_max, int points,
                                SweepScale scale,
                                const VariantSelection& variants,
                                const OptimizerConfig& config) {
    if (!(lambda_min > 0.0) || !(lambda_max > lambda_min)) {
        throw std::invalid_argument("run_sweep: need 0 < lambda_min < lambda_max");
    }
    if (points < 2) {
        throw std::invalid_argument("run_sweep: need points >= 2");
    }

    std::vector<SweepRow> rows;
    rows.reserve(points);
    for (int i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / (points - 1);
        const double lam =
            scale == SweepScale::log
                ? std::exp(std::log(lambda_min) +
                           t * (std::log(lambda_max) - std::log(lambda_min)))
                : lambda_min + t * (lambda_max - lambda_min);
        SweepRow row;
        row.lambda = lam;
        row.upper_coeff = bh_upper_coeff(lam);
        row.bh_lower_coeff = bh_lower_coeff(lam);
        row.ratio_bh = row.upper_coeff / row.bh_lower_coeff;
        if (variants.closed_form) {
            row.k1_closed = k1_tilde(lam);
            row.ratio_closed = row.upper_coeff / *row.k1_closed;
        }
        if (variants.common_alpha) {
            row.k1_common = optimize_k1(lam, K1Variant::common_alpha, config).k1;
            row.ratio_common = row.upper_coeff / *row.k1_common;
        }
        if (variants.three_param) {
            row.k1_three = optimize_k1(lam, K1Variant::three_param, config).k1;
            row.ratio_three = row.upper_coeff / *row.k1_three;
        }
        rows.push_back(row);
    }
    return rows;
}

std::string render_sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "lambda,upper_coeff,k1_three,k1_common,k1_closed,bh_lower_coeff,"
          "ratio_three,ratio_common,ratio_closed,ratio_bh\n";
    for (const SweepRow& r : rows) {
        os << format_double(r.lambda) << ',' << format_double(r.upper_coeff) << ','
           << cell(r.k1_three) << ',' << cell(r.k1_common) << ','
           << cell(r.k1_closed) << ',' << format_double(r.bh_lower_coeff) << ','
           << cell(r.ratio_three) << ',' << cell(r.ratio_common) << ','
           << cell(r.ratio_closed) << ',' << format_double(r.ratio_bh) << "\n";
    }
    return os.str();
}

std::string render_sweep_json(const std::vector<SweepRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SweepRow& r : rows) {
        arr.push_back({
            {"lambda", r.lambda},
            {"upper_coeff", r.upper_coeff},
            {"k1_three", opt_json(r.k1_three)},
            {"k1_common", opt_json(r.k1_common)},
            {"k1_closed", opt_json(r.k1_closed)},
            {"bh_lower_coeff", r.bh_lower_coeff},
            {"ratio_three", opt_json(r.ratio_three)},
            {"ratio_common", opt_json(r.ratio_common)},
            {"ratio_closed", opt_json(r.ratio_closed)},
            {"ratio_bh", r.ratio_bh},
        });
    }
    nlohmann::json j;
    j["schema_version"] = 1;
    j["rows"] = arr;
    return j.dump(2) + "\n";
}

}  // namespace tvbounds
