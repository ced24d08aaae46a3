#include "tvbounds/report.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "tvbounds/bounds.hpp"
#include "tvbounds/format.hpp"

namespace tvbounds {

namespace {

using nlohmann::json;

json opt_to_json(const std::optional<double>& v) {
    if (v) return *v;
    return nullptr;
}

json opt_to_json(const std::optional<bool>& v) {
    if (v) return *v;
    return nullptr;
}

std::optional<double> opt_double(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<double>();
}

std::optional<bool> opt_bool(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<bool>();
}

std::string cell(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

}  // namespace

BoundReport make_bound_report(const ProbVector& p,
                              const VariantSelection& variants,
                              const OptimizerConfig& config,
                              std::size_t exact_limit) {
    BoundReport r;
    r.lambda = p.lambda();
    r.sum_p2 = p.sum_p2();
    r.n = p.size();

    const double lam = r.lambda;
    const bool tiny = lam < kLambdaEps;

    r.bh_upper_coeff = bh_upper_coeff(lam);
    r.bh_lower_coeff = bh_lower_coeff(lam);
    // Continuous extension of the closed form at lambda -> 0 is e/56.
    r.k1_closed_coeff = tiny ? std::exp(1.0) / 56.0 : k1_tilde(lam);
    r.asymptotic_coeff = tiny ? 0.0 : asymptotic_tv_coeff(lam);
    if (!tiny) r.theta_star = theta_star(lam);

    if (!tiny && variants.common_alpha) {
        r.k1_common_coeff = optimize_k1(lam, K1Variant::common_alpha, config).k1;
    }
    if (!tiny && variants.three_param) {
        r.k1_three_coeff = optimize_k1(lam, K1Variant::three_param, config).k1;
    }

    r.le_cam = le_cam_upper(p);
    r.bh_upper = r.bh_upper_coeff * r.sum_p2;
    r.bh_lower = r.bh_lower_coeff * r.sum_p2;
    r.corollary_lower = r.k1_closed_coeff * r.sum_p2;
    if (r.k1_common_coeff) {
        r.k1_common_alpha_lower = *r.k1_common_coeff * r.sum_p2;
        r.k1_common_vacuous = !(*r.k1_common_coeff > 0.0);
    }
    if (r.k1_three_coeff) {
        r.k1_lower = *r.k1_three_coeff * r.sum_p2;
        r.k1_vacuous = !(*r.k1_three_coeff > 0.0);
    }
    r.asymptotic_tv = r.asymptotic_coeff * r.sum_p2;

    r.bh_lower_vacuous = !(r.bh_lower_coeff > 0.0);
    r.corollary_vacuous = !(r.k1_closed_coeff > 0.0);

    if (p.size() <= exact_limit) {
        r.exact_tv = exact_tv_poisson_approx(p, exact_limit);
    }
    return r;
}

std::string render_report(const BoundReport& r) {
    json j;
    j["schema_version"] = kReportSchemaVersion;
    j["lambda"] = r.lambda;
    j["sum_p2"] = r.sum_p2;
    j["n"] = r.n;
    j["theta_star"] = opt_to_json(r.theta_star);
    j["coefficients"] = {
        {"bh_upper", r.bh_upper_coeff},
        {"bh_lower", r.bh_lower_coeff},
        {"k1_closed", r.k1_closed_coeff},
        {"k1_common", opt_to_json(r.k1_common_coeff)},
        {"k1_three", opt_to_json(r.k1_three_coeff)},
        {"asymptotic", r.asymptotic_coeff},
    };
    j["bounds"] = {
        {"le_cam", r.le_cam},
        {"bh_upper", r.bh_upper},
        {"bh_lower", r.bh_lower},
        {"corollary_lower", r.corollary_lower},
        {"k1_common_alpha_lower", opt_to_json(r.k1_common_alpha_lower)},
        {"k1_lower", opt_to_json(r.k1_lower)},
        {"asymptotic_tv", r.asymptotic_tv},
    };
    j["vacuous"] = {
        {"bh_lower", r.bh_lower_vacuous},
        {"corollary_lower", r.corollary_vacuous},
        {"k1_common_alpha_lower", opt_to_json(r.k1_common_vacuous)},
        {"k1_lower", opt_to_json(r.k1_vacuous)},
    };
    j["exact_tv"] = opt_to_json(r.exact_tv);
    return j.dump(2) + "\n";
}

BoundReport parse_report(const std::string& json_text) {
    const json j = json::parse(json_text);
    if (!j.contains("schema_version") ||
        j["schema_version"].get<int>() != kReportSchemaVersion) {
        throw std::invalid_argument("parse_report: unsupported schema_version");
    }
    BoundReport r;
    r.lambda = j.at("lambda").get<double>();
    r.sum_p2 = j.at("sum_p2").get<double>();
    r.n = j.at("n").get<std::size_t>();
    r.theta_star = opt_double(j.at("theta_star"));
    const json& c = j.at("coefficients");
    r.bh_upper_coeff = c.at("bh_upper").get<double>();
    r.bh_lower_coeff = c.at("bh_lower").get<double>();
    r.k1_closed_coeff = c.at("k1_closed").get<double>();
    r.k1_common_coeff = opt_double(c.at("k1_common"));
    r.k1_three_coeff = opt_double(c.at("k1_three"));
    r.asymptotic_coeff = c.at("asymptotic").get<double>();
    const json& b = j.at("bounds");
    r.le_cam = b.at("le_cam").get<double>();
    r.bh_upper = b.at("bh_upper").get<double>();
    r.bh_lower = b.at("bh_lower").get<double>();
    r.corollary_lower = b.at("corollary_lower").get<double>();
    r.k1_common_alpha_lower = opt_double(b.at("k1_common_alpha_lower"));
    r.k1_lower = opt_double(b.at("k1_lower"));
    r.asymptotic_tv = b.at("asymptotic_tv").get<double>();
    const json& v = j.at("vacuous");
    r.bh_lower_vacuous = v.at("bh_lower").get<bool>();
    r.corollary_vacuous = v.at("corollary_lower").get<bool>();
    r.k1_common_vacuous = opt_bool(v.at("k1_common_alpha_lower"));
    r.k1_vacuous = opt_bool(v.at("k1_lower"));
    r.exact_tv = opt_double(j.at("exact_tv"));
    return r;
}

std::string render_report_table(const BoundReport& r) {
    std::ostringstream os;
    auto line = [&os](const char* name, const std::string& value) {
        os << name << value << "\n";
    };
    line("lambda                 ", format_double(r.lambda));
    line("n                      ", std::to_string(r.n));
    line("sum_p2                 ", format_double(r.sum_p2));
    line("theta_star             ", r.theta_star ? format_double(*r.theta_star) : "-");
    line("le_cam                 ", format_double(r.le_cam));
    line("bh_upper               ", format_double(r.bh_upper));
    line("exact_tv               ", r.exact_tv ? format_double(*r.exact_tv) : "-");
    line("k1_lower               ", r.k1_lower ? format_double(*r.k1_lower) : "-");
    line("k1_common_alpha_lower  ",
         r.k1_common_alpha_lower ? format_double(*r.k1_common_alpha_lower) : "-");
    line("corollary_lower        ", format_double(r.corollary_lower));
    line("bh_lower               ", format_double(r.bh_lower));
    line("asymptotic_tv          ", format_double(r.asymptotic_tv));
    return os.str();
}

std::string render_report_csv(const BoundReport& r) {
    std::ostringstream os;
    os << "lambda,n,sum_p2,theta_star,le_cam,bh_upper,bh_lower,corollary_lower,"
          "k1_common_alpha_lower,k1_lower,asymptotic_tv,exact_tv\n";
    os << format_double(r.lambda) << ',' << r.n << ',' << format_double(r.sum_p2)
       << ',' << cell(r.theta_star) << ',' << format_double(r.le_cam) << ','
       << format_double(r.bh_upper) << ',' << format_double(r.bh_lower) << ','
       << format_double(r.corollary_lower) << ',' << cell(r.k1_common_alpha_lower)
       << ',' << cell(r.k1_lower) << ',' << format_double(r.asymptotic_tv) << ','
       << cell(r.exact_tv) << "\n";
    return os.str();
}

}  // namespace tvbounds
