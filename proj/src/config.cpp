#include "tvbounds/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tvbounds {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

OptimizerConfig parse_optimizer_config(const std::string& text,
                                       OptimizerConfig base) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        auto bad_value = [&]() {
            return std::invalid_argument("config line " + std::to_string(lineno) +
                                         ": bad value '" + value + "' for " + key);
        };
        auto as_int = [&]() {
            try {
                std::size_t pos = 0;
                const int x = std::stoi(value, &pos);
                if (pos != value.size()) throw bad_value();
                return x;
            } catch (const std::invalid_argument&) {
                throw bad_value();
            } catch (const std::out_of_range&) {
                throw bad_value();
            }
        };
        auto as_double = [&]() {
            try {
                std::size_t pos = 0;
                const double x = std::stod(value, &pos);
                if (pos != value.size()) throw bad_value();
                return x;
            } catch (const std::invalid_argument&) {
                throw bad_value();
            } catch (const std::out_of_range&) {
                throw bad_value();
            }
        };

        if (key == "grid_alpha1") base.grid_alpha1 = as_int();
        else if (key == "grid_alpha2") base.grid_alpha2 = as_int();
        else if (key == "grid_theta") base.grid_theta = as_int();
        else if (key == "refine_starts") base.refine_starts = as_int();
        else if (key == "simplex_max_iter") base.simplex_max_iter = as_int();
        else if (key == "simplex_tol") base.simplex_tol = as_double();
        else if (key == "box_alpha_span") base.box_alpha_span = as_double();
        else if (key == "box_alpha_pad") base.box_alpha_pad = as_double();
        else if (key == "box_theta_lo") base.box_theta_lo = as_double();
        else if (key == "box_theta_scale") base.box_theta_scale = as_double();
        else if (key == "box_theta_pad") base.box_theta_pad = as_double();
        else {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
        }
    }
    validate_optimizer_config(base);
    return base;
}

void validate_optimizer_config(const OptimizerConfig& cfg) {
    auto fail = [](const char* what) {
        throw std::invalid_argument(std::string("optimizer config: ") + what);
    };
    if (cfg.grid_alpha1 < 1 || cfg.grid_alpha2 < 1 || cfg.grid_theta < 1) {
        fail("grid sizes must be >= 1");
    }
    if (cfg.refine_starts < 0) fail("refine_starts must be >= 0");
    if (cfg.simplex_max_iter < 1) fail("simplex_max_iter must be >= 1");
    if (!(cfg.simplex_tol > 0.0)) fail("simplex_tol must be > 0");
    if (!(cfg.box_alpha_span >= 0.0) || !(cfg.box_alpha_pad >= 0.0)) {
        fail("box alpha parameters must be >= 0");
    }
    if (!(cfg.box_theta_lo > 0.0)) fail("box_theta_lo must be > 0");
    if (!(cfg.box_theta_scale > 0.0) || !(cfg.box_theta_pad >= 0.0)) {
        fail("box theta parameters must be positive");
    }
}

OptimizerConfig load_optimizer_config(const std::string& path,
                                      OptimizerConfig base) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read config file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_optimizer_config(buf.str(), base);
}

}  // namespace tvbounds
