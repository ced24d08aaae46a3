// Seeded verification suites behind the `verify` CLI subcommand: numeric
// checks of the Stein identities, the bound sandwich against the exact TV
// oracle, the variant ordering chain, and the published limit constants.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "tvbounds/optimizer.hpp"

namespace tvbounds {

struct VerifySummary {
    int checks = 0;
    int failures = 0;

    bool ok() const { return failures == 0; }
};

// suite: one of "stein", "sandwich", "ordering", "limits", "all".
VerifySummary run_verify_suite(const std::string& suite, std::uint64_t seed,
                               std::ostream& log,
                               const OptimizerConfig& config = {});

}  // namespace tvbounds
