// Command-line front end: `bounds` (report for one instance), `sweep`
// (ratio-curve CSV over a lambda grid), `verify` (seeded check suites).
// Exit codes: 0 success, 1 failed verification checks, 2 invalid
// instance/arguments, 3 file I/O failure.
#pragma once

#include <iosfwd>

namespace tvbounds {

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace tvbounds
