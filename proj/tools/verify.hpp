#pragma once

#include <optional>
#include <ostream>
#include <string>

namespace catalan::cli {

// Runs one of the suites "oracle", "parity", "series", "asymptotics" or
// "all", printing a verdict line per check plus a summary. max_n overrides
// the suite's principal sweep bound (defaults: oracle 8/13, parity 4096,
// series 64, asymptotics 400); thresholds are pinned at the defaults, so
// shrinking a range can legitimately fail. Returns true iff every check
// passed.
bool run_verify(const std::string& suite, std::optional<unsigned> max_n, std::ostream& out);

}  // namespace catalan::cli
