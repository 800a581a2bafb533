#pragma once

#include <iosfwd>

namespace twocubes {

/// Runs the built-in example suite: classical identities, the low-degree
/// table against the group law, composition and counting cross-checks, and
/// the rational orbit walk. Prints one `ok`/`FAIL` line per check to `out`
/// and returns the number of failures (0 on full success).
int run_selftest(std::ostream& out);

}  // namespace twocubes
