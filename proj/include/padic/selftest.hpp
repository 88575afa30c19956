#pragma once

#include <ostream>

namespace padic {

/// Runs the oracle-equivalence small grid, covering every public operation
/// at least once. Prints one line per check group; returns the number of
/// failures (0 = all good).
int run_selftest(std::ostream& out);

} // namespace padic
