#ifndef BCINV_TOOLS_SELFTEST_HPP
#define BCINV_TOOLS_SELFTEST_HPP

namespace bcinv_cli {

/// Runs the built-in example suite, printing one line per check.
/// Returns the number of failed checks.
int run_selftest();

}  // namespace bcinv_cli

#endif
