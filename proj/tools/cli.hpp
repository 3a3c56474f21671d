#pragma once

namespace mcs {

/// Command-line front end. Exit codes: 0 success, 1 usage or input error,
/// 2 domain error (enumeration cap exceeded, infeasible decomposition).
int run_cli(int argc, const char* const* argv);

}  // namespace mcs
