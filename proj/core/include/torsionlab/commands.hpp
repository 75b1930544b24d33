#ifndef TORSIONLAB_COMMANDS_HPP
#define TORSIONLAB_COMMANDS_HPP

#include <iosfwd>

namespace torsionlab {

/// Command-line entry point. Exit codes: 0 on success (including a
/// computed "fails" verdict), 1 on usage/parse errors, 2 on internal
/// invariant violations (including a red identity suite).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace torsionlab

#endif
