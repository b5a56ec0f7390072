#ifndef NCALG_CLI_HPP
#define NCALG_CLI_HPP

// Command dispatch for the ncalg tool. The structured payload (key-value
// lines) goes to `out` and is byte-deterministic for equal inputs and seed;
// the human summary, timings, and cache notes go to `err`.

#include <iosfwd>

namespace ncalg {

// returns the process exit code: 0 success, 1 usage error, 2 domain error
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ncalg

#endif  // NCALG_CLI_HPP
