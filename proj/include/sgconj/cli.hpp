#ifndef SGCONJ_CLI_HPP
#define SGCONJ_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace sgconj {

// Runs one `sg` invocation; JSON (result or error object) goes to `out`.
// Exit codes: 0 success / conjugate / oracle agreement, 1 not conjugate or
// oracle disagreement, 2 error.
int run_cli(const std::vector<std::string>& args, std::ostream& out);

}  // namespace sgconj

#endif
