#ifndef MP_CLI_HPP
#define MP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mp {

// Exit codes: 0 success, 2 input error, 3 guard exceeded, 4 verification
// mismatch.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace mp

#endif
