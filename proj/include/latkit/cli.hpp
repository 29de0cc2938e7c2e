#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latkit {

// Exit codes: 0 all checks pass, 1 an invariant or lemma failed, 2 input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

// argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latkit
