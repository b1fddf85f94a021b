#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace berkrh {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // a verification failed; the report is still printed
inline constexpr int kExitInput = 2;   // unreadable input, schema or argument error

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace berkrh
