// Command-line front end.
//
// Exit codes: 0 success or verified, 1 property refuted (counterexample,
// condition failing under --assert, cycle absent), 2 usage or input error.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kpan::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitUsage = 2;

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

/// Same as above; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Writes `content` to a sibling temporary file and renames it over `path`.
void write_file_atomically(const std::string& path, const std::string& content);

}  // namespace kpan::cli
