#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace owalk::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // --strict and the analysis found nothing
inline constexpr int kUsage = 2;
inline constexpr int kInternal = 3;

// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace owalk::cli
