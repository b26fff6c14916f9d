#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace asck::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kPredicateFalse = 1;
inline constexpr int kInputError = 2;
inline constexpr int kDisagreement = 3;

/// args excludes the program name. "-" as a file argument means in/out.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace asck::cli
