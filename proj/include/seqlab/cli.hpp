#pragma once

#include <iosfwd>

namespace seqlab::cli {

// Parses argv, runs one subcommand, renders to `out` (results) and `err`
// (progress, timing, errors). Exit codes: 0 success or verification pass,
// 1 verification mismatch, 2 usage error, 3 runtime error.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace seqlab::cli
