#pragma once

// The qcyc command line: check, sset, tables, w0, braid, rules, selftest.
// Exit codes: 0 success / condition holds, 1 input or operational error,
// 3 condition violated, 4 tabulated entry missing.

#include <iosfwd>

namespace qcyc::cli {

inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kViolated = 3;
inline constexpr int kEntryMissing = 4;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcyc::cli
