#pragma once

#include <ostream>

namespace ekrlab::cli {

// Exit codes: 0 success, 1 usage/scale error or failed self-check,
// 2 an EKR violation (check, scan) or an uncovered family (cover).
inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kViolation = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ekrlab::cli
