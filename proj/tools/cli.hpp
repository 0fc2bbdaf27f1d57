#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ecg::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;         // invalid cover, reduction disagreement
inline constexpr int kInputError = 2;
inline constexpr int kSizeGuard = 3;
inline constexpr int kBudgetExhausted = 4;  // report printed, value not proven optimal
inline constexpr int kConstruction = 5;     // reduction could not be assembled

// `args` excludes the program name. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ecg::cli
