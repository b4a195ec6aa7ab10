#pragma once

#include <string>
#include <vector>

#include "tworat/arith.hpp"

namespace tworat::cli {

struct SuiteResult {
    std::string name;
    i64 bound = 0;  // effective bound used by this suite
    i64 checked = 0;
    i64 failed = 0;
    i64 skipped = 0;  // effort-bound failures, counted separately
    std::vector<std::string> failures;  // first few failure messages
};

inline constexpr i64 kMaxVerifyBound = 1'000'000;

std::vector<SuiteResult> run_verify(i64 bound);

}  // namespace tworat::cli
