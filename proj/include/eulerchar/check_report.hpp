// Result type shared by all cross-validation routines.
#pragma once

#include <string>
#include <vector>

namespace eulerchar {

enum class CheckStatus { pass, fail, expected_mismatch };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;  // offending coordinates on failure, summary otherwise

    bool ok() const { return status != CheckStatus::fail; }
};

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "FAIL";
        case CheckStatus::expected_mismatch: return "expected-mismatch";
    }
    return "?";
}

}  // namespace eulerchar
