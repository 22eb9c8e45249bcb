#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace friezelab {

struct CheckResult {
    int id = 0;
    std::string title;
    std::vector<std::string> tags;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double limit_seconds = 0;  // 0: no limit
};

struct ReproduceOptions {
    std::filesystem::path fixtures;
    /// Runs only checks carrying this tag (e.g. "d4", "e6") or with this number.
    std::optional<std::string> only;
    std::uint64_t seed = 20250601;
};

/// Runs the acceptance checks in order, reporting each as it finishes.
std::vector<CheckResult> reproduce(const ReproduceOptions& options,
                                   const std::function<void(const CheckResult&)>& on_result = {});

/// One line: status, number, title, timing, detail.
std::string format_result(const CheckResult& r);

}  // namespace friezelab
