#pragma once

#include <optional>
#include <string>
#include <vector>

namespace vncore {

enum class CheckStatus { Pass, Fail, Info };

struct CheckResult {
    std::string name;
    CheckStatus status;
    std::string detail;
};

/// Ordered list of check outcomes. Text rendering is deterministic: no
/// timings or addresses ever enter a report.
class Report {
public:
    void pass(std::string name, std::string detail = {});
    void fail(std::string name, std::string detail);
    void info(std::string name, std::string detail);
    void append(const Report& other);

    bool passed() const noexcept;
    bool has(const std::string& name, CheckStatus status) const;
    std::optional<CheckResult> first_failure() const;
    const std::vector<CheckResult>& entries() const noexcept { return entries_; }
    std::string text() const;

private:
    std::vector<CheckResult> entries_;
};

/// Collects failures for one named check, keeping the first few witnesses so
/// reports on large instances stay readable.
class FailureLog {
public:
    explicit FailureLog(std::string name, std::size_t keep = 8) : name_(std::move(name)), keep_(keep) {}

    void add(const std::string& witness);
    std::size_t count() const noexcept { return count_; }
    /// Emits one PASS line, or FAIL lines for the kept witnesses plus a
    /// summary line when some were dropped.
    void flush(Report& report, const std::string& pass_detail = {}) const;

private:
    std::string name_;
    std::size_t keep_;
    std::size_t count_ = 0;
    std::vector<std::string> witnesses_;
};

} // namespace vncore
