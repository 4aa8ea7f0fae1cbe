#include "vncore/report.hpp"

#include <algorithm>

namespace vncore {

void Report::pass(std::string name, std::string detail)
{
    entries_.push_back({std::move(name), CheckStatus::Pass, std::move(detail)});
}

void Report::fail(std::string name, std::string detail)
{
    entries_.push_back({std::move(name), CheckStatus::Fail, std::move(detail)});
}

void Report::info(std::string name, std::string detail)
{
    entries_.push_back({std::move(name), CheckStatus::Info, std::move(detail)});
}

void Report::append(const Report& other)
{
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

bool Report::passed() const noexcept
{
    return std::none_of(entries_.begin(), entries_.end(),
                        [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

bool Report::has(const std::string& name, CheckStatus status) const
{
    return std::any_of(entries_.begin(), entries_.end(), [&](const CheckResult& c) {
        return c.status == status && c.name == name;
    });
}

std::optional<CheckResult> Report::first_failure() const
{
    for (const auto& c : entries_)
        if (c.status == CheckStatus::Fail)
            return c;
    return std::nullopt;
}

std::string Report::text() const
{
    std::string out;
    for (const auto& c : entries_) {
        switch (c.status) {
        case CheckStatus::Pass: out += "PASS "; break;
        case CheckStatus::Fail: out += "FAIL "; break;
        case CheckStatus::Info: out += "INFO "; break;
        }
        out += c.name;
        if (!c.detail.empty())
            out += ": " + c.detail;
        out += '\n';
    }
    return out;
}

void FailureLog::add(const std::string& witness)
{
    ++count_;
    if (witnesses_.size() < keep_)
        witnesses_.push_back(witness);
}

void FailureLog::flush(Report& report, const std::string& pass_detail) const
{
    if (count_ == 0) {
        report.pass(name_, pass_detail);
        return;
    }
    for (const auto& w : witnesses_)
        report.fail(name_, w);
    if (count_ > witnesses_.size())
        report.fail(name_, std::to_string(count_ - witnesses_.size()) + " further failures omitted");
}

} // namespace vncore
