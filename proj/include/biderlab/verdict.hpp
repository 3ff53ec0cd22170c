#pragma once

#include <string>
#include <utility>
#include <vector>

namespace biderlab {

enum class Status { pass, fail, not_applicable };

inline const char* to_string(Status s) {
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::not_applicable: return "not-applicable";
    }
    return "fail";
}

/// Outcome of one check. `detail` carries the witness on failure.
struct Verdict {
    std::string name;
    Status status = Status::pass;
    std::string detail;

    bool passed() const { return status == Status::pass; }
    bool acceptable() const { return status != Status::fail; }

    static Verdict of(std::string name, bool ok, std::string detail = {}) {
        return {std::move(name), ok ? Status::pass : Status::fail, std::move(detail)};
    }
};

inline bool all_acceptable(const std::vector<Verdict>& vs) {
    for (const auto& v : vs)
        if (!v.acceptable()) return false;
    return true;
}

} // namespace biderlab
