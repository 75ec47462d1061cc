#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace kronmot {

/// Outcome of one exact identity check.
struct IdentityCheck {
    std::string identity;
    int m = 0;
    std::optional<int> k;
    int order = 0;
    bool pass = false;
    std::optional<int> first_failure_degree;
};

using Report = std::vector<IdentityCheck>;

inline bool all_pass(const Report& r) {
    return std::all_of(r.begin(), r.end(), [](const IdentityCheck& c) { return c.pass; });
}

inline void append(Report& into, const Report& from) { into.insert(into.end(), from.begin(), from.end()); }

} // namespace kronmot
