#pragma once

#include <stdexcept>
#include <string_view>

namespace fairucb {

// Sensitive-attribute value of a user (or of an arm's speaker). SPlus is
// the privileged group, SMinus the protected one; in the shipped datasets
// these are male and female respectively.
enum class Group : int { SPlus = 0, SMinus = 1 };

enum class Phase : int { Train = 0, Test = 1 };

constexpr Group other(Group g) { return g == Group::SPlus ? Group::SMinus : Group::SPlus; }

constexpr std::string_view to_string(Group g) { return g == Group::SPlus ? "s+" : "s-"; }
constexpr std::string_view to_string(Phase p) { return p == Phase::Train ? "train" : "test"; }

inline Group group_from_string(std::string_view s) {
    if (s == "s+") return Group::SPlus;
    if (s == "s-") return Group::SMinus;
    throw std::invalid_argument("unknown group label: " + std::string(s));
}

inline Phase phase_from_string(std::string_view s) {
    if (s == "train") return Phase::Train;
    if (s == "test") return Phase::Test;
    throw std::invalid_argument("unknown phase label: " + std::string(s));
}

}  // namespace fairucb
