#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pinnforge {

/// Extents of a dense tensor, outermost axis first. Rank-0 (empty) means scalar.
using Shape = std::vector<std::size_t>;

/// Raised for malformed run configurations (CLI maps this to exit code 2).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised for numeric failures during a run (CLI maps this to exit code 1).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

inline void check(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

inline std::size_t shape_size(const Shape& s) {
    std::size_t n = 1;
    for (std::size_t e : s) n *= e;
    return n;
}

inline std::string shape_str(const Shape& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    out += ")";
    return out;
}

}  // namespace pinnforge
