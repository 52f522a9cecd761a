#include "qss/common.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace qss {

uint64_t checked_pow(uint64_t base, uint32_t exp, uint64_t limit, const char* what) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < exp; ++i) {
        if (base != 0 && r > limit / base) {
            throw BudgetExceeded(std::string(what) + ": " + std::to_string(base) + "^" +
                                 std::to_string(exp) + " exceeds limit " + std::to_string(limit));
        }
        r *= base;
    }
    if (r > limit) {
        throw BudgetExceeded(std::string(what) + ": " + std::to_string(r) + " exceeds limit " +
                             std::to_string(limit));
    }
    return r;
}

std::string format_real(double x) {
    if (x == 0.0) x = 0.0;  // collapse -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", x);
    // "-0.000000000000" can still appear when x rounds to zero from below
    if (std::string_view(buf) == "-0.000000000000") return "0.000000000000";
    return buf;
}

double round_real(double x) {
    double r = std::nearbyint(x * 1e12) / 1e12;
    if (r == 0.0) r = 0.0;
    return r;
}

std::vector<uint32_t> checked_subset(std::vector<uint32_t> s, uint32_t n) {
    std::sort(s.begin(), s.end());
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= n) {
            throw InvalidSubset("subset index " + std::to_string(s[i]) +
                                " out of range [0, " + std::to_string(n) + ")");
        }
        if (i > 0 && s[i] == s[i - 1]) {
            throw InvalidSubset("duplicate subset index " + std::to_string(s[i]));
        }
    }
    return s;
}

std::vector<uint32_t> subset_complement(const std::vector<uint32_t>& s, uint32_t n) {
    std::vector<uint32_t> out;
    out.reserve(n - s.size());
    size_t j = 0;
    for (uint32_t i = 0; i < n; ++i) {
        if (j < s.size() && s[j] == i) {
            ++j;
        } else {
            out.push_back(i);
        }
    }
    return out;
}

std::string subset_to_string(const std::vector<uint32_t>& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i] + 1);
    }
    out += "}";
    return out;
}

}  // namespace qss
