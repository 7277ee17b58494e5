#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <string_view>

#include "ramseylab/errors.hpp"

namespace ramseylab {

// Exact rational arithmetic for all density values. Densities, balances and
// thresholds are never represented in floating point.
using Rat = boost::rational<long long>;

inline long long rat_floor(const Rat& r) {
    long long q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

inline long long rat_ceil(const Rat& r) {
    long long q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
    return q;
}

inline bool rat_is_integer(const Rat& r) { return r.denominator() == 1; }

/// Serializes as "p/q", or plain "p" when the denominator is 1.
inline std::string rat_str(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Parses "p" or "p/q". Throws DomainError on malformed input or q = 0.
inline Rat rat_parse(std::string_view s) {
    auto bad = [&] { throw DomainError("invalid rational: " + std::string(s)); };
    if (s.empty()) bad();
    std::size_t slash = s.find('/');
    auto parse_int = [&](std::string_view t) -> long long {
        if (t.empty()) bad();
        std::size_t pos = 0;
        bool neg = t[0] == '-';
        if (neg) pos = 1;
        if (pos == t.size()) bad();
        long long v = 0;
        for (; pos < t.size(); ++pos) {
            if (t[pos] < '0' || t[pos] > '9') bad();
            v = v * 10 + (t[pos] - '0');
        }
        return neg ? -v : v;
    };
    if (slash == std::string_view::npos) return Rat(parse_int(s));
    long long num = parse_int(s.substr(0, slash));
    long long den = parse_int(s.substr(slash + 1));
    if (den == 0) bad();
    return Rat(num, den);
}

}  // namespace ramseylab
