#pragma once

#include <boost/rational.hpp>

#include <cstdio>
#include <string>

#include "pqsim/errors.hpp"

namespace pqsim {

/// Exact arithmetic for ratios, bounds and ordered-set values.
using Rational = boost::rational<long long>;

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// Always "p/q", the form stored in CSV output.
inline std::string to_fraction(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Human rendering: exact value plus a fixed-precision decimal.
inline std::string format_value(const Rational& r) {
    std::string exact = r.denominator() == 1 ? std::to_string(r.numerator()) : to_fraction(r);
    char buf[64];
    std::snprintf(buf, sizeof(buf), " (~%.6f)", to_double(r));
    return exact + buf;
}

/// Accepts "p" or "p/q".
inline Rational parse_rational(const std::string& s) {
    long long num = 0;
    long long den = 1;
    bool ok = false;
    try {
        std::size_t pos = 0;
        num = std::stoll(s, &pos);
        if (pos == s.size()) {
            ok = true;
        } else if (s[pos] == '/') {
            std::size_t pos2 = 0;
            den = std::stoll(s.substr(pos + 1), &pos2);
            ok = pos + 1 + pos2 == s.size() && den != 0;
        }
    } catch (const std::exception&) {
        ok = false;
    }
    if (!ok) throw ParamError("malformed rational: " + s);
    return Rational(num, den);
}

}  // namespace pqsim
