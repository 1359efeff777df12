#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <string>

#include "curvlab/errors.hpp"

namespace curvlab {

/// Exact arbitrary-precision rational. Every field coefficient in the library
/// is one of these; doubles appear only in finite-difference oracles and
/// report norms.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

/// Parses "p" or "p/q" with optional leading sign. q must be positive.
inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den <= 0) throw argument_error("rational denominator must be positive: " + s);
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw argument_error("malformed rational: " + s);
    }
}

/// Canonical "p" / "p/q" text form.
inline std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

} // namespace curvlab
