#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "qhk/errors.hpp"

namespace qhk {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw DivisionByZero("0 raised to a negative power");
        return Rational(0);
    }
    Rational b = base;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    if (e < 0) acc = Rational(1) / acc;
    return acc;
}

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// Floor of a rational as a big integer.
inline Int rat_floor(const Rational& r) {
    Int n = rat_num(r), d = rat_den(r);
    Int q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

inline std::string rat_str(const Rational& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

/// Parses "p", "-p" or "p/q".
inline Rational rat_parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int n(s.substr(0, slash)), d(s.substr(slash + 1));
        if (d == 0) throw DivisionByZero("rational with zero denominator: " + s);
        return Rational(n, d);
    } catch (const std::exception& e) {
        throw ParseError("cannot parse rational '" + s + "': " + e.what());
    }
}

inline Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(Int a, Int b) { return boost::multiprecision::lcm(a, b); }

inline long rat_to_long(const Rational& r, const char* what = "value") {
    if (rat_den(r) != 1) throw LogicError(std::string(what) + " is not an integer: " + rat_str(r));
    Int n = rat_num(r);
    if (n > std::numeric_limits<long>::max() || n < std::numeric_limits<long>::min())
        throw LogicError(std::string(what) + " out of range");
    return static_cast<long>(n);
}

}  // namespace qhk
