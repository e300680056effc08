#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace updag {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

/// Canonical "p/q" string, q >= 1, reduced. Integers keep the "/1".
std::string rat_to_string(const Rat& r);

/// Parses "p/q" or "p". Throws Error(Parse) on malformed input.
Rat rat_from_string(std::string_view s);

/// floor(r) as a BigInt (round toward -infinity).
BigInt rat_floor(const Rat& r);

/// The dyadic rational m/2^k with minimal k (then minimal |m|) strictly
/// inside the open interval (lo, hi). Requires lo < hi.
Rat dyadic_between(const Rat& lo, const Rat& hi);

inline Rat just_below(const Rat& x) { return dyadic_between(x - 1, x); }
inline Rat just_above(const Rat& x) { return dyadic_between(x, x + 1); }

double rat_to_double(const Rat& r);

}  // namespace updag
