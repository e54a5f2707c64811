#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace dgog {

/// Exact integer used for group elements, multipliers and matrix entries.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

/// Least non-negative residue of `a` modulo `m` (m > 0).
Integer floor_mod(Integer const& a, Integer const& m);

/// Non-negative gcd; gcd(0, 0) = 0.
Integer gcd(Integer const& a, Integer const& b);

/// Inverse of `a` modulo `m`; requires gcd(a, m) = 1 and m > 0.
Integer mod_inverse(Integer const& a, Integer const& m);

Integer abs(Integer const& a);

std::string to_string(Integer const& a);

/// Parses an optionally signed decimal literal. Throws ParseError.
Integer parse_integer(std::string const& text);

}  // namespace dgog
