#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace fairdex {

// All valuations, gaps and welfare figures are exact rationals kept in
// canonical reduced form, so equality and sign tests are decidable.
using Value = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts integers ("42", "-16"), fractions ("9/2") and exact decimal
// strings ("0.25"). Throws InputError on anything else.
Value parse_value(std::string_view text);

// Canonical form: "p" when the denominator is 1, "p/q" otherwise.
std::string format_value(const Value& v);

}
