#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace nisat {

// Exact signed integers for path values. Path sums go negative once
// correction edges exist and can grow far past 64 bits.
using BigInt = boost::multiprecision::cpp_int;

std::string to_decimal(const BigInt& v);
BigInt parse_decimal(std::string_view text);

}  // namespace nisat
