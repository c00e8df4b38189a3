#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace polya {

/// Exact nonnegative integer for coefficients and orbit counts.
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigCount& value) { return value.str(); }

}  // namespace polya
