#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sqfd {

/// Arbitrary-precision signed integer used for every count and coefficient.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& v) { return v.str(); }

}  // namespace sqfd
