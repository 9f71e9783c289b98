#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace chessspace {

/// Exact non-negative placement count.
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_string(const BigCount& value) { return value.str(); }

}  // namespace chessspace
