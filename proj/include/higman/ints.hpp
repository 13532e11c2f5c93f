#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace higman {

/// Exact integer used for word exponents and function values; never bounded.
using Int = boost::multiprecision::cpp_int;

inline int sign_of(const Int& v) { return v.sign(); }

bool fits_long(const Int& v);
long long to_long(const Int& v);  // throws word_too_large if out of range

std::string int_to_string(const Int& v);

/// Strict decimal parse: optional leading '-', then digits only.
Int parse_int(const std::string& text);

}  // namespace higman
