#include "higman/ints.hpp"

#include <limits>

#include "higman/error.hpp"

namespace higman {

bool fits_long(const Int& v) {
  return v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max();
}

long long to_long(const Int& v) {
  if (!fits_long(v)) fail(Errc::word_too_large, "integer exceeds machine range: " + v.str());
  return v.convert_to<long long>();
}

std::string int_to_string(const Int& v) { return v.str(); }

Int parse_int(const std::string& text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && text[i] == '-') {
    neg = true;
    ++i;
  }
  if (i == text.size()) fail(Errc::parse_error, "expected integer, got '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9')
      fail(Errc::parse_error, "bad digit in integer '" + text + "'");
  }
  Int v(text.substr(i));
  return neg ? Int(-v) : v;
}

}  // namespace higman
