#pragma once

#include <stdexcept>
#include <string>

namespace higman {

enum class Errc {
  unknown_generator,
  not_in_em,
  name_collision,
  undeclared_generator,
  duplicate_generator,
  shared_generators,
  already_barred,
  not_in_domain,
  count_mismatch,
  parse_error,
  usage_error,
  unknown_name,
  word_too_large,
};

const char* errc_name(Errc c);

/// Library-wide exception carrying a stable error code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& msg);

}  // namespace higman
