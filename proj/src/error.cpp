#include "higman/error.hpp"

namespace higman {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::unknown_generator: return "UnknownGenerator";
    case Errc::not_in_em: return "NotInEm";
    case Errc::name_collision: return "NameCollision";
    case Errc::undeclared_generator: return "UndeclaredGenerator";
    case Errc::duplicate_generator: return "DuplicateGenerator";
    case Errc::shared_generators: return "SharedGenerators";
    case Errc::already_barred: return "AlreadyBarred";
    case Errc::not_in_domain: return "NotInDomain";
    case Errc::count_mismatch: return "CountMismatch";
    case Errc::parse_error: return "ParseError";
    case Errc::usage_error: return "UsageError";
    case Errc::unknown_name: return "UnknownName";
    case Errc::word_too_large: return "WordTooLarge";
  }
  return "Error";
}

Error::Error(Errc code, const std::string& msg)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace higman
