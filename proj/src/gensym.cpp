#include "higman/gensym.hpp"

#include <cctype>

#include "higman/error.hpp"

namespace higman {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

bool valid_base(const std::string& base) {
  if (base.empty() || !ident_start(base[0])) return false;
  std::size_t i = 1;
  while (i < base.size() && ident_char(base[i])) ++i;
  if (i == base.size()) return true;
  // optional fresh-name suffix #k
  if (base[i] != '#' || i + 1 == base.size()) return false;
  for (++i; i < base.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(base[i]))) return false;
  return true;
}

GenSym sym(std::string base, int primes, bool barred) {
  if (!valid_base(base)) fail(Errc::parse_error, "invalid generator name '" + base + "'");
  if (primes < 0) fail(Errc::parse_error, "negative prime count");
  return GenSym{std::move(base), primes, barred};
}

GenSym bar(const GenSym& g) {
  if (g.barred) fail(Errc::already_barred, "symbol already barred: " + to_string(g));
  return GenSym{g.base, g.primes, true};
}

std::string to_string(const GenSym& g) {
  std::string s;
  if (g.barred) s += '~';
  s += g.base;
  s.append(static_cast<std::size_t>(g.primes), '\'');
  return s;
}

GenSym parse_gensym(const std::string& token) {
  std::size_t i = 0;
  bool barred = false;
  if (i < token.size() && token[i] == '~') {
    barred = true;
    ++i;
  }
  std::size_t start = i;
  while (i < token.size() && token[i] != '\'') ++i;
  std::string base = token.substr(start, i - start);
  int primes = 0;
  while (i < token.size() && token[i] == '\'') {
    ++primes;
    ++i;
  }
  if (i != token.size())
    fail(Errc::parse_error, "trailing characters in generator token '" + token + "'");
  return sym(std::move(base), primes, barred);
}

}  // namespace higman
