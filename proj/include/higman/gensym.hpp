#pragma once

#include <compare>
#include <string>

namespace higman {

/// Generator symbol: a base name decorated by primes and an optional bar.
/// Prints as `~base''` (bar first, primes appended); `t1` with one prime is
/// the symbol the relations write as t1'.
struct GenSym {
  std::string base;
  int primes = 0;
  bool barred = false;

  friend bool operator==(const GenSym&, const GenSym&) = default;
  // Ordering is (base, primes, barred); canonical generator sort relies on it.
  friend std::strong_ordering operator<=>(const GenSym&, const GenSym&) = default;
};

/// True for `name` or `name#123`, where name is [A-Za-z_][A-Za-z0-9_]*.
/// The `#k` suffix is reserved for machine-generated fresh names, so a
/// disjointified generator can never collide with hand-written input.
bool valid_base(const std::string& base);

/// Builds a symbol, validating the base name.
GenSym sym(std::string base, int primes = 0, bool barred = false);

/// The barred copy of g; g must not already be barred.
GenSym bar(const GenSym& g);

std::string to_string(const GenSym& g);

/// Parses `~base''` (no exponent part). Inverse of to_string.
GenSym parse_gensym(const std::string& token);

}  // namespace higman
