#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "higman/gensym.hpp"
#include "higman/ints.hpp"

namespace higman {

/// One run of a generator: sym^exp with exp != 0.
struct Syllable {
  GenSym sym;
  Int exp;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// A freely reduced word over GenSym. Reduction happens eagerly at
/// construction, so equality of Words is structural equality and every
/// identity below is a statement about normal forms. Immutable value type.
class Word {
 public:
  Word() = default;  // the identity

  /// Free reduction: merges adjacent runs of the same symbol, drops zero
  /// exponents, cancels across seams. Idempotent on reduced input.
  static Word reduce(std::vector<Syllable> raw);

  static Word letter(const GenSym& g, Int exp = 1);

  bool empty() const { return syls_.empty(); }
  std::size_t size() const { return syls_.size(); }
  const std::vector<Syllable>& syllables() const { return syls_; }

  Word inverse() const;

  /// this^k, exact for any k: a word whose cyclically reduced core is a
  /// single syllable admits a closed form; otherwise k must be small enough
  /// to materialize (throws word_too_large beyond that).
  Word pow(const Int& k) const;

  void collect_symbols(std::set<GenSym>& out) const;

  friend Word operator*(const Word& x, const Word& y);
  friend bool operator==(const Word&, const Word&) = default;

  /// Deterministic total order (syllable-wise lexicographic, prefix first).
  friend bool operator<(const Word& x, const Word& y);

 private:
  std::vector<Syllable> syls_;
};

/// g^-1 x g, reduced.
Word conjugate(const Word& x, const Word& g);

/// x^(y^i) = y^-i x y^i. For x == y this collapses to x.
Word conjugated_letter(const GenSym& x, const GenSym& y, const Int& i);

/// Homomorphic image under the substitution sending each symbol to its
/// mapped word. Every symbol occurring in w must be mapped.
Word apply_endo(const std::map<GenSym, Word>& images, const Word& w);

/// Replaces every symbol of w by its barred copy.
Word bar_word(const Word& w);

/// Word syntax: whitespace-separated `name`, `name^k` tokens; primes as
/// trailing apostrophes, bars as a leading `~`; the standalone token `1`
/// is the identity. Example: `~d^-3 ~e^2 a`.
Word parse_word(const std::string& text);

/// Inverse of parse_word; the identity prints as `1`.
std::string to_string(const Word& w);

}  // namespace higman
