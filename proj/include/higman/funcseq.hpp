#pragma once

#include <map>
#include <string>
#include <vector>

#include "higman/ints.hpp"

namespace higman {

/// A function Z -> Z with finite support, stored as its nonzero entries.
/// Equality is extensional: the entry map never stores a zero value.
class FunctionSeq {
 public:
  FunctionSeq() = default;  // the zero function

  static FunctionSeq from_entries(std::map<long long, Int> entries);

  /// Sequence notation (j0,...,j_{m-1}): value j_i at index i, zero
  /// elsewhere. Trailing zeros are immaterial.
  static FunctionSeq from_sequence(const std::vector<Int>& values);

  const std::map<long long, Int>& entries() const { return entries_; }
  Int value(long long i) const;
  bool is_zero() const { return entries_.empty(); }
  std::vector<long long> support() const;

  /// Support contained in {0,...,m-1}?
  bool in_em(long long m) const;

  friend bool operator==(const FunctionSeq&, const FunctionSeq&) = default;
  friend bool operator<(const FunctionSeq& f, const FunctionSeq& g);

 private:
  std::map<long long, Int> entries_;
};

/// f with f(j) moved by +-1 (entry dropped when it reaches zero).
FunctionSeq bump(const FunctionSeq& f, long long j, int sign);

/// bump at the last sequence slot m-1; f must lie in E_m (throws NotInEm).
FunctionSeq seq_plus(const FunctionSeq& f, long long m);

/// The reversing operation: result(i) = f(-i). An involution.
FunctionSeq reverse(const FunctionSeq& f);

/// A duplicate-free set of FunctionSeq, kept in canonical order
/// (lexicographic on the entry lists) for deterministic output.
class FunctionSet {
 public:
  FunctionSet() = default;
  static FunctionSet of(std::vector<FunctionSeq> members);
  const std::vector<FunctionSeq>& members() const { return members_; }
  friend bool operator==(const FunctionSet&, const FunctionSet&) = default;

 private:
  std::vector<FunctionSeq> members_;
};

/// Elementwise reverse, deduplicated; an involution on sets.
FunctionSet rho_set(const FunctionSet& xs);

/// `{i1:v1, i2:v2, ...}` with ascending indices; the zero function is `{}`.
std::string to_string(const FunctionSeq& f);

/// Accepts `{i:v, ...}` or the sequence shorthand `(j0,j1,...)`.
FunctionSeq parse_funcseq(const std::string& text);

/// Bare comma list `2,5,3` (sequence shorthand without parentheses), or any
/// form parse_funcseq accepts. Used by the CLI's --f flag.
FunctionSeq parse_funcseq_flag(const std::string& text);

std::string to_string(const FunctionSet& s);

/// `[f1; f2; ...]` where each member uses the function syntax above.
FunctionSet parse_funcset(const std::string& text);

/// All functions with support inside [-bound, bound], at most max_nonzero
/// nonzero entries, and values in [lo, hi] (a zero value means no entry).
/// Canonically ordered and deterministic; used by the verification sweeps.
std::vector<FunctionSeq> enumerate_functions(long long bound, long long max_nonzero, int lo,
                                             int hi);

}  // namespace higman
