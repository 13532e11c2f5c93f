#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "higman/error.hpp"
#include "higman/word.hpp"

namespace higman {

/// A defining relation, kept as the equation lhs = rhs (conjugations on
/// either side are already expanded into plain words).
struct Relation {
  Word lhs;
  Word rhs;

  friend bool operator==(const Relation&, const Relation&) = default;
};

/// A finite presentation: ordered generators (no duplicates) and ordered
/// relations. Emission order is part of the contract - golden files compare
/// byte for byte.
struct Presentation {
  std::vector<GenSym> gens;
  std::vector<Relation> rels;

  bool has_gen(const GenSym& g) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Generating words of a subgroup of an ambient presentation; `over` is a
/// label (file name or stage name) identifying that ambient group.
struct SubgroupSpec {
  std::string over;
  std::vector<Word> gens;

  friend bool operator==(const SubgroupSpec&, const SubgroupSpec&) = default;
};

/// Benign-subgroup data: the finitely presented overgroup K, the generating
/// words of its finitely generated subgroup L, and the three words
/// designating the free generators a, b, c inside K.
struct ExplicitBenign {
  Presentation k;
  SubgroupSpec l;
  std::array<Word, 3> abc;
};

struct ValidationIssue {
  Errc code;
  std::string detail;
};

/// First invariant violation, if any: every relation symbol declared, no
/// duplicate generators.
std::optional<ValidationIssue> validate(const Presentation& p);

/// Do all subgroup words use only declared generators of p?
std::optional<ValidationIssue> validate_over(const Presentation& p, const SubgroupSpec& s);

/// Adds the generator `name` with defining relation name = defn.
/// Counts grow by exactly (1, 1).
Presentation tietze_add(const Presentation& p, const GenSym& name, const Word& defn);

/// The isomorphic copy on barred symbols; counts unchanged.
Presentation bar_copy(const Presentation& p);

struct Renaming {
  std::map<GenSym, GenSym> map;

  Word apply(const Word& w) const;
  GenSym apply(const GenSym& g) const;
  bool identity() const { return map.empty(); }
};

/// Renames generators of p that collide with `taken` using the fresh-name
/// scheme base#1, base#2, ... (injective); symbols in `keep` are exempt.
/// Relations are rewritten through the renaming, which is also returned so
/// callers can rewrite subgroup words.
std::pair<Presentation, Renaming> disjointify(const Presentation& p,
                                              const std::set<GenSym>& taken,
                                              const std::set<GenSym>& keep = {});

std::pair<std::size_t, std::size_t> counts(const Presentation& p);

/// Canonical form for comparisons: generators sorted by (base, primes,
/// barred); each relation turned into the reduced relator lhs*rhs^-1, the
/// lexicographically smaller of relator and inverse kept; trivial relators
/// dropped; relators sorted and deduplicated. Idempotent.
Presentation normalize(const Presentation& p);

bool normal_equal(const Presentation& p1, const Presentation& p2);

/// Canonical relator of one relation (as used by normalize).
Word relator_of(const Relation& r);

// --- text and JSON formats ---------------------------------------------
//
// Presentation text: one `gen <name>` line per generator, then one
// `rel <word> = <word>` line per relation, in order. `#` starts a comment
// (at line start or after whitespace); blank lines ignored.
//
// Subgroup text: an `over <label>` header, then one `sub <word>` line per
// generating word.

std::string to_text(const Presentation& p);
Presentation presentation_from_text(const std::string& text,
                                    const std::string& source_name = "<input>");

std::string to_text(const SubgroupSpec& s);
SubgroupSpec subgroup_from_text(const std::string& text,
                                const std::string& source_name = "<input>");

nlohmann::ordered_json to_json(const Presentation& p);
Presentation presentation_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const SubgroupSpec& s);

}  // namespace higman
