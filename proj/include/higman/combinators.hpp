#pragma once

#include "higman/presentation.hpp"

namespace higman {

/// Subgroup isomorphism data for an HNN-extension: the stable letter sends
/// each u_i to v_i. The fixing case has v_i = u_i throughout.
struct IsoSpec {
  std::vector<std::pair<Word, Word>> pairs;

  static IsoSpec fixing(std::vector<Word> words);
};

/// HNN-extension of p with stable letter t: appends t and one relation
/// u^t = v per pair, in order. Counts grow by (1, |pairs|).
Presentation hnn(const Presentation& p, const GenSym& t, const IsoSpec& iso);

/// Left fold of hnn over several fresh stable letters.
Presentation hnn_multi(const Presentation& p,
                       const std::vector<std::pair<GenSym, IsoSpec>>& letters);

/// Amalgamated product realized by symbol sharing: generators are the union
/// (p1 order first, then new p2 symbols); relations are p1's followed by
/// those of p2 whose canonical relator is not already present.
Presentation amalgam_shared(const Presentation& p1, const Presentation& p2);

/// Direct product of presentations on disjoint alphabets: both generator
/// and relation lists concatenated, plus the commuting relations x^y = x
/// for every x in p1.gens, y in p2.gens (row-major).
Presentation direct_product(const Presentation& p1, const Presentation& p2);

/// One factor of the star construction: the group K_i, the generating words
/// of its subgroup L_i fixed by the stable letter t_i.
struct StarItem {
  Presentation k;
  std::vector<Word> l;
  GenSym t;
};

/// Input to the star construction. The common subgroup M is carried for
/// documentation; the side conditions G <= M <= K_i, K_i cap K_j = M are the
/// caller's responsibility (only stable-letter freshness is checked here).
struct StarInput {
  std::vector<StarItem> items;
  std::vector<Word> m;
};

/// The free product of the HNN-extensions K_i *_{L_i} t_i, all amalgamated
/// over their shared subgroup (realized by symbol sharing).
Presentation star(const StarInput& input);

struct BenignPair {
  Presentation k;
  SubgroupSpec l;
};

/// Benign-intersection recipe: K is the star construction, and L is
/// generated by the G-words conjugated by the full product t_1 t_2 ... t_r.
BenignPair benign_intersection(const std::vector<Word>& gwords, const StarInput& input);

/// Benign-join recipe: K is the star construction, and L is generated by
/// each G-word conjugated by each single t_i, in (i, word) order.
BenignPair benign_join(const std::vector<Word>& gwords, const StarInput& input);

/// The exponent-doubling extension of <b,c> by stable letters t_m, t_m':
///   b^{t_m} = b_{-m+1},  b^{t_m'} = b_{-m},  c^{t_m} = c^{t_m'} = c^2,
/// with b_i = c^-i b c^i expanded to reduced words.
Presentation group_xi(long long m);

/// The two-letter extension of <a> * Xi_1 where u1 fixes <b_1, t_1, t_1'>
/// and u2 fixes <a, b_0, t_1, t_1'>. 7 generators, 11 relations.
Presentation group_c();

/// The 9-generator, 20-relation group on a,b,c,t1,t1',u1,u2,d,e: group_c()
/// extended by d (fixing {a,b,c}^u1 and twisting {a,b,c}^u2 by b) and by e
/// (sending a, b, c to a, b^c, c).
Presentation group_a();

/// The barred copy of group_a().
Presentation group_abar();

/// Generators of group_a() in display order.
const std::vector<GenSym>& group_a_symbols();

}  // namespace higman
