#pragma once

#include "higman/funcseq.hpp"
#include "higman/word.hpp"

namespace higman {

/// One letter of the decomposition of a word over {a, b_i : i in Z}, where
/// b_i = b^{c^i}. Kind A is the letter a (index always 0).
struct ABLetter {
  enum class Kind { A, B };
  Kind kind;
  Int index;
  Int exp;

  friend bool operator==(const ABLetter&, const ABLetter&) = default;
};

/// Scans a word over {a,b,c}, tracking the running c-offset: c adjusts the
/// offset, b at offset k emits B with index -k, and a is only legal at
/// offset 0 (which must also be the final offset). On success the letters
/// re-expand exactly to the input; that round trip is checked on every call.
/// Throws NotInDomain when the scan does not recognize the word.
std::vector<ABLetter> spine_decompose(const Word& w);

/// Expands letters back to a word over {a,b,c}: A -> a^e, B(i,e) -> c^-i b^e c^i.
Word spine_recompose(const std::vector<ABLetter>& letters);

/// The automorphism delta^k of F = <a,b,c>, where delta fixes a, c and
/// sends b to b^c (so b_i goes to b_{i+k}). Conjugation by e^k.
Word e_conj(const Word& w, long long k);

/// Conjugation by d^n as an action on <a, b_i>: the letters b_1, b_2, ...
/// stay fixed; a and b_0, b_{-1}, ... are conjugated by b^n.
Word d_conj_pow(const Word& w, const Int& n);

/// Single step of the d-action (s = +1 or -1).
Word d_conj(const Word& w, int s);

/// Conjugation by d_j^n where d_j = d^{e^j}: shift frame by e^-j, act by
/// d^n, shift back.
Word dj_conj_pow(const Word& w, long long j, const Int& n);

/// Single step of the d_j-action (s = +1 or -1).
Word dj_conj(const Word& w, long long j, int s);

/// Conjugation by d_f = prod_j d_j^{f(j)}. Support is processed in
/// ascending order, and order independence is asserted on every call.
Word df_conj(const Word& w, const FunctionSeq& f);

/// prod_i y^-i x^{f(i)} y^i over ascending support.
Word spine_word(const GenSym& x, const GenSym& y, const FunctionSeq& f);

Word b_word(const FunctionSeq& f);  // b_f over {b, c}
Word a_word(const FunctionSeq& f);  // a^{b_f}
Word d_word(const FunctionSeq& f);  // d_f over {d, e}

/// d_{rho f} = prod_j d_j^{f(-j)} in ascending j order.
Word d_rho_word(const FunctionSeq& f);

/// The reversed-factor variant: prod_i d_{-i}^{f(i)} in ascending i order.
Word d_tilde_rho_word(const FunctionSeq& f);

struct CheckReport {
  bool ok = true;
  std::string detail;
};

/// Checks a_f^{d_j} = a_{f_j^+} and a_f^{d_j^-1} = a_{f_j^-} as exact
/// reduced words. Reports rather than throwing.
CheckReport lemma35_check(const FunctionSeq& f, long long j);

/// A pair in the direct product Abar x A, each coordinate reduced.
struct PairWord {
  Word left;   // over barred symbols
  Word right;  // over unbarred symbols

  friend bool operator==(const PairWord&, const PairWord&) = default;
};

/// Reserved abstract alphabet g1, g2, g3 used to witness membership in the
/// subgroup generated by (abar,a), (dbar,d), (ebar,e^-1).
const std::vector<GenSym>& abstract_symbols();

/// Evaluates an abstract word: left coordinate substitutes (abar,dbar,ebar)
/// for (g1,g2,g3), right coordinate substitutes (a,d,e^-1).
PairWord pair_eval(const Word& abstract);

/// lambda_f = (dbar_f, dtilde_{rho f}); membership in the pair subgroup is
/// re-derived via pair_eval on every call.
PairWord lambda_pair(const FunctionSeq& f);

/// Drops bars and negates every ebar exponent; a homomorphism on words over
/// {abar, dbar, ebar}.
Word bar_drop_translate(const Word& q1);

/// Checks that conjugating a by the d/e-program d_tilde_rho_word(f) yields
/// exactly a_{rho f} (and likewise for d_rho_word), against the independent
/// expansion of a^{b_{rho f}}.
CheckReport rho_chain_check(const FunctionSeq& f);

}  // namespace higman
