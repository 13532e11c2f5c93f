#include "higman/action.hpp"

#include <stdexcept>

#include "higman/error.hpp"

namespace higman {

namespace {

const GenSym kA = GenSym{"a", 0, false};
const GenSym kB = GenSym{"b", 0, false};
const GenSym kC = GenSym{"c", 0, false};
const GenSym kD = GenSym{"d", 0, false};
const GenSym kE = GenSym{"e", 0, false};
const GenSym kAbar = GenSym{"a", 0, true};
const GenSym kDbar = GenSym{"d", 0, true};
const GenSym kEbar = GenSym{"e", 0, true};

void append_ab_letter(std::vector<Syllable>& raw, const ABLetter& l) {
  if (l.kind == ABLetter::Kind::A) {
    raw.push_back(Syllable{kA, l.exp});
  } else {
    if (l.index != 0) raw.push_back(Syllable{kC, -l.index});
    raw.push_back(Syllable{kB, l.exp});
    if (l.index != 0) raw.push_back(Syllable{kC, l.index});
  }
}

}  // namespace

std::vector<ABLetter> spine_decompose(const Word& w) {
  std::vector<ABLetter> letters;
  Int offset = 0;
  for (const auto& s : w.syllables()) {
    if (s.sym == kC) {
      offset += s.exp;
    } else if (s.sym == kB) {
      letters.push_back(ABLetter{ABLetter::Kind::B, -offset, s.exp});
    } else if (s.sym == kA) {
      if (offset != 0)
        fail(Errc::not_in_domain, "letter a at nonzero c-offset " + offset.str() + " in " + to_string(w));
      letters.push_back(ABLetter{ABLetter::Kind::A, 0, s.exp});
    } else {
      fail(Errc::not_in_domain, "unexpected letter " + to_string(s.sym) + " in " + to_string(w));
    }
  }
  if (offset != 0)
    fail(Errc::not_in_domain, "nonzero final c-offset " + offset.str() + " in " + to_string(w));
  if (spine_recompose(letters) != w)
    throw std::logic_error("spine_decompose round trip failed for " + to_string(w));
  return letters;
}

Word spine_recompose(const std::vector<ABLetter>& letters) {
  std::vector<Syllable> raw;
  raw.reserve(letters.size() * 3);
  for (const auto& l : letters) append_ab_letter(raw, l);
  return Word::reduce(std::move(raw));
}

Word e_conj(const Word& w, long long k) {
  if (k == 0) return w;
  // Direct image of the substitution a -> a, b -> c^-k b c^k, c -> c.
  Int shift(k);
  std::vector<Syllable> raw;
  raw.reserve(w.size() * 3);
  for (const auto& s : w.syllables()) {
    if (s.sym == kB) {
      raw.push_back(Syllable{kC, -shift});
      raw.push_back(Syllable{kB, s.exp});
      raw.push_back(Syllable{kC, shift});
    } else if (s.sym == kA || s.sym == kC) {
      raw.push_back(s);
    } else {
      fail(Errc::unknown_generator, "no image for generator " + to_string(s.sym));
    }
  }
  return Word::reduce(std::move(raw));
}

Word d_conj_pow(const Word& w, const Int& n) {
  if (n == 0) return w;
  std::vector<ABLetter> letters = spine_decompose(w);
  std::vector<Syllable> raw;
  raw.reserve(letters.size() * 5);
  for (const auto& l : letters) {
    bool moved = l.kind == ABLetter::Kind::A || l.index <= 0;
    if (moved) raw.push_back(Syllable{kB, -n});
    append_ab_letter(raw, l);
    if (moved) raw.push_back(Syllable{kB, n});
  }
  return Word::reduce(std::move(raw));
}

Word d_conj(const Word& w, int s) {
  if (s != 1 && s != -1) fail(Errc::usage_error, "d step must be +1 or -1");
  return d_conj_pow(w, Int(s));
}

Word dj_conj_pow(const Word& w, long long j, const Int& n) {
  return e_conj(d_conj_pow(e_conj(w, -j), n), j);
}

Word dj_conj(const Word& w, long long j, int s) {
  if (s != 1 && s != -1) fail(Errc::usage_error, "d_j step must be +1 or -1");
  return dj_conj_pow(w, j, Int(s));
}

Word df_conj(const Word& w, const FunctionSeq& f) {
  Word ascending = w;
  for (const auto& [j, v] : f.entries()) ascending = dj_conj_pow(ascending, j, v);
  Word descending = w;
  const auto& entries = f.entries();
  for (auto it = entries.rbegin(); it != entries.rend(); ++it)
    descending = dj_conj_pow(descending, it->first, it->second);
  if (ascending != descending)
    throw std::logic_error("d_f action is order dependent on " + to_string(w));
  return ascending;
}

Word spine_word(const GenSym& x, const GenSym& y, const FunctionSeq& f) {
  std::vector<Syllable> raw;
  for (const auto& [i, v] : f.entries()) {
    if (i != 0) raw.push_back(Syllable{y, Int(-i)});
    raw.push_back(Syllable{x, v});
    if (i != 0) raw.push_back(Syllable{y, Int(i)});
  }
  return Word::reduce(std::move(raw));
}

Word b_word(const FunctionSeq& f) { return spine_word(kB, kC, f); }

Word a_word(const FunctionSeq& f) { return conjugate(Word::letter(kA), b_word(f)); }

Word d_word(const FunctionSeq& f) { return spine_word(kD, kE, f); }

Word d_rho_word(const FunctionSeq& f) { return spine_word(kD, kE, reverse(f)); }

Word d_tilde_rho_word(const FunctionSeq& f) {
  std::vector<Syllable> raw;
  for (const auto& [i, v] : f.entries()) {
    if (i != 0) raw.push_back(Syllable{kE, Int(i)});
    raw.push_back(Syllable{kD, v});
    if (i != 0) raw.push_back(Syllable{kE, Int(-i)});
  }
  return Word::reduce(std::move(raw));
}

CheckReport lemma35_check(const FunctionSeq& f, long long j) {
  CheckReport report;
  Word base = a_word(f);
  for (int s : {+1, -1}) {
    Word lhs = dj_conj(base, j, s);
    Word rhs = a_word(bump(f, j, s));
    if (lhs != rhs) {
      report.ok = false;
      report.detail += "f=" + to_string(f) + " j=" + std::to_string(j) +
                       (s > 0 ? " +" : " -") + ": a_f^{d_j" + (s > 0 ? "" : "^-1") +
                       "} = " + to_string(lhs) + " but a_{f_j" + (s > 0 ? "^+" : "^-") +
                       "} = " + to_string(rhs) + "\n";
    }
  }
  return report;
}

const std::vector<GenSym>& abstract_symbols() {
  static const std::vector<GenSym> syms = {GenSym{"g1", 0, false}, GenSym{"g2", 0, false},
                                           GenSym{"g3", 0, false}};
  return syms;
}

PairWord pair_eval(const Word& abstract) {
  const auto& g = abstract_symbols();
  std::map<GenSym, Word> left_images = {
      {g[0], Word::letter(kAbar)},
      {g[1], Word::letter(kDbar)},
      {g[2], Word::letter(kEbar)},
  };
  std::map<GenSym, Word> right_images = {
      {g[0], Word::letter(kA)},
      {g[1], Word::letter(kD)},
      {g[2], Word::letter(kE, -1)},
  };
  return PairWord{apply_endo(left_images, abstract), apply_endo(right_images, abstract)};
}

PairWord lambda_pair(const FunctionSeq& f) {
  PairWord pair{bar_word(d_word(f)), d_tilde_rho_word(f)};
  // Witness: prod_i g3^-i g2^{f(i)} g3^i evaluates to exactly this pair.
  const auto& g = abstract_symbols();
  std::vector<Syllable> raw;
  for (const auto& [i, v] : f.entries()) {
    if (i != 0) raw.push_back(Syllable{g[2], Int(-i)});
    raw.push_back(Syllable{g[1], v});
    if (i != 0) raw.push_back(Syllable{g[2], Int(i)});
  }
  if (pair_eval(Word::reduce(std::move(raw))) != pair)
    throw std::logic_error("lambda pair is not a pair_eval image for f=" + to_string(f));
  return pair;
}

Word bar_drop_translate(const Word& q1) {
  std::map<GenSym, Word> images = {
      {kAbar, Word::letter(kA)},
      {kDbar, Word::letter(kD)},
      {kEbar, Word::letter(kE, -1)},
  };
  return apply_endo(images, q1);
}

namespace {

// Interprets a word over {d, e} as a conjugation program acting on w:
// maintaining an e-offset k, each run d^n at offset k applies the
// d_{-k}^n action. The final offset must be zero.
Word run_de_program(const Word& w, const Word& program) {
  Word acc = w;
  Int offset = 0;
  for (const auto& s : program.syllables()) {
    if (s.sym == kE) {
      offset += s.exp;
    } else if (s.sym == kD) {
      acc = dj_conj_pow(acc, to_long(-offset), s.exp);
    } else {
      fail(Errc::not_in_domain, "unexpected letter " + to_string(s.sym) + " in d/e program");
    }
  }
  if (offset != 0) fail(Errc::not_in_domain, "unbalanced e-offset in d/e program");
  return acc;
}

}  // namespace

CheckReport rho_chain_check(const FunctionSeq& f) {
  CheckReport report;
  Word expected = a_word(reverse(f));
  Word a = Word::letter(kA);
  Word via_tilde = run_de_program(a, d_tilde_rho_word(f));
  Word via_rho = run_de_program(a, d_rho_word(f));
  if (via_tilde != expected || via_rho != expected) {
    report.ok = false;
    report.detail = "f=" + to_string(f) + ": a^{dtilde_rho f} = " + to_string(via_tilde) +
                    ", a^{d_rho f} = " + to_string(via_rho) + ", a_{rho f} = " +
                    to_string(expected);
  }
  return report;
}

}  // namespace higman
