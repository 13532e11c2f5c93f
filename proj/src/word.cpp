#include "higman/word.hpp"

#include <algorithm>
#include <sstream>

#include "higman/error.hpp"

namespace higman {

namespace {

// Push one syllable onto a reduced stack, cancelling as needed.
void push_reduced(std::vector<Syllable>& stack, const GenSym& g, const Int& e) {
  if (e == 0) return;
  if (!stack.empty() && stack.back().sym == g) {
    stack.back().exp += e;
    if (stack.back().exp == 0) stack.pop_back();
    return;
  }
  stack.push_back(Syllable{g, e});
}

}  // namespace

Word Word::reduce(std::vector<Syllable> raw) {
  Word w;
  w.syls_.reserve(raw.size());
  for (auto& s : raw) push_reduced(w.syls_, s.sym, s.exp);
  return w;
}

Word Word::letter(const GenSym& g, Int exp) {
  Word w;
  if (exp != 0) w.syls_.push_back(Syllable{g, std::move(exp)});
  return w;
}

Word Word::inverse() const {
  Word w;
  w.syls_.reserve(syls_.size());
  for (auto it = syls_.rbegin(); it != syls_.rend(); ++it)
    w.syls_.push_back(Syllable{it->sym, -it->exp});
  return w;
}

Word operator*(const Word& x, const Word& y) {
  Word w;
  w.syls_ = x.syls_;
  for (const auto& s : y.syls_) push_reduced(w.syls_, s.sym, s.exp);
  return w;
}

void Word::collect_symbols(std::set<GenSym>& out) const {
  for (const auto& s : syls_) out.insert(s.sym);
}

bool operator<(const Word& x, const Word& y) {
  const auto& a = x.syls_;
  const auto& b = y.syls_;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i].sym != b[i].sym) return a[i].sym < b[i].sym;
    if (a[i].exp != b[i].exp) return a[i].exp < b[i].exp;
  }
  return a.size() < b.size();
}

Word Word::pow(const Int& k) const {
  if (k == 0 || empty()) return Word();
  if (k == 1) return *this;
  if (k == -1) return inverse();

  // Cyclic decomposition: *this = u^-1 * core * u with core cyclically
  // reduced, so (*this)^k = u^-1 * core^k * u.
  std::vector<Syllable> core = syls_;
  std::vector<Syllable> conj;  // u, built back to front
  while (core.size() >= 2 && core.front().sym == core.back().sym) {
    Syllable back = core.back();
    core.pop_back();
    core.front().exp += back.exp;
    conj.insert(conj.begin(), back);
    if (core.front().exp == 0) core.erase(core.begin());
  }
  Word u = Word::reduce(conj);

  Word core_pow;
  if (core.size() <= 1) {
    if (!core.empty()) core_pow = Word::letter(core.front().sym, core.front().exp * k);
  } else {
    // Core has >= 2 syllables: powers grow linearly, so k must be moderate.
    if (!fits_long(k) || (abs(k) * Int(core.size())) > 10'000'000)
      fail(Errc::word_too_large,
           "cannot materialize power " + k.str() + " of a word with core length " +
               std::to_string(core.size()));
    long long reps = to_long(abs(k));
    std::vector<Syllable> block = core;
    if (k < 0) {
      std::reverse(block.begin(), block.end());
      for (auto& s : block) s.exp = -s.exp;
    }
    std::vector<Syllable> raw;
    raw.reserve(block.size() * static_cast<std::size_t>(reps));
    for (long long i = 0; i < reps; ++i) raw.insert(raw.end(), block.begin(), block.end());
    core_pow = Word::reduce(std::move(raw));
  }
  return u.inverse() * core_pow * u;
}

Word conjugate(const Word& x, const Word& g) { return g.inverse() * x * g; }

Word conjugated_letter(const GenSym& x, const GenSym& y, const Int& i) {
  return Word::reduce({Syllable{y, -i}, Syllable{x, 1}, Syllable{y, i}});
}

Word apply_endo(const std::map<GenSym, Word>& images, const Word& w) {
  Word out;
  for (const auto& s : w.syllables()) {
    auto it = images.find(s.sym);
    if (it == images.end())
      fail(Errc::unknown_generator, "no image for generator " + to_string(s.sym));
    out = out * it->second.pow(s.exp);
  }
  return out;
}

Word bar_word(const Word& w) {
  std::vector<Syllable> raw;
  raw.reserve(w.size());
  for (const auto& s : w.syllables()) raw.push_back(Syllable{bar(s.sym), s.exp});
  return Word::reduce(std::move(raw));
}

Word parse_word(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  std::vector<Syllable> raw;
  while (in >> tok) {
    if (tok == "1") continue;  // identity marker
    std::string sym_part = tok;
    Int exp = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      sym_part = tok.substr(0, caret);
      std::string exp_part = tok.substr(caret + 1);
      if (exp_part.empty())
        fail(Errc::parse_error, "missing exponent after '^' in token '" + tok + "'");
      exp = parse_int(exp_part);
    }
    if (sym_part.empty()) fail(Errc::parse_error, "empty generator in token '" + tok + "'");
    raw.push_back(Syllable{parse_gensym(sym_part), std::move(exp)});
  }
  return Word::reduce(std::move(raw));
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  bool first = true;
  for (const auto& s : w.syllables()) {
    if (!first) out += ' ';
    first = false;
    out += to_string(s.sym);
    if (s.exp != 1) {
      out += '^';
      out += s.exp.str();
    }
  }
  return out;
}

}  // namespace higman
