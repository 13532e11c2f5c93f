#include <doctest.h>

#include <random>

#include "higman/error.hpp"
#include "higman/word.hpp"

using namespace higman;

namespace {

const GenSym A = sym("a"), B = sym("b"), C = sym("c");

// Independent oracle: expand syllables into single +-1 letters and cancel
// adjacent inverse pairs until stable. Only usable for small exponents.
std::vector<std::pair<GenSym, int>> oracle_letters(const std::vector<Syllable>& raw) {
  std::vector<std::pair<GenSym, int>> letters;
  for (const auto& s : raw) {
    long long e = to_long(s.exp);
    int step = e > 0 ? 1 : -1;
    for (long long i = 0; i != e; i += step) letters.emplace_back(s.sym, step);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      if (letters[i].first == letters[i + 1].first &&
          letters[i].second + letters[i + 1].second == 0) {
        letters.erase(letters.begin() + i, letters.begin() + i + 2);
        changed = true;
        break;
      }
    }
  }
  return letters;
}

Word oracle_reduce(const std::vector<Syllable>& raw) {
  std::vector<Syllable> single;
  for (const auto& [g, e] : oracle_letters(raw)) single.push_back(Syllable{g, e});
  return Word::reduce(single);  // merging runs of one letter is trivial
}

std::vector<Syllable> random_raw(std::mt19937& rng, int len) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> exp_dist(-3, 3);
  std::vector<Syllable> raw;
  const GenSym syms[] = {A, B, C};
  for (int i = 0; i < len; ++i) raw.push_back(Syllable{syms[pick(rng)], exp_dist(rng)});
  return raw;
}

Word random_word(std::mt19937& rng, int len) { return Word::reduce(random_raw(rng, len)); }

}  // namespace

TEST_SUITE("word") {
  TEST_CASE("reduce cancels inverses and merges runs") {
    CHECK(Word::reduce({{A, 1}, {A, -1}}).empty());
    CHECK(Word::reduce({{C, 3}, {C, -3}}).empty());
    // b0^2 b1^5 b2^3 written letter by letter collapses to the b_f form
    Word expected = parse_word("b^2 c^-1 b^5 c^-1 b^3 c^2");
    std::vector<Syllable> raw = {{B, 2}, {C, -1}, {B, 5}, {C, 1}, {C, -2}, {B, 3}, {C, 2}};
    CHECK(Word::reduce(raw) == expected);
    CHECK(Word::reduce(raw) == oracle_reduce(raw));
  }

  TEST_CASE("reduce drops zero exponents and is idempotent") {
    std::mt19937 rng(7);
    for (int i = 0; i < 500; ++i) {
      auto raw = random_raw(rng, i % 12);
      Word w = Word::reduce(raw);
      for (std::size_t k = 0; k < w.size(); ++k) {
        CHECK(w.syllables()[k].exp != 0);
        if (k + 1 < w.size()) CHECK(w.syllables()[k].sym != w.syllables()[k + 1].sym);
      }
      CHECK(Word::reduce(w.syllables()) == w);
      CHECK(w == oracle_reduce(raw));
    }
  }

  TEST_CASE("multiply examples") {
    CHECK((parse_word("a") * parse_word("a^-1")).empty());
    CHECK(parse_word("b^2 c^-1") * parse_word("c b^3") == parse_word("b^5"));
    Word x = parse_word("c^-1 b^5 c");
    Word y = parse_word("c^-2 b^3 c^2");
    std::vector<Syllable> cat = x.syllables();
    cat.insert(cat.end(), y.syllables().begin(), y.syllables().end());
    CHECK(x * y == oracle_reduce(cat));
    CHECK(x * y == parse_word("c^-1 b^5 c^-1 b^3 c^2"));
  }

  TEST_CASE("identity and inverses, exhaustive short words") {
    // all reduced words with up to 4 syllables over {a,b,c}, exps in +-1,+-2
    std::vector<Word> words = {Word()};
    const GenSym syms[] = {A, B, C};
    std::vector<std::vector<Syllable>> layer = {{}};
    for (int len = 1; len <= 4; ++len) {
      std::vector<std::vector<Syllable>> next;
      for (const auto& pref : layer) {
        for (const auto& g : syms) {
          if (!pref.empty() && pref.back().sym == g) continue;
          for (int e : {-2, -1, 1, 2}) {
            auto ext = pref;
            ext.push_back(Syllable{g, e});
            words.push_back(Word::reduce(ext));
            next.push_back(std::move(ext));
          }
        }
      }
      layer = std::move(next);
    }
    for (const auto& w : words) {
      CHECK((w * Word()) == w);
      CHECK((Word() * w) == w);
      CHECK((w * w.inverse()).empty());
      CHECK((w.inverse() * w).empty());
      CHECK(w.inverse().inverse() == w);
    }
  }

  TEST_CASE("multiply is associative on random triples") {
    std::mt19937 rng(11);
    for (int i = 0; i < 300; ++i) {
      Word x = random_word(rng, 6), y = random_word(rng, 6), z = random_word(rng, 6);
      CHECK((x * y) * z == x * (y * z));
    }
  }

  TEST_CASE("invert reverses and negates") {
    CHECK(Word().inverse().empty());
    CHECK(parse_word("b^2 c^-1").inverse() == parse_word("c b^-2"));
    Word a_f = conjugate(parse_word("a"), parse_word("b^2 c^-1 b^5 c^-1 b^3 c^2"));
    CHECK((a_f * a_f.inverse()).empty());
  }

  TEST_CASE("conjugate") {
    Word b_f = parse_word("b^2 c^-1 b^5 c^-1 b^3 c^2");
    Word a_f = conjugate(parse_word("a"), b_f);
    // expand b2^-3 b1^-5 b0^-2 a b0^2 b1^5 b2^3 via the oracle
    std::vector<Syllable> raw;
    auto push_bi = [&](long long i, int e) {
      raw.push_back(Syllable{C, -i});
      raw.push_back(Syllable{B, e});
      raw.push_back(Syllable{C, i});
    };
    push_bi(2, -3);
    push_bi(1, -5);
    push_bi(0, -2);
    raw.push_back(Syllable{A, 1});
    push_bi(0, 2);
    push_bi(1, 5);
    push_bi(2, 3);
    CHECK(a_f == oracle_reduce(raw));

    CHECK(conjugate(parse_word("b c"), Word()) == parse_word("b c"));
    CHECK(conjugate(parse_word("c"), parse_word("c^5")) == parse_word("c"));
  }

  TEST_CASE("conjugate round trip") {
    std::mt19937 rng(13);
    for (int i = 0; i < 200; ++i) {
      Word x = random_word(rng, 5), g = random_word(rng, 5);
      CHECK(conjugate(conjugate(x, g), g.inverse()) == x);
    }
  }

  TEST_CASE("apply_endo") {
    std::map<GenSym, Word> delta = {
        {A, parse_word("a")}, {B, parse_word("c^-1 b c")}, {C, parse_word("c")}};
    CHECK(apply_endo(delta, parse_word("b")) == parse_word("c^-1 b c"));
    CHECK(apply_endo(delta, parse_word("a")) == parse_word("a"));

    std::map<GenSym, Word> delta_inv = {
        {A, parse_word("a")}, {B, parse_word("c b c^-1")}, {C, parse_word("c")}};
    CHECK(apply_endo(delta_inv, parse_word("c^-2 b c^2")) == parse_word("c^-1 b c"));

    CHECK_THROWS_AS(apply_endo(delta, parse_word("d")), Error);

    // homomorphism on random pairs
    std::mt19937 rng(17);
    for (int i = 0; i < 100; ++i) {
      Word x = random_word(rng, 5), y = random_word(rng, 5);
      CHECK(apply_endo(delta, x * y) == apply_endo(delta, x) * apply_endo(delta, y));
    }
  }

  TEST_CASE("apply_endo identity map is the identity") {
    std::map<GenSym, Word> id = {
        {A, Word::letter(A)}, {B, Word::letter(B)}, {C, Word::letter(C)}};
    std::mt19937 rng(19);
    for (int i = 0; i < 100; ++i) {
      Word w = random_word(rng, 6);
      CHECK(apply_endo(id, w) == w);
    }
  }

  TEST_CASE("pow") {
    Word w = parse_word("b c");
    CHECK(w.pow(0).empty());
    CHECK(w.pow(3) == w * w * w);
    CHECK(w.pow(-2) == (w * w).inverse());
    // conjugated single syllable admits huge exponents
    Word b1 = parse_word("c^-1 b c");
    Int huge = Int("1000000000000000000000000000000");
    Word big = b1.pow(huge);
    CHECK(big == parse_word("c^-1 b^1000000000000000000000000000000 c"));
    CHECK(big.pow(-1) * big == Word());
    // but a genuinely non-cyclic word cannot be materialized at that size
    CHECK_THROWS_AS(w.pow(huge), Error);
  }

  TEST_CASE("pow matches repeated multiplication on random words") {
    std::mt19937 rng(23);
    for (int i = 0; i < 100; ++i) {
      Word w = random_word(rng, 5);
      Word acc;
      for (int k = 0; k <= 6; ++k) {
        CHECK(w.pow(k) == acc);
        CHECK(w.pow(-k) == acc.inverse());
        acc = acc * w;
      }
    }
  }

  TEST_CASE("word text syntax") {
    Word w = parse_word("~d^-3 ~e^2 a");
    REQUIRE(w.size() == 3);
    CHECK(w.syllables()[0].sym == sym("d", 0, true));
    CHECK(w.syllables()[0].exp == -3);
    CHECK(w.syllables()[1].sym == sym("e", 0, true));
    CHECK(w.syllables()[2].sym == A);
    CHECK(to_string(w) == "~d^-3 ~e^2 a");

    CHECK(parse_word("1") == Word());
    CHECK(to_string(Word()) == "1");
    CHECK(parse_word("t1' u1") == Word::letter(sym("t1", 1)) * Word::letter(sym("u1")));
    CHECK(to_string(parse_word("t1'^2")) == "t1'^2");

    CHECK_THROWS_AS(parse_word("a^"), Error);
    CHECK_THROWS_AS(parse_word("a^x"), Error);
    CHECK_THROWS_AS(parse_word("^2"), Error);
    CHECK_THROWS_AS(parse_word("a=b"), Error);
    CHECK_THROWS_AS(parse_word("9lives"), Error);
  }

  TEST_CASE("parse/print round trip on random words") {
    std::mt19937 rng(29);
    for (int i = 0; i < 200; ++i) {
      Word w = random_word(rng, 8);
      CHECK(parse_word(to_string(w)) == w);
    }
  }

  TEST_CASE("gensym validation and ordering") {
    CHECK_THROWS_AS(sym("bad name"), Error);
    CHECK_THROWS_AS(sym("x^2"), Error);
    CHECK_THROWS_AS(sym("x="), Error);
    CHECK_THROWS_AS(sym("~x"), Error);
    CHECK_THROWS_AS(sym(""), Error);
    CHECK(valid_base("d#1"));
    CHECK_FALSE(valid_base("d#"));
    CHECK_FALSE(valid_base("#1"));
    CHECK(sym("t1") < sym("t1", 1));
    CHECK(sym("t1", 1) < sym("t1", 1, true));
    CHECK(sym("a") < sym("b"));
    CHECK(parse_gensym("~t1'") == sym("t1", 1, true));
  }
}
