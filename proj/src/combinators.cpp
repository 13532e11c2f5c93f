#include "higman/combinators.hpp"

#include <algorithm>
#include <set>

#include "higman/error.hpp"

namespace higman {

IsoSpec IsoSpec::fixing(std::vector<Word> words) {
  IsoSpec iso;
  iso.pairs.reserve(words.size());
  for (auto& w : words) iso.pairs.emplace_back(w, w);
  return iso;
}

Presentation hnn(const Presentation& p, const GenSym& t, const IsoSpec& iso) {
  if (p.has_gen(t)) fail(Errc::name_collision, "stable letter " + to_string(t) + " already in use");
  std::set<GenSym> declared(p.gens.begin(), p.gens.end());
  auto check = [&](const Word& w) {
    for (const auto& s : w.syllables())
      if (!declared.count(s.sym))
        fail(Errc::undeclared_generator,
             to_string(s.sym) + " in isomorphism data is not a generator");
  };
  Presentation out = p;
  out.gens.push_back(t);
  Word tw = Word::letter(t);
  for (const auto& [u, v] : iso.pairs) {
    check(u);
    check(v);
    out.rels.push_back(Relation{conjugate(u, tw), v});
  }
  return out;
}

Presentation hnn_multi(const Presentation& p,
                       const std::vector<std::pair<GenSym, IsoSpec>>& letters) {
  Presentation out = p;
  for (const auto& [t, iso] : letters) out = hnn(out, t, iso);
  return out;
}

Presentation amalgam_shared(const Presentation& p1, const Presentation& p2) {
  Presentation out = p1;
  for (const auto& g : p2.gens)
    if (!out.has_gen(g)) out.gens.push_back(g);
  std::set<Word> known;
  for (const auto& r : p1.rels) known.insert(relator_of(r));
  for (const auto& r : p2.rels)
    if (!known.count(relator_of(r))) out.rels.push_back(r);
  return out;
}

Presentation direct_product(const Presentation& p1, const Presentation& p2) {
  for (const auto& g : p2.gens)
    if (p1.has_gen(g)) fail(Errc::shared_generators, "factors share generator " + to_string(g));
  Presentation out = p1;
  out.gens.insert(out.gens.end(), p2.gens.begin(), p2.gens.end());
  out.rels.insert(out.rels.end(), p2.rels.begin(), p2.rels.end());
  for (const auto& x : p1.gens)
    for (const auto& y : p2.gens)
      out.rels.push_back(Relation{conjugate(Word::letter(x), Word::letter(y)), Word::letter(x)});
  return out;
}

Presentation star(const StarInput& input) {
  std::set<GenSym> stables;
  for (const auto& item : input.items) {
    if (!stables.insert(item.t).second)
      fail(Errc::name_collision, "repeated stable letter " + to_string(item.t));
    for (const auto& other : input.items)
      if (other.k.has_gen(item.t))
        fail(Errc::name_collision, "stable letter " + to_string(item.t) + " occurs in a factor");
  }
  Presentation out;
  bool first = true;
  for (const auto& item : input.items) {
    Presentation ext = hnn(item.k, item.t, IsoSpec::fixing(item.l));
    out = first ? ext : amalgam_shared(out, ext);
    first = false;
  }
  return out;
}

namespace {

Word stable_product(const StarInput& input) {
  Word t;
  for (const auto& item : input.items) t = t * Word::letter(item.t);
  return t;
}

}  // namespace

BenignPair benign_intersection(const std::vector<Word>& gwords, const StarInput& input) {
  BenignPair out;
  out.k = star(input);
  Word ts = stable_product(input);
  for (const auto& g : gwords) out.l.gens.push_back(conjugate(g, ts));
  return out;
}

BenignPair benign_join(const std::vector<Word>& gwords, const StarInput& input) {
  BenignPair out;
  out.k = star(input);
  for (const auto& item : input.items) {
    Word t = Word::letter(item.t);
    for (const auto& g : gwords) out.l.gens.push_back(conjugate(g, t));
  }
  return out;
}

namespace {

const GenSym kA = GenSym{"a", 0, false};
const GenSym kB = GenSym{"b", 0, false};
const GenSym kC = GenSym{"c", 0, false};
const GenSym kT1 = GenSym{"t1", 0, false};
const GenSym kT1p = GenSym{"t1", 1, false};
const GenSym kU1 = GenSym{"u1", 0, false};
const GenSym kU2 = GenSym{"u2", 0, false};
const GenSym kD = GenSym{"d", 0, false};
const GenSym kE = GenSym{"e", 0, false};

Word b_i(const Int& i) { return conjugated_letter(kB, kC, i); }

}  // namespace

Presentation group_xi(long long m) {
  // stable letters t<m>, t<m>'; negative m spelled tm<|m|> (no '-' in names)
  std::string stem = m < 0 ? "tm" + std::to_string(-m) : "t" + std::to_string(m);
  GenSym tm = sym(stem);
  GenSym tmp = sym(stem, 1);
  Word b = Word::letter(kB);
  Word c = Word::letter(kC);
  Word c2 = Word::letter(kC, 2);
  Presentation p;
  p.gens = {kB, kC, tm, tmp};
  p.rels = {
      Relation{conjugate(b, Word::letter(tm)), b_i(Int(-m + 1))},
      Relation{conjugate(b, Word::letter(tmp)), b_i(Int(-m))},
      Relation{conjugate(c, Word::letter(tm)), c2},
      Relation{conjugate(c, Word::letter(tmp)), c2},
  };
  return p;
}

Presentation group_c() {
  Presentation free_a;
  free_a.gens = {kA};
  Presentation a_xi = amalgam_shared(free_a, group_xi(1));

  Word t1 = Word::letter(kT1);
  Word t1p = Word::letter(kT1p);
  Presentation left = hnn(a_xi, kU1, IsoSpec::fixing({b_i(1), t1, t1p}));
  Presentation right =
      hnn(a_xi, kU2, IsoSpec::fixing({Word::letter(kA), Word::letter(kB), t1, t1p}));
  return amalgam_shared(left, right);
}

Presentation group_a() {
  Word a = Word::letter(kA);
  Word b = Word::letter(kB);
  Word c = Word::letter(kC);
  Word u1 = Word::letter(kU1);
  Word u2 = Word::letter(kU2);

  // d fixes {a,b,c}^u1 and sends {a,b,c}^u2 to {a^b, b, c^b}^u2.
  IsoSpec omega;
  for (const Word& x : {a, b, c}) omega.pairs.emplace_back(conjugate(x, u1), conjugate(x, u1));
  omega.pairs.emplace_back(conjugate(a, u2), conjugate(conjugate(a, b), u2));
  omega.pairs.emplace_back(conjugate(b, u2), conjugate(b, u2));
  omega.pairs.emplace_back(conjugate(c, u2), conjugate(conjugate(c, b), u2));

  IsoSpec delta;  // e sends a, b, c to a, b^c, c
  delta.pairs.emplace_back(a, a);
  delta.pairs.emplace_back(b, conjugate(b, c));
  delta.pairs.emplace_back(c, c);

  return hnn(hnn(group_c(), kD, omega), kE, delta);
}

Presentation group_abar() { return bar_copy(group_a()); }

const std::vector<GenSym>& group_a_symbols() {
  static const std::vector<GenSym> syms = {kA, kB, kC, kT1, kT1p, kU1, kU2, kD, kE};
  return syms;
}

}  // namespace higman
