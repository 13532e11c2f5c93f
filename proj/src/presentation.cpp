#include "higman/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "higman/error.hpp"

namespace higman {

bool Presentation::has_gen(const GenSym& g) const {
  return std::find(gens.begin(), gens.end(), g) != gens.end();
}

namespace {

std::set<GenSym> gen_set(const Presentation& p) { return {p.gens.begin(), p.gens.end()}; }

std::optional<ValidationIssue> check_declared(const std::set<GenSym>& declared, const Word& w,
                                              const std::string& where) {
  for (const auto& s : w.syllables())
    if (!declared.count(s.sym))
      return ValidationIssue{Errc::undeclared_generator,
                             to_string(s.sym) + " used in " + where + " but not declared"};
  return std::nullopt;
}

}  // namespace

std::optional<ValidationIssue> validate(const Presentation& p) {
  std::set<GenSym> seen;
  for (const auto& g : p.gens) {
    if (!seen.insert(g).second)
      return ValidationIssue{Errc::duplicate_generator, "duplicate generator " + to_string(g)};
  }
  for (std::size_t i = 0; i < p.rels.size(); ++i) {
    std::string where = "relation " + std::to_string(i + 1);
    if (auto issue = check_declared(seen, p.rels[i].lhs, where)) return issue;
    if (auto issue = check_declared(seen, p.rels[i].rhs, where)) return issue;
  }
  return std::nullopt;
}

std::optional<ValidationIssue> validate_over(const Presentation& p, const SubgroupSpec& s) {
  auto declared = gen_set(p);
  for (std::size_t i = 0; i < s.gens.size(); ++i) {
    if (auto issue = check_declared(declared, s.gens[i], "subgroup word " + std::to_string(i + 1)))
      return issue;
  }
  return std::nullopt;
}

Presentation tietze_add(const Presentation& p, const GenSym& name, const Word& defn) {
  if (p.has_gen(name)) fail(Errc::name_collision, "generator " + to_string(name) + " already present");
  if (auto issue = check_declared(gen_set(p), defn, "defining word for " + to_string(name)))
    fail(issue->code, issue->detail);
  Presentation out = p;
  out.gens.push_back(name);
  out.rels.push_back(Relation{Word::letter(name), defn});
  return out;
}

Presentation bar_copy(const Presentation& p) {
  Presentation out;
  out.gens.reserve(p.gens.size());
  for (const auto& g : p.gens) out.gens.push_back(bar(g));  // throws if already barred
  out.rels.reserve(p.rels.size());
  for (const auto& r : p.rels) out.rels.push_back(Relation{bar_word(r.lhs), bar_word(r.rhs)});
  return out;
}

Word Renaming::apply(const Word& w) const {
  if (map.empty()) return w;
  std::vector<Syllable> raw;
  raw.reserve(w.size());
  for (const auto& s : w.syllables()) {
    auto it = map.find(s.sym);
    raw.push_back(Syllable{it == map.end() ? s.sym : it->second, s.exp});
  }
  return Word::reduce(std::move(raw));
}

GenSym Renaming::apply(const GenSym& g) const {
  auto it = map.find(g);
  return it == map.end() ? g : it->second;
}

std::pair<Presentation, Renaming> disjointify(const Presentation& p,
                                              const std::set<GenSym>& taken,
                                              const std::set<GenSym>& keep) {
  Renaming ren;
  std::set<GenSym> used = gen_set(p);
  used.insert(taken.begin(), taken.end());
  for (const auto& g : p.gens) {
    if (!taken.count(g) || keep.count(g)) continue;
    std::string stem = g.base.substr(0, g.base.find('#'));
    for (int k = 1;; ++k) {
      GenSym fresh{stem + "#" + std::to_string(k), g.primes, g.barred};
      if (!used.count(fresh)) {
        ren.map.emplace(g, fresh);
        used.insert(fresh);
        break;
      }
    }
  }
  Presentation out;
  out.gens.reserve(p.gens.size());
  for (const auto& g : p.gens) out.gens.push_back(ren.apply(g));
  out.rels.reserve(p.rels.size());
  for (const auto& r : p.rels) out.rels.push_back(Relation{ren.apply(r.lhs), ren.apply(r.rhs)});
  return {std::move(out), std::move(ren)};
}

std::pair<std::size_t, std::size_t> counts(const Presentation& p) {
  return {p.gens.size(), p.rels.size()};
}

Word relator_of(const Relation& r) {
  Word rel = r.lhs * r.rhs.inverse();
  Word inv = rel.inverse();
  return inv < rel ? inv : rel;
}

Presentation normalize(const Presentation& p) {
  Presentation out;
  out.gens = p.gens;
  std::sort(out.gens.begin(), out.gens.end());
  std::vector<Word> relators;
  relators.reserve(p.rels.size());
  for (const auto& r : p.rels) {
    Word w = relator_of(r);
    if (!w.empty()) relators.push_back(std::move(w));
  }
  std::sort(relators.begin(), relators.end());
  relators.erase(std::unique(relators.begin(), relators.end()), relators.end());
  out.rels.reserve(relators.size());
  for (auto& w : relators) out.rels.push_back(Relation{std::move(w), Word()});
  return out;
}

bool normal_equal(const Presentation& p1, const Presentation& p2) {
  return normalize(p1) == normalize(p2);
}

// --- text format ---------------------------------------------------------

std::string to_text(const Presentation& p) {
  std::string out;
  for (const auto& g : p.gens) out += "gen " + to_string(g) + "\n";
  for (const auto& r : p.rels) out += "rel " + to_string(r.lhs) + " = " + to_string(r.rhs) + "\n";
  return out;
}

namespace {

// Strips a comment: '#' at line start or preceded by whitespace.
std::string strip_comment(const std::string& line) {
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '#' && (i == 0 || std::isspace(static_cast<unsigned char>(line[i - 1]))))
      return line.substr(0, i);
  }
  return line;
}

[[noreturn]] void parse_fail(const std::string& source, std::size_t lineno, const std::string& msg) {
  fail(Errc::parse_error, source + ":" + std::to_string(lineno) + ": " + msg);
}

}  // namespace

Presentation presentation_from_text(const std::string& text, const std::string& source_name) {
  Presentation p;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_comment(line);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    try {
      if (kw == "gen") {
        std::string name, extra;
        if (!(ls >> name)) parse_fail(source_name, lineno, "gen line missing name");
        if (ls >> extra) parse_fail(source_name, lineno, "unexpected token '" + extra + "'");
        GenSym g = parse_gensym(name);
        if (p.has_gen(g)) parse_fail(source_name, lineno, "duplicate generator " + name);
        p.gens.push_back(g);
      } else if (kw == "rel") {
        std::string rest;
        std::getline(ls, rest);
        auto eq = rest.find('=');
        if (eq == std::string::npos) parse_fail(source_name, lineno, "rel line missing '='");
        p.rels.push_back(Relation{parse_word(rest.substr(0, eq)), parse_word(rest.substr(eq + 1))});
      } else {
        parse_fail(source_name, lineno, "unknown directive '" + kw + "'");
      }
    } catch (const Error& e) {
      if (e.code() == Errc::parse_error && std::string(e.what()).find(source_name) == std::string::npos)
        parse_fail(source_name, lineno, e.what());
      throw;
    }
  }
  if (auto issue = validate(p)) fail(issue->code, source_name + ": " + issue->detail);
  return p;
}

std::string to_text(const SubgroupSpec& s) {
  std::string out = "over " + s.over + "\n";
  for (const auto& w : s.gens) out += "sub " + to_string(w) + "\n";
  return out;
}

SubgroupSpec subgroup_from_text(const std::string& text, const std::string& source_name) {
  SubgroupSpec s;
  bool have_over = false;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_comment(line);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    try {
      if (kw == "over") {
        std::string label;
        if (!(ls >> label)) parse_fail(source_name, lineno, "over line missing label");
        s.over = label;
        have_over = true;
      } else if (kw == "sub") {
        std::string rest;
        std::getline(ls, rest);
        s.gens.push_back(parse_word(rest));
      } else {
        parse_fail(source_name, lineno, "unknown directive '" + kw + "'");
      }
    } catch (const Error& e) {
      if (e.code() == Errc::parse_error && std::string(e.what()).find(source_name) == std::string::npos)
        parse_fail(source_name, lineno, e.what());
      throw;
    }
  }
  if (!have_over) fail(Errc::parse_error, source_name + ": missing 'over' header");
  return s;
}

// --- JSON mirror ---------------------------------------------------------

nlohmann::ordered_json to_json(const Presentation& p) {
  nlohmann::ordered_json j;
  j["gens"] = nlohmann::ordered_json::array();
  for (const auto& g : p.gens) j["gens"].push_back(to_string(g));
  j["rels"] = nlohmann::ordered_json::array();
  for (const auto& r : p.rels)
    j["rels"].push_back({{"lhs", to_string(r.lhs)}, {"rhs", to_string(r.rhs)}});
  return j;
}

Presentation presentation_from_json(const nlohmann::ordered_json& j) {
  Presentation p;
  for (const auto& g : j.at("gens")) p.gens.push_back(parse_gensym(g.get<std::string>()));
  for (const auto& r : j.at("rels"))
    p.rels.push_back(Relation{parse_word(r.at("lhs").get<std::string>()),
                              parse_word(r.at("rhs").get<std::string>())});
  if (auto issue = validate(p)) fail(issue->code, issue->detail);
  return p;
}

nlohmann::ordered_json to_json(const SubgroupSpec& s) {
  nlohmann::ordered_json j;
  j["over"] = s.over;
  j["sub"] = nlohmann::ordered_json::array();
  for (const auto& w : s.gens) j["sub"].push_back(to_string(w));
  return j;
}

}  // namespace higman
