#include "higman/funcseq.hpp"

#include <algorithm>
#include <cctype>

#include "higman/error.hpp"

namespace higman {

FunctionSeq FunctionSeq::from_entries(std::map<long long, Int> entries) {
  FunctionSeq f;
  for (auto& [i, v] : entries)
    if (v != 0) f.entries_.emplace(i, std::move(v));
  return f;
}

FunctionSeq FunctionSeq::from_sequence(const std::vector<Int>& values) {
  FunctionSeq f;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] != 0) f.entries_.emplace(static_cast<long long>(i), values[i]);
  return f;
}

Int FunctionSeq::value(long long i) const {
  auto it = entries_.find(i);
  return it == entries_.end() ? Int(0) : it->second;
}

std::vector<long long> FunctionSeq::support() const {
  std::vector<long long> s;
  s.reserve(entries_.size());
  for (const auto& [i, v] : entries_) s.push_back(i);
  return s;
}

bool FunctionSeq::in_em(long long m) const {
  return entries_.empty() || (entries_.begin()->first >= 0 && entries_.rbegin()->first < m);
}

bool operator<(const FunctionSeq& f, const FunctionSeq& g) {
  return std::lexicographical_compare(
      f.entries_.begin(), f.entries_.end(), g.entries_.begin(), g.entries_.end(),
      [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
      });
}

FunctionSeq bump(const FunctionSeq& f, long long j, int sign) {
  if (sign != 1 && sign != -1) fail(Errc::usage_error, "bump sign must be +1 or -1");
  auto entries = f.entries();
  entries[j] += sign;
  if (entries[j] == 0) entries.erase(j);
  return FunctionSeq::from_entries(std::move(entries));
}

FunctionSeq seq_plus(const FunctionSeq& f, long long m) {
  if (m < 1) fail(Errc::usage_error, "m must be positive");
  if (!f.in_em(m))
    fail(Errc::not_in_em, "support of " + to_string(f) + " not contained in {0,...," +
                              std::to_string(m - 1) + "}");
  return bump(f, m - 1, +1);
}

FunctionSeq reverse(const FunctionSeq& f) {
  std::map<long long, Int> entries;
  for (const auto& [i, v] : f.entries()) entries.emplace(-i, v);
  return FunctionSeq::from_entries(std::move(entries));
}

FunctionSet FunctionSet::of(std::vector<FunctionSeq> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  FunctionSet s;
  s.members_ = std::move(members);
  return s;
}

FunctionSet rho_set(const FunctionSet& xs) {
  std::vector<FunctionSeq> out;
  out.reserve(xs.members().size());
  for (const auto& f : xs.members()) out.push_back(reverse(f));
  return FunctionSet::of(std::move(out));
}

std::string to_string(const FunctionSeq& f) {
  std::string out = "{";
  bool first = true;
  for (const auto& [i, v] : f.entries()) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(i) + ":" + v.str();
  }
  return out + "}";
}

namespace {

void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

Int read_int(const std::string& s, std::size_t& i) {
  skip_ws(s, i);
  std::size_t start = i;
  if (i < s.size() && s[i] == '-') ++i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start || (s[start] == '-' && i == start + 1))
    fail(Errc::parse_error, "expected integer at position " + std::to_string(start) + " in '" + s + "'");
  return parse_int(s.substr(start, i - start));
}

void expect(const std::string& s, std::size_t& i, char c) {
  skip_ws(s, i);
  if (i >= s.size() || s[i] != c)
    fail(Errc::parse_error, std::string("expected '") + c + "' in '" + s + "'");
  ++i;
}

FunctionSeq parse_braces(const std::string& s, std::size_t& i) {
  expect(s, i, '{');
  std::map<long long, Int> entries;
  skip_ws(s, i);
  if (i < s.size() && s[i] == '}') {
    ++i;
    return FunctionSeq();
  }
  while (true) {
    Int idx = read_int(s, i);
    expect(s, i, ':');
    Int val = read_int(s, i);
    long long key = to_long(idx);
    if (entries.count(key)) fail(Errc::parse_error, "duplicate index " + idx.str());
    if (val != 0) entries.emplace(key, std::move(val));
    skip_ws(s, i);
    if (i < s.size() && s[i] == ',') {
      ++i;
      continue;
    }
    expect(s, i, '}');
    break;
  }
  return FunctionSeq::from_entries(std::move(entries));
}

FunctionSeq parse_parens(const std::string& s, std::size_t& i) {
  expect(s, i, '(');
  std::vector<Int> values;
  skip_ws(s, i);
  if (i < s.size() && s[i] == ')') {
    ++i;
    return FunctionSeq();
  }
  while (true) {
    values.push_back(read_int(s, i));
    skip_ws(s, i);
    if (i < s.size() && s[i] == ',') {
      ++i;
      continue;
    }
    expect(s, i, ')');
    break;
  }
  return FunctionSeq::from_sequence(values);
}

FunctionSeq parse_one(const std::string& s, std::size_t& i) {
  skip_ws(s, i);
  if (i >= s.size()) fail(Errc::parse_error, "empty function expression");
  if (s[i] == '{') return parse_braces(s, i);
  if (s[i] == '(') return parse_parens(s, i);
  fail(Errc::parse_error, "expected '{' or '(' in '" + s + "'");
}

}  // namespace

FunctionSeq parse_funcseq(const std::string& text) {
  std::size_t i = 0;
  FunctionSeq f = parse_one(text, i);
  skip_ws(text, i);
  if (i != text.size()) fail(Errc::parse_error, "trailing characters in '" + text + "'");
  return f;
}

FunctionSeq parse_funcseq_flag(const std::string& text) {
  std::size_t i = 0;
  skip_ws(text, i);
  if (i < text.size() && (text[i] == '{' || text[i] == '(' || text[i] == '['))
    return parse_funcseq(text);
  if (i == text.size()) return FunctionSeq();
  return parse_funcseq("(" + text + ")");
}

std::string to_string(const FunctionSet& s) {
  std::string out = "[";
  bool first = true;
  for (const auto& f : s.members()) {
    if (!first) out += "; ";
    first = false;
    out += to_string(f);
  }
  return out + "]";
}

std::vector<FunctionSeq> enumerate_functions(long long bound, long long max_nonzero, int lo,
                                             int hi) {
  std::vector<FunctionSeq> out;
  std::map<long long, Int> current;
  auto rec = [&](auto&& self, long long i) -> void {
    if (i > bound) {
      out.push_back(FunctionSeq::from_entries(current));
      return;
    }
    self(self, i + 1);  // value 0 at i
    if (static_cast<long long>(current.size()) < max_nonzero) {
      for (int v = lo; v <= hi; ++v) {
        if (v == 0) continue;
        current[i] = v;
        self(self, i + 1);
      }
      current.erase(i);
    }
  };
  rec(rec, -bound);
  std::sort(out.begin(), out.end());
  return out;
}

FunctionSet parse_funcset(const std::string& text) {
  std::size_t i = 0;
  expect(text, i, '[');
  std::vector<FunctionSeq> members;
  skip_ws(text, i);
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      members.push_back(parse_one(text, i));
      skip_ws(text, i);
      if (i < text.size() && text[i] == ';') {
        ++i;
        continue;
      }
      expect(text, i, ']');
      break;
    }
  }
  skip_ws(text, i);
  if (i != text.size()) fail(Errc::parse_error, "trailing characters in '" + text + "'");
  return FunctionSet::of(std::move(members));
}

}  // namespace higman
