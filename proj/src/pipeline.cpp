#include "higman/pipeline.hpp"

#include <algorithm>

#include "higman/combinators.hpp"
#include "higman/error.hpp"

namespace higman {

namespace {

const GenSym kV1 = GenSym{"v1", 0, false};
const GenSym kV2 = GenSym{"v2", 0, false};
const GenSym kW1 = GenSym{"w1", 0, false};
const GenSym kW2 = GenSym{"w2", 0, false};
const GenSym kW3 = GenSym{"w3", 0, false};
const GenSym kW4 = GenSym{"w4", 0, false};

std::array<GenSym, 3> abc_syms() {
  return {GenSym{"a", 0, false}, GenSym{"b", 0, false}, GenSym{"c", 0, false}};
}

/// The six free letters a, b, c, abar, bbar, cbar in that order.
std::vector<GenSym> f6_syms() {
  auto abc = abc_syms();
  std::vector<GenSym> out(abc.begin(), abc.end());
  for (const auto& g : abc) out.push_back(bar(g));
  return out;
}

std::vector<Word> conjugate_letters(const std::vector<GenSym>& syms, const Word& by) {
  std::vector<Word> out;
  out.reserve(syms.size());
  for (const auto& g : syms) out.push_back(conjugate(Word::letter(g), by));
  return out;
}

struct Stages {
  ExplicitBenign prepared;
  Presentation kp, kq, kq1, krho;
  SubgroupSpec l_q, l_q1, l_rho;
  std::size_t n_kx_rels = 0;  // relation count of the prepared K_X
};

Stages run_stages(const ExplicitBenign& input) {
  Stages st;
  st.prepared = prepare(input);
  const Presentation& kx = st.prepared.k;
  st.n_kx_rels = kx.rels.size();

  Presentation a_group_p = group_a();
  Presentation abar_group = group_abar();
  Presentation kx_bar = bar_copy(kx);
  auto abc = abc_syms();
  std::vector<GenSym> abc_bar;
  for (const auto& g : abc) abc_bar.push_back(bar(g));

  // K_P: generators X_A, X_Abar, then the barred K_X letters other than
  // abar, bbar, cbar; relations in display order with the two commuting
  // blocks written as x^y = x for x among the unbarred working letters.
  std::vector<GenSym> xbar_extra;
  for (const auto& g : kx_bar.gens)
    if (std::find(abc_bar.begin(), abc_bar.end(), g) == abc_bar.end()) xbar_extra.push_back(g);

  Presentation kp;
  kp.gens = a_group_p.gens;
  kp.gens.insert(kp.gens.end(), abar_group.gens.begin(), abar_group.gens.end());
  kp.gens.insert(kp.gens.end(), xbar_extra.begin(), xbar_extra.end());
  kp.rels = a_group_p.rels;
  kp.rels.insert(kp.rels.end(), abar_group.rels.begin(), abar_group.rels.end());
  kp.rels.insert(kp.rels.end(), kx_bar.rels.begin(), kx_bar.rels.end());
  for (const auto& x : a_group_p.gens)
    for (const auto& y : abar_group.gens)
      kp.rels.push_back(Relation{conjugate(Word::letter(x), Word::letter(y)), Word::letter(x)});
  for (const auto& x : a_group_p.gens)
    for (const auto& y : xbar_extra)
      kp.rels.push_back(Relation{conjugate(Word::letter(x), Word::letter(y)), Word::letter(x)});
  st.kp = std::move(kp);

  // K_Q: v1 fixes the pair words, v2 fixes the barred L_X words and a, d, e.
  GenSym a = abc[0], d = sym("d"), e = sym("e");
  std::vector<Word> pair_words = {
      Word::letter(bar(a)) * Word::letter(a),
      Word::letter(bar(d)) * Word::letter(d),
      Word::letter(bar(e)) * Word::letter(e, -1),
  };
  Presentation kq = hnn(st.kp, kV1, IsoSpec::fixing(pair_words));
  std::vector<Word> v2_words;
  for (const auto& w : st.prepared.l.gens) v2_words.push_back(bar_word(w));
  v2_words.push_back(Word::letter(a));
  v2_words.push_back(Word::letter(d));
  v2_words.push_back(Word::letter(e));
  kq = hnn(kq, kV2, IsoSpec::fixing(v2_words));
  st.kq = std::move(kq);

  std::vector<GenSym> x18 = a_group_p.gens;
  x18.insert(x18.end(), abar_group.gens.begin(), abar_group.gens.end());
  Word v1v2 = Word::letter(kV1) * Word::letter(kV2);
  st.l_q = SubgroupSpec{"KQ", conjugate_letters(x18, v1v2)};

  // K_Q1: w1 fixes the barred free letters, w2 fixes the 18 conjugates.
  Presentation kq1 = hnn(st.kq, kW1, IsoSpec::fixing({Word::letter(abc_bar[0]),
                                                      Word::letter(abc_bar[1]),
                                                      Word::letter(abc_bar[2])}));
  kq1 = hnn(kq1, kW2, IsoSpec::fixing(st.l_q.gens));
  st.kq1 = std::move(kq1);

  std::vector<Word> l_q1_words = conjugate_letters(f6_syms(), Word::letter(kW1));
  auto by_w2 = conjugate_letters(f6_syms(), Word::letter(kW2));
  l_q1_words.insert(l_q1_words.end(), by_w2.begin(), by_w2.end());
  st.l_q1 = SubgroupSpec{"KQ1", std::move(l_q1_words)};

  // K_rhoX: w3 fixes a, b, c and w4 fixes the twelve subgroup words.
  Presentation krho = hnn(st.kq1, kW3, IsoSpec::fixing({Word::letter(abc[0]),
                                                        Word::letter(abc[1]),
                                                        Word::letter(abc[2])}));
  krho = hnn(krho, kW4, IsoSpec::fixing(st.l_q1.gens));
  st.krho = std::move(krho);

  st.l_rho = SubgroupSpec{"KrhoX", conjugate_letters(f6_syms(), Word::letter(kW3) * Word::letter(kW4))};
  return st;
}

}  // namespace

ExplicitBenign prepare(const ExplicitBenign& input) {
  for (const auto& g : input.k.gens)
    if (g.barred)
      fail(Errc::already_barred, "input presentation uses barred generator " + to_string(g));
  if (auto issue = validate(input.k)) fail(issue->code, issue->detail);
  if (auto issue = validate_over(input.k, input.l)) fail(issue->code, issue->detail);

  ExplicitBenign out = input;
  auto abc = abc_syms();
  for (std::size_t i = 0; i < 3; ++i) {
    const GenSym& letter = abc[i];
    if (out.k.has_gen(letter)) {
      if (out.abc[i] != Word::letter(letter))
        fail(Errc::usage_error, "generator " + to_string(letter) +
                                    " is present, so its designated word must be the letter itself");
    } else {
      if (out.abc[i].empty())
        fail(Errc::usage_error, "no designated word for missing generator " + to_string(letter));
      out.k = tietze_add(out.k, letter, out.abc[i]);
      out.abc[i] = Word::letter(letter);
    }
  }

  std::set<GenSym> taken;
  for (const auto& g : group_a_symbols()) taken.insert(g);
  for (const auto& g : {kV1, kV2, kW1, kW2, kW3, kW4}) taken.insert(g);
  auto [renamed, ren] = disjointify(out.k, taken, {abc[0], abc[1], abc[2]});
  out.k = std::move(renamed);
  for (auto& w : out.l.gens) w = ren.apply(w);

  // Duplicate subgroup words add nothing; k counts distinct words.
  std::vector<Word> unique_l;
  for (auto& w : out.l.gens)
    if (std::find(unique_l.begin(), unique_l.end(), w) == unique_l.end())
      unique_l.push_back(std::move(w));
  out.l.gens = std::move(unique_l);
  return out;
}

Presentation build_kp(const ExplicitBenign& prepared) { return run_stages(prepared).kp; }

std::pair<Presentation, SubgroupSpec> build_kq(const ExplicitBenign& prepared) {
  Stages st = run_stages(prepared);
  return {std::move(st.kq), std::move(st.l_q)};
}

std::pair<Presentation, SubgroupSpec> build_kq1(const ExplicitBenign& prepared) {
  Stages st = run_stages(prepared);
  return {std::move(st.kq1), std::move(st.l_q1)};
}

PipelineTrace build_krho(const ExplicitBenign& input) {
  Stages st = run_stages(input);
  PipelineTrace trace;
  trace.input = std::move(st.prepared);
  trace.m = trace.input.k.gens.size();
  trace.n = st.n_kx_rels;
  trace.k = trace.input.l.gens.size();
  trace.kp = std::move(st.kp);
  trace.kq = std::move(st.kq);
  trace.kq1 = std::move(st.kq1);
  trace.krho = std::move(st.krho);
  trace.l_q = std::move(st.l_q);
  trace.l_q1 = std::move(st.l_q1);
  trace.l_rho = std::move(st.l_rho);

  const std::size_t m = trace.m, n = trace.n, k = trace.k;
  trace.generator_blocks = {
      {"gens_A", 9, 9},
      {"gens_Abar", 9, 9},
      {"gens_KXbar", m - 3, trace.kp.gens.size() - 18},
      {"gens_v", 2, trace.kq.gens.size() - trace.kp.gens.size()},
      {"gens_w", 4, trace.krho.gens.size() - trace.kq.gens.size()},
  };
  std::size_t kp_rels = trace.kp.rels.size();
  std::size_t kq_rels = trace.kq.rels.size();
  std::size_t kq1_rels = trace.kq1.rels.size();
  std::size_t krho_rels = trace.krho.rels.size();
  trace.relation_blocks = {
      {"rels_A", 20, 20},
      {"rels_Abar", 20, 20},
      {"rels_KXbar", n, kp_rels - 40 - 81 - 9 * (m - 3)},
      {"commute_A_Abar", 81, 81},
      {"commute_A_KXbar", 9 * (m - 3), 9 * (m - 3)},
      {"fix_v1", 3, 3},
      {"fix_v2", k + 3, kq_rels - kp_rels - 3},
      {"fix_w1", 3, 3},
      {"fix_w2", 18, kq1_rels - kq_rels - 3},
      {"fix_w3", 3, 3},
      {"fix_w4", 12, krho_rels - kq1_rels - 3},
  };

  trace.counts_expected = {m + 21, n + 9 * m + k + 136};
  trace.counts_actual = counts(trace.krho);
  if (trace.counts_actual != trace.counts_expected) {
    fail(Errc::count_mismatch,
         "expected (" + std::to_string(trace.counts_expected.first) + ", " +
             std::to_string(trace.counts_expected.second) + ") but built (" +
             std::to_string(trace.counts_actual.first) + ", " +
             std::to_string(trace.counts_actual.second) + ")");
  }
  for (const auto& b : trace.relation_blocks)
    if (b.expected != b.actual)
      fail(Errc::count_mismatch, "relation block " + b.block_name + " expected " +
                                     std::to_string(b.expected) + " got " + std::to_string(b.actual));
  for (const auto& b : trace.generator_blocks)
    if (b.expected != b.actual)
      fail(Errc::count_mismatch, "generator block " + b.block_name + " expected " +
                                     std::to_string(b.expected) + " got " + std::to_string(b.actual));
  return trace;
}

std::string count_report_text(const PipelineTrace& trace) {
  std::string out;
  out += "input m=" + std::to_string(trace.m) + " n=" + std::to_string(trace.n) +
         " k=" + std::to_string(trace.k) + "\n";
  out += "generators expected=" + std::to_string(trace.counts_expected.first) +
         " actual=" + std::to_string(trace.counts_actual.first) + "\n";
  out += "relations expected=" + std::to_string(trace.counts_expected.second) +
         " actual=" + std::to_string(trace.counts_actual.second) + "\n";
  for (const auto& b : trace.generator_blocks)
    out += "block " + b.block_name + " expected=" + std::to_string(b.expected) +
           " actual=" + std::to_string(b.actual) + "\n";
  for (const auto& b : trace.relation_blocks)
    out += "block " + b.block_name + " expected=" + std::to_string(b.expected) +
           " actual=" + std::to_string(b.actual) + "\n";
  out += trace.counts_actual == trace.counts_expected ? "counts match\n" : "COUNT MISMATCH\n";
  return out;
}

nlohmann::ordered_json count_report_json(const PipelineTrace& trace) {
  nlohmann::ordered_json j;
  j["input"] = {{"m", trace.m}, {"n", trace.n}, {"k", trace.k}};
  j["generators"] = {{"expected", trace.counts_expected.first},
                     {"actual", trace.counts_actual.first}};
  j["relations"] = {{"expected", trace.counts_expected.second},
                    {"actual", trace.counts_actual.second}};
  auto blocks = nlohmann::ordered_json::array();
  for (const auto& b : trace.generator_blocks)
    blocks.push_back({{"block_name", b.block_name}, {"expected", b.expected}, {"actual", b.actual}});
  for (const auto& b : trace.relation_blocks)
    blocks.push_back({{"block_name", b.block_name}, {"expected", b.expected}, {"actual", b.actual}});
  j["blocks"] = std::move(blocks);
  j["ok"] = trace.counts_actual == trace.counts_expected;
  return j;
}

}  // namespace higman
