#pragma once

#include <json.hpp>

#include "higman/presentation.hpp"

namespace higman {

struct CountBlock {
  std::string block_name;
  std::size_t expected;
  std::size_t actual;
};

/// All stages of the construction, with the exact counting contract:
/// K_rhoX has m+21 generators and n+9m+k+136 relations, where (m, n) are
/// the prepared K_X counts and k the number of distinct L_X words.
struct PipelineTrace {
  ExplicitBenign input;  // prepared form
  Presentation kp, kq, kq1, krho;
  SubgroupSpec l_q, l_q1, l_rho;
  std::size_t m = 0, n = 0, k = 0;
  std::pair<std::size_t, std::size_t> counts_expected;
  std::pair<std::size_t, std::size_t> counts_actual;
  std::vector<CountBlock> generator_blocks;  // five summands
  std::vector<CountBlock> relation_blocks;   // eleven summands
};

/// Normal form of the input: a, b, c made literal generators (via Tietze
/// additions of their designated words where missing), every other
/// generator renamed away from the nine working letters and the six stable
/// letters v1, v2, w1..w4, subgroup words rewritten through the renaming,
/// and duplicate subgroup words dropped. Idempotent.
ExplicitBenign prepare(const ExplicitBenign& input);

/// The direct product of the barred amalgam (K_X bar sharing abar,bbar,cbar
/// with the barred working group) with the unbarred working group.
Presentation build_kp(const ExplicitBenign& prepared);

/// Adds v1 fixing the pair words abar*a, dbar*d, ebar*e^-1 and v2 fixing
/// the barred L_X words plus a, d, e. The subgroup is the 18 working
/// letters conjugated by v1 v2.
std::pair<Presentation, SubgroupSpec> build_kq(const ExplicitBenign& prepared);

/// Adds w1 fixing abar, bbar, cbar and w2 fixing the 18 conjugated letters.
/// The subgroup is {a,b,c,abar,bbar,cbar} conjugated by w1 and by w2.
std::pair<Presentation, SubgroupSpec> build_kq1(const ExplicitBenign& prepared);

/// Runs all stages; w3 fixes a, b, c and w4 fixes the twelve preceding
/// subgroup words; the final subgroup is the six free letters conjugated by
/// w3 w4. Throws CountMismatch if the actual counts deviate from the
/// formulas (an internal consistency failure).
PipelineTrace build_krho(const ExplicitBenign& input);

std::string count_report_text(const PipelineTrace& trace);
nlohmann::ordered_json count_report_json(const PipelineTrace& trace);

}  // namespace higman
