#include "higman/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "higman/action.hpp"
#include "higman/combinators.hpp"
#include "higman/error.hpp"
#include "higman/pipeline.hpp"

namespace higman::cli {

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot read file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) fail(Errc::usage_error, "cannot write file " + path.string());
  out << content;
}

Presentation named_construction(const std::string& name) {
  if (name == "xi1") return group_xi(1);
  if (name == "C") return group_c();
  if (name == "A") return group_a();
  if (name == "Abar") return group_abar();
  fail(Errc::unknown_name, "no construction named '" + name + "' (try xi1, C, A, Abar)");
}

std::vector<long long> parse_index_list(const std::string& text) {
  std::vector<long long> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(to_long(parse_int(item)));
  if (out.empty()) fail(Errc::parse_error, "empty index list");
  return out;
}

struct VerifyResult {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> lines;  // per-case output or failure details
};

void note_failure(VerifyResult& r, const std::string& detail) {
  ++r.failures;
  r.lines.push_back("FAIL " + detail);
}

VerifyResult verify_lemma35(const std::vector<FunctionSeq>& fs, const std::vector<long long>& js,
                            bool explicit_case) {
  VerifyResult r;
  for (const auto& f : fs) {
    for (long long j : js) {
      ++r.cases;
      CheckReport rep = lemma35_check(f, j);
      if (!rep.ok) {
        note_failure(r, rep.detail);
      } else if (explicit_case) {
        r.lines.push_back("ok lemma35 f=" + to_string(f) + " j=" + std::to_string(j) +
                          " +: " + to_string(a_word(bump(f, j, +1))));
        r.lines.push_back("ok lemma35 f=" + to_string(f) + " j=" + std::to_string(j) +
                          " -: " + to_string(a_word(bump(f, j, -1))));
      }
    }
  }
  return r;
}

VerifyResult verify_commute(const std::vector<FunctionSeq>& fs,
                            const std::vector<std::pair<long long, long long>>& pairs,
                            bool explicit_case) {
  VerifyResult r;
  for (const auto& f : fs) {
    Word base = a_word(f);
    for (const auto& [j1, j2] : pairs) {
      ++r.cases;
      Word one = dj_conj(dj_conj(base, j1, +1), j2, +1);
      Word two = dj_conj(dj_conj(base, j2, +1), j1, +1);
      Word bumped = a_word(bump(bump(f, j1, +1), j2, +1));
      if (one != two || one != bumped) {
        note_failure(r, "commute f=" + to_string(f) + " j1=" + std::to_string(j1) +
                            " j2=" + std::to_string(j2) + ": d_j1 d_j2 -> " + to_string(one) +
                            ", d_j2 d_j1 -> " + to_string(two) + ", bumped -> " +
                            to_string(bumped));
      } else if (explicit_case) {
        r.lines.push_back("ok commute f=" + to_string(f) + " j1=" + std::to_string(j1) +
                          " j2=" + std::to_string(j2) + ": " + to_string(one));
      }
    }
  }
  return r;
}

VerifyResult verify_rho_chain(const std::vector<FunctionSeq>& fs, bool explicit_case) {
  VerifyResult r;
  for (const auto& f : fs) {
    ++r.cases;
    lambda_pair(f);  // throws on a broken pair witness
    CheckReport rep = rho_chain_check(f);
    if (!rep.ok) {
      note_failure(r, rep.detail);
    } else if (explicit_case) {
      r.lines.push_back("ok rho-chain f=" + to_string(f) + ": " + to_string(a_word(reverse(f))));
    }
  }
  return r;
}

int finish_verify(const std::string& kind, const VerifyResult& r, bool json, std::ostream& out) {
  if (json) {
    ordered_json j;
    j["kind"] = kind;
    j["cases"] = r.cases;
    j["failures"] = r.failures;
    j["lines"] = r.lines;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& line : r.lines) out << line << "\n";
    out << kind << ": " << r.cases << (r.cases == 1 ? " case, " : " cases, ") << r.failures
        << (r.failures == 1 ? " failure\n" : " failures\n");
  }
  return r.failures == 0 ? 0 : 3;
}

int cmd_build(const std::string& name, bool json, std::ostream& out) {
  Presentation p = named_construction(name);
  if (json)
    out << to_json(p).dump(2) << "\n";
  else
    out << to_text(p);
  return 0;
}

int cmd_reduce(const std::string& text, bool json, std::ostream& out) {
  Word w = parse_word(text);
  if (json)
    out << ordered_json{{"reduced", to_string(w)}}.dump(2) << "\n";
  else
    out << to_string(w) << "\n";
  return 0;
}

int cmd_fn(const std::string& op, const std::string& expr, bool json, std::ostream& out) {
  std::string result;
  std::size_t probe = expr.find_first_not_of(" \t");
  bool is_set = probe != std::string::npos && expr[probe] == '[';
  if (op == "rho") {
    result = is_set ? to_string(rho_set(parse_funcset(expr))) : to_string(reverse(parse_funcseq_flag(expr)));
  } else if (op == "norm") {
    result = is_set ? to_string(parse_funcset(expr)) : to_string(parse_funcseq_flag(expr));
  } else {
    fail(Errc::unknown_name, "no function operation named '" + op + "' (try rho, norm)");
  }
  if (json)
    out << ordered_json{{"result", result}}.dump(2) << "\n";
  else
    out << result << "\n";
  return 0;
}

int cmd_rho(const std::string& kx_path, const std::string& lx_path,
            const std::vector<std::string>& abc_words, const std::string& out_dir, bool json,
            std::ostream& out) {
  ExplicitBenign input;
  input.k = presentation_from_text(read_file(kx_path), kx_path);
  input.l = subgroup_from_text(read_file(lx_path), lx_path);
  if (auto issue = validate_over(input.k, input.l)) fail(issue->code, lx_path + ": " + issue->detail);

  if (abc_words.empty()) {
    for (const char* name : {"a", "b", "c"})
      if (!input.k.has_gen(sym(name)))
        fail(Errc::usage_error,
             std::string("presentation lacks literal generator ") + name + "; provide --abc");
    input.abc = {parse_word("a"), parse_word("b"), parse_word("c")};
  } else {
    input.abc = {parse_word(abc_words[0]), parse_word(abc_words[1]), parse_word(abc_words[2])};
  }

  PipelineTrace trace = build_krho(input);

  std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  write_file(dir / "KP.txt", to_text(trace.kp));
  write_file(dir / "KQ.txt", to_text(trace.kq));
  write_file(dir / "KQ1.txt", to_text(trace.kq1));
  write_file(dir / "KrhoX.txt", to_text(trace.krho));
  SubgroupSpec lrho = trace.l_rho;
  lrho.over = "KrhoX.txt";
  write_file(dir / "LrhoX.txt", to_text(lrho));
  write_file(dir / "report.txt", count_report_text(trace));
  write_file(dir / "report.json", count_report_json(trace).dump(2) + "\n");

  if (json)
    out << count_report_json(trace).dump(2) << "\n";
  else
    out << count_report_text(trace);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"presentation calculus for benign-subgroup constructions"};
  app.name("higman");
  app.require_subcommand(1);

  std::string build_name;
  bool build_json = false;
  auto* build = app.add_subcommand("build", "emit a named presentation");
  build->add_option("name", build_name, "one of xi1, C, A, Abar")->required();
  build->add_flag("--json", build_json, "emit JSON instead of text");

  std::string kx_path, lx_path, rho_out = ".";
  std::vector<std::string> abc_words;
  bool rho_json = false;
  auto* rho = app.add_subcommand("rho", "run the reversing pipeline on an explicit (K_X, L_X)");
  rho->add_option("--kx", kx_path, "presentation file for K_X")->required();
  rho->add_option("--lx", lx_path, "subgroup file for L_X")->required();
  rho->add_option("--abc", abc_words, "three words designating a, b, c")->expected(3);
  rho->add_option("--out", rho_out, "output directory")->required();
  rho->add_flag("--json", rho_json, "print the count report as JSON");

  std::string verify_kind, f_flag, j_flag;
  long long sweep = -1;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "check the word-level identities");
  verify->add_option("kind", verify_kind, "one of lemma35, rho-chain, commute")->required();
  verify->add_option("--f", f_flag, "explicit function, e.g. 2,5,3 or {-1:3,0:2}");
  verify->add_option("--j", j_flag, "index (lemma35) or pair j1,j2 (commute)");
  verify->add_option("--sweep", sweep, "exhaustive grid radius");
  verify->add_flag("--json", verify_json, "emit JSON report");

  std::string reduce_text;
  bool reduce_json = false;
  auto* reduce_cmd = app.add_subcommand("reduce", "freely reduce a word");
  reduce_cmd->add_option("word", reduce_text, "word in text syntax")->required();
  reduce_cmd->add_flag("--json", reduce_json, "emit JSON");

  std::string fn_op, fn_expr;
  bool fn_json = false;
  auto* fn = app.add_subcommand("fn", "operate on finite-support functions");
  fn->add_option("op", fn_op, "one of rho, norm")->required();
  fn->add_option("expr", fn_expr, "function or set expression")->required();
  fn->add_flag("--json", fn_json, "emit JSON");

  std::vector<const char*> argv;
  argv.push_back("higman");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (app.got_subcommand(build)) return cmd_build(build_name, build_json, out);
    if (app.got_subcommand(reduce_cmd)) return cmd_reduce(reduce_text, reduce_json, out);
    if (app.got_subcommand(fn)) return cmd_fn(fn_op, fn_expr, fn_json, out);
    if (app.got_subcommand(rho)) return cmd_rho(kx_path, lx_path, abc_words, rho_out, rho_json, out);

    // verify
    if (verify_kind != "lemma35" && verify_kind != "rho-chain" && verify_kind != "commute")
      fail(Errc::unknown_name, "no verification named '" + verify_kind + "'");

    bool explicit_case = !f_flag.empty();
    std::vector<FunctionSeq> fs;
    std::vector<long long> js;
    std::vector<std::pair<long long, long long>> jpairs;
    if (explicit_case) {
      fs.push_back(parse_funcseq_flag(f_flag));
      if (verify_kind != "rho-chain") {
        if (j_flag.empty()) fail(Errc::usage_error, "--j is required with --f for " + verify_kind);
        auto indices = parse_index_list(j_flag);
        if (verify_kind == "lemma35") {
          if (indices.size() != 1) fail(Errc::usage_error, "lemma35 takes a single --j index");
          js = indices;
        } else {
          if (indices.size() != 2) fail(Errc::usage_error, "commute takes --j j1,j2");
          jpairs.emplace_back(indices[0], indices[1]);
        }
      }
    } else if (sweep >= 0) {
      if (verify_kind == "rho-chain") {
        fs = enumerate_functions(sweep, 2 * sweep + 1, -2, 2);
      } else {
        // Functions with up to three support points in [-sweep, sweep] and
        // nonzero values in [-2, 2]; indices range one step beyond.
        fs = enumerate_functions(sweep, 3, -2, 2);
        for (long long j = -(sweep + 1); j <= sweep + 1; ++j) js.push_back(j);
        for (long long j1 : js)
          for (long long j2 : js)
            if (j1 <= j2) jpairs.emplace_back(j1, j2);
      }
    } else {
      fail(Errc::usage_error, "verify needs either --f (with --j where applicable) or --sweep");
    }

    VerifyResult r;
    if (verify_kind == "lemma35")
      r = verify_lemma35(fs, js, explicit_case);
    else if (verify_kind == "commute")
      r = verify_commute(fs, jpairs, explicit_case);
    else
      r = verify_rho_chain(fs, explicit_case);
    return finish_verify(verify_kind, r, verify_json, out);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::count_mismatch ? 3 : 2;
  }
}

}  // namespace higman::cli
