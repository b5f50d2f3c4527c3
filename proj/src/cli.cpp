#include "icode/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "icode/constructors.hpp"
#include "icode/minrank.hpp"
#include "icode/model.hpp"
#include "icode/text_format.hpp"
#include "icode/verifier.hpp"

namespace icode::cli {

namespace {

/// Bad command-line input that is not a parameter-condition violation.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::size_t to_count(const std::string& token, const char* name) {
  std::size_t v = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (token.empty() || ec != std::errc{} || ptr != end)
    throw UsageError(std::string(name) + " must be a non-negative integer, got '" + token + "'");
  return v;
}

Case to_case(const std::string& token) {
  auto c = parse_case(token);
  if (!c || *c == Case::General) throw UsageError("unknown case '" + token + "'");
  return *c;
}

/// <case> K D [lambda]
CaseParams case_from(const std::string& name, const std::vector<std::string>& nums) {
  const Case kind = to_case(name);
  const std::size_t want = uses_lambda(kind) ? 3 : 2;
  if (nums.size() != want)
    throw UsageError("case " + std::string(to_string(kind)) + " takes " +
                     (want == 3 ? "K D lambda" : "K D"));
  std::optional<std::size_t> lambda;
  if (want == 3) lambda = to_count(nums[2], "lambda");
  return make_case_params(kind, to_count(nums[0], "K"), to_count(nums[1], "D"), lambda);
}

ProblemSpec pattern_from(const std::vector<std::string>& words) {
  if (words.empty()) throw UsageError("missing pattern");
  std::string name = words[0];
  std::vector<std::string> nums(words.begin() + 1, words.end());
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  auto need = [&](std::size_t n, const char* usage) {
    if (nums.size() != n) throw UsageError("pattern " + name + " takes " + usage);
  };
  if (name == "full") {
    need(2, "K D");
    const std::size_t K = to_count(nums[0], "K");
    const std::size_t D = to_count(nums[1], "D");
    if (K < 2 || D < 1 || D > K - 1) throw InvalidParameters("D must satisfy 1 <= D <= K-1");
    return ProblemSpec::one_sided(K, D);
  }
  if (name == "complete" || name == "empty") {
    need(1, "K");
    const std::size_t K = to_count(nums[0], "K");
    if (K < 1) throw InvalidParameters("K must be at least 1");
    return name == "complete" ? ProblemSpec::complete(K) : ProblemSpec::empty(K);
  }
  if (name == "general") {
    need(3, "K U D");
    const auto p = make_general_params(to_count(nums[0], "K"), to_count(nums[1], "U"),
                                       to_count(nums[2], "D"));
    return ProblemSpec::general(p.K, p.U, p.D);
  }
  return ProblemSpec::from_case(case_from(words[0], nums));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_generate(const std::string& name, const std::vector<std::string>& nums, bool symbols,
                 std::ostream& out) {
  const CodeBook code = construct(case_from(name, nums));
  out << render_matrix(code.matrix);
  if (symbols) out << render_symbols(code);
  return kOk;
}

int cmd_verify(const std::string& name, const std::vector<std::string>& nums,
               const std::string& matrix_file, std::size_t max_card, unsigned threads,
               std::ostream& out) {
  const CaseParams params = case_from(name, nums);
  const ProblemSpec problem = ProblemSpec::from_case(params);
  const CodeBook code = matrix_file.empty()
                            ? construct(params)
                            : CodeBook::from_matrix(params, parse_matrix(read_file(matrix_file)));
  SearchLimits limits;
  limits.max_cardinality = max_card;
  const DecodeReport report = verify_all(problem, code, limits, threads);
  const bool optimal = check_optimal_length(code);
  out << render_report(params, code.length(), optimal, report);
  return report.all_decodable() && optimal ? kOk : kVerificationFailed;
}

int cmd_minrank(const std::vector<std::string>& words, const MinrankLimits& limits,
                std::ostream& out) {
  const MinrankResult r = minrank(pattern_from(words), limits);
  out << "minrank=" << r.value << '\n' << render_matrix(r.witness);
  return kOk;
}

int cmd_critical(const std::vector<std::string>& words, const MinrankLimits& limits,
                 std::ostream& out) {
  const CriticalityReport r = is_critical(pattern_from(words), limits);
  out << "minrank=" << r.minrank << '\n';
  for (const auto& e : r.edges)
    out << "edge=" << e.i << ',' << e.j << " minrank_without=" << e.minrank_without
        << " critical=" << (e.critical ? "true" : "false") << '\n';
  out << "overall=" << (r.critical ? "true" : "false") << '\n';
  return kOk;
}

int cmd_capacity(const std::vector<std::string>& nums, std::ostream& out) {
  if (nums.size() != 3) throw UsageError("capacity takes K U D");
  const std::size_t K = to_count(nums[0], "K");
  const std::size_t U = to_count(nums[1], "U");
  const std::size_t D = to_count(nums[2], "D");
  make_general_params(K, U, D);
  out << capacity_general(K, U, D).to_string() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal index codes for one-sided neighbouring side information", "icode"};
  app.require_subcommand(1);

  std::vector<std::string> gen_args;
  bool symbols = false;
  auto* gen = app.add_subcommand("generate", "Print the generator matrix for <case> K D [lambda]");
  gen->add_option("args", gen_args, "case K D [lambda]")->required();
  gen->add_flag("--symbols", symbols, "Also list each code symbol");

  std::vector<std::string> ver_args;
  std::string matrix_file;
  std::size_t max_card = SearchLimits{}.max_cardinality;
  unsigned threads = 1;
  auto* ver = app.add_subcommand("verify", "Check decodability for <case> K D [lambda]");
  ver->add_option("args", ver_args, "case K D [lambda]")->required();
  ver->add_option("--matrix", matrix_file, "Verify this matrix file instead of the built-in code");
  ver->add_option("--max-card", max_card, "Largest subset size for the fallback search")
      ->check(CLI::PositiveNumber);
  ver->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  std::vector<std::string> mr_args;
  MinrankLimits limits;
  auto add_minrank_options = [&](CLI::App* sub) {
    sub->add_option("args", mr_args, "full K D | complete K | empty K | general K U D | case K D [lambda]")
        ->required();
    sub->add_option("--max-edges", limits.max_free_entries, "Refuse graphs with more edges");
    sub->add_option("--max-nodes", limits.max_nodes, "Search node budget");
  };
  auto* mr = app.add_subcommand("minrank", "Exact minrank over GF(2) with a witness matrix");
  add_minrank_options(mr);
  auto* crit = app.add_subcommand("critical", "Per-edge minrank criticality");
  add_minrank_options(crit);

  std::vector<std::string> cap_args;
  auto* cap = app.add_subcommand("capacity", "Symmetric capacity for K U D");
  cap->add_option("args", cap_args, "K U D")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (gen->parsed()) return cmd_generate(gen_args[0], {gen_args.begin() + 1, gen_args.end()}, symbols, out);
    if (ver->parsed())
      return cmd_verify(ver_args[0], {ver_args.begin() + 1, ver_args.end()}, matrix_file, max_card,
                        threads, out);
    if (mr->parsed()) return cmd_minrank(mr_args, limits, out);
    if (crit->parsed()) return cmd_critical(mr_args, limits, out);
    return cmd_capacity(cap_args, out);
  } catch (const Inconclusive& e) {
    err << e.what() << '\n';
    return kInconclusive;
  } catch (const std::invalid_argument& e) {
    // InvalidParameters, DimensionError and usage mistakes.
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace icode::cli
