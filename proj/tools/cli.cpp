#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "checks.hpp"
#include "penta/coloring.hpp"
#include "penta/decomposition.hpp"
#include "penta/fixtures.hpp"
#include "penta/generate.hpp"
#include "penta/io.hpp"
#include "penta/recognition.hpp"
#include "report.hpp"

namespace penta::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string input;
  std::string format;
  std::string fixture;
  std::string out;
  std::string emit = "json";
  std::uint64_t max_steps = kDefaultMaxSteps;
  int jobs = 1;
  bool no_timing = false;

  std::string mode = "exhaustive";
  int n_min = 1;
  int n_max = 7;
  std::uint64_t seed = 1;
  std::size_t count = 100;
  bool labeled = false;
  bool all_girth5 = false;

  std::string which;
};

/// Thrown for unreadable or unparsable input; maps to exit code 3.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Format format_for(const Options& opt) {
  if (!opt.format.empty()) return parse_format(opt.format);
  const auto dot = opt.input.rfind('.');
  const std::string ext = dot == std::string::npos ? "" : opt.input.substr(dot + 1);
  if (ext == "dimacs" || ext == "col") return Format::dimacs;
  if (ext == "json") return Format::json;
  return Format::graph6;
}

const char* format_name(Format f) {
  switch (f) {
    case Format::graph6: return "g6";
    case Format::dimacs: return "dimacs";
    case Format::json: return "json";
  }
  return "?";
}

struct Input {
  std::vector<Graph> graphs;
  json descriptor;
};

Input load(const Options& opt) {
  if (!opt.fixture.empty()) return {{fixture(opt.fixture)}, {{"fixture", opt.fixture}}};
  if (opt.input.empty()) throw InputError("no input: give a file or --fixture");
  const Format f = format_for(opt);
  Input in{read_graphs(read_text(opt.input), f), {{"path", opt.input}, {"format", format_name(f)}}};
  if (in.graphs.empty()) throw InputError("input holds no graphs");
  return in;
}

/// Runs fn on every index with up to `jobs` threads; results keep input order.
std::vector<json> parallel_map(std::size_t count, int jobs, const std::function<json(std::size_t)>& fn) {
  std::vector<json> results(count);
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) results[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

  int recognize_cmd() {
    const Input in = load(opt_);
    auto results = parallel_map(in.graphs.size(), opt_.jobs, [&](std::size_t i) {
      Budget budget(opt_.max_steps);
      json r = report::to_json(recognize(in.graphs[i], budget));
      r["index"] = i;
      r["n"] = in.graphs[i].order();
      r["m"] = in.graphs[i].edge_count();
      return r;
    });
    int code = Exit::pentagraph;
    for (const json& r : results) code = std::max(code, verdict_code(r["verdict"]));
    return emit_report("recognize", in, results, code);
  }

  int color_cmd(int k) {
    const Input in = load(opt_);
    auto results = parallel_map(in.graphs.size(), opt_.jobs, [&](std::size_t i) {
      const Graph& g = in.graphs[i];
      json r{{"index", i}, {"n", g.order()}};
      Budget budget(opt_.max_steps);
      if (!admit(g, budget, r)) return r;
      try {
        const Coloring c = k == 3 ? three_color(g, budget) : four_color(g);
        r["coloring"] = report::to_json(c);
        r["verified"] = verify_coloring(g, c);
      } catch (const DecompositionFailure& e) {
        r["error"] = e.what();
        r["verdict"] = to_string(Verdict::indeterminate);
      } catch (const ColoringError& e) {
        r["error"] = e.what();
        r["error_witness"] = e.witness();
        r["verdict"] = to_string(Verdict::indeterminate);
      }
      return r;
    });
    int code = Exit::pentagraph;
    for (const json& r : results) code = std::max(code, verdict_code(r["verdict"]));
    if (opt_.emit == "dot") {
      std::string text;
      for (std::size_t i = 0; i < results.size(); ++i) {
        if (!results[i].contains("coloring")) {
          err_ << "graph " << i << ": no colouring (" << results[i]["verdict"].get<std::string>() << ")\n";
          continue;
        }
        text += write_dot(in.graphs[i], results[i]["coloring"]["colors"].get<std::vector<int>>());
      }
      write_output(text);
      return code;
    }
    return emit_report(k == 3 ? "color3" : "color4", in, results, code);
  }

  int decompose_cmd() {
    const Input in = load(opt_);
    auto results = parallel_map(in.graphs.size(), opt_.jobs, [&](std::size_t i) {
      const Graph& g = in.graphs[i];
      json r{{"index", i}, {"n", g.order()}};
      Budget budget(opt_.max_steps);
      if (!admit(g, budget, r)) return r;
      const DecompositionOutcome outcome = decompose(g, budget);
      r["outcome"] = report::to_json(outcome);
      const auto problem = certificate_problem(g, outcome);
      r["certificate_valid"] = !problem.has_value();
      if (outcome.kind() == OutcomeKind::none_found) r["verdict"] = to_string(Verdict::indeterminate);
      return r;
    });
    int code = Exit::pentagraph;
    for (const json& r : results) code = std::max(code, verdict_code(r["verdict"]));
    return emit_report("decompose", in, results, code);
  }

  int corpus_cmd() {
    CorpusSpec spec;
    if (opt_.mode == "exhaustive")
      spec.mode = CorpusMode::exhaustive;
    else if (opt_.mode == "random")
      spec.mode = CorpusMode::random;
    else
      throw CorpusError("unknown mode '" + opt_.mode + "'");
    spec.n_min = opt_.n_min;
    spec.n_max = opt_.n_max;
    spec.seed = opt_.seed;
    spec.target_count = opt_.count;
    spec.labeled = opt_.labeled;
    spec.pentagraphs_only = !opt_.all_girth5;
    spec.max_steps = opt_.max_steps;
    validate(spec);

    const auto start = std::chrono::steady_clock::now();
    std::string lines;
    std::map<int, std::size_t> by_order;
    std::size_t bipartite = 0;
    const CorpusStats stats = generate_corpus(spec, [&](const Graph& g) {
      lines += write_graph6(g);
      lines += '\n';
      ++by_order[g.order()];
      if (check_bipartite(g).bipartite) ++bipartite;
      return true;
    });

    json summary{{"command", "corpus"},
                 {"mode", opt_.mode},
                 {"n_min", spec.n_min},
                 {"n_max", spec.n_max},
                 {"labeled", spec.labeled},
                 {"pentagraphs_only", spec.pentagraphs_only},
                 {"emitted", stats.emitted},
                 {"truncated", stats.truncated}};
    if (spec.mode == CorpusMode::random) {
      summary["seed"] = spec.seed;
      summary["count"] = spec.target_count;
    }
    json orders = json::array();
    for (auto [n, k] : by_order) orders.push_back({{"n", n}, {"count", k}});
    summary["by_order"] = orders;
    summary["bipartite_fraction"] =
        stats.emitted == 0 ? 0.0 : static_cast<double>(bipartite) / static_cast<double>(stats.emitted);
    add_timing(summary, start);

    if (opt_.out.empty()) {
      out_ << lines;
      err_ << summary.dump(2) << '\n';
    } else {
      write_file(opt_.out, lines);
      out_ << summary.dump(2) << '\n';
    }
    return Exit::pentagraph;
  }

  int verify_cmd() {
    const Input in = load(opt_);
    auto results = parallel_map(in.graphs.size(), opt_.jobs, [&](std::size_t i) {
      const Graph& g = in.graphs[i];
      Budget budget(opt_.max_steps);
      checks::CheckResult res;
      const RecognitionReport rec = recognize(g, budget);
      if (rec.verdict != Verdict::pentagraph) {
        res = {rec.verdict == Verdict::indeterminate ? checks::Status::indeterminate : checks::Status::skipped,
               "input is not a pentagraph", {}};
      } else if (opt_.which == "t12") {
        res = checks::four_coloring(g);
      } else if (opt_.which == "t13") {
        res = checks::decomposition(g, budget);
      } else if (opt_.which == "t25") {
        res = checks::p2_cutsets(g, budget);
      } else {
        res = checks::local_jump_pairs(g, budget);
      }
      json r{{"index", i}, {"status", checks::to_string(res.status)}};
      if (!res.detail.empty()) r["detail"] = res.detail;
      if (res.status == checks::Status::fail) {
        r["graph6"] = write_graph6(g);
        r["evidence"] = res.evidence;
      }
      return r;
    });

    std::map<std::string, std::size_t> counts{{"pass", 0}, {"fail", 0}, {"skipped", 0}, {"indeterminate", 0}};
    json first = nullptr;
    for (const json& r : results) {
      const std::string status = r["status"];
      ++counts[status];
      if (status == "fail" && first.is_null()) first = r;
    }
    int code = Exit::pentagraph;
    if (counts["fail"] > 0)
      code = Exit::not_pentagraph;
    else if (counts["indeterminate"] > 0)
      code = Exit::indeterminate;
    json extra{{"which", opt_.which}, {"counts", counts}, {"counterexamples", counts["fail"]},
               {"first_counterexample", first}};
    return emit_report("verify", in, results, code, extra);
  }

  int oracle_cmd() {
    const Input in = load(opt_);
    auto results = parallel_map(in.graphs.size(), opt_.jobs, [&](std::size_t i) {
      const Graph& g = in.graphs[i];
      Budget budget(opt_.max_steps);
      json r{{"index", i}, {"n", g.order()}};
      const auto gi = girth(g);
      r["girth"] = gi ? json(*gi) : json(nullptr);
      const auto chi = chromatic_number_bruteforce(g, 4);
      r["chromatic_number"] = chi ? json(*chi) : json("greater than 4");
      r["p3_cutset"] = find_p3_cutset(g).has_value();
      const auto star = search_star_cutsets(g, budget, true);
      r["strong_star_cutset"] = star.value.has_value();
      r["star_search_complete"] = star.complete;
      return r;
    });
    return emit_report("oracle", in, results, Exit::pentagraph);
  }

 private:
  static int verdict_code(const json& verdict) {
    if (!verdict.is_string()) return Exit::pentagraph;
    const std::string v = verdict;
    if (v == "not_pentagraph") return Exit::not_pentagraph;
    if (v == "indeterminate") return Exit::indeterminate;
    return Exit::pentagraph;
  }

  // Recognises g first; refuses non-pentagraphs with the witness recorded in r.
  static bool admit(const Graph& g, Budget& budget, json& r) {
    const RecognitionReport rec = recognize(g, budget);
    r["verdict"] = to_string(rec.verdict);
    if (rec.verdict == Verdict::pentagraph) return true;
    r["refused"] = true;
    r["recognition"] = report::to_json(rec);
    return false;
  }

  void add_timing(json& j, std::chrono::steady_clock::time_point start) const {
    if (opt_.no_timing) return;
    j["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }

  int emit_report(const std::string& command, const Input& in, const std::vector<json>& results, int code,
                  const json& extra = json::object()) {
    json rep{{"command", command}, {"input", in.descriptor}, {"max_steps", opt_.max_steps},
             {"results", results}, {"exit_code", code}};
    for (auto it = extra.begin(); it != extra.end(); ++it) rep[it.key()] = it.value();
    add_timing(rep, start_);
    write_output(rep.dump(2) + "\n");
    return code;
  }

  void write_output(const std::string& text) {
    if (opt_.out.empty())
      out_ << text;
    else
      write_file(opt_.out, text);
  }

  static void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write '" + path + "'");
    f << text;
    if (!f) throw InputError("write to '" + path + "' failed");
  }

  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::uint64_t default_max_steps() {
  if (const char* env = std::getenv("PENTA_MAX_STEPS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultMaxSteps;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  opt.max_steps = default_max_steps();

  CLI::App app{"Pentagraph recognition, decomposition and colouring"};
  app.name("penta");
  app.require_subcommand(1, 1);

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", opt.input, "Graph file ('-' for stdin)");
    cmd->add_option("--format", opt.format, "Input format")->check(CLI::IsMember({"g6", "graph6", "dimacs", "json"}));
    cmd->add_option("--fixture", opt.fixture, "Use a named fixture instead of a file")
        ->check(CLI::IsMember({"petersen", "p0", "p1", "p2", "c5", "c7"}));
    cmd->add_option("--out", opt.out, "Write the report here instead of stdout");
    cmd->add_option("--max-steps", opt.max_steps, "Search budget per graph")->check(CLI::PositiveNumber);
    cmd->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::Range(1, 256));
    cmd->add_flag("--no-timing", opt.no_timing, "Omit the elapsed_ms field");
  };

  auto* recognize_cmd = app.add_subcommand("recognize", "Decide pentagraph membership with a certificate");
  add_input(recognize_cmd);
  auto* color3_cmd = app.add_subcommand("color3", "Three-colour a pentagraph");
  add_input(color3_cmd);
  color3_cmd->add_option("--emit", opt.emit, "Output kind")->check(CLI::IsMember({"json", "dot"}));
  auto* color4_cmd = app.add_subcommand("color4", "Four-colour a pentagraph by BFS layers");
  add_input(color4_cmd);
  color4_cmd->add_option("--emit", opt.emit, "Output kind")->check(CLI::IsMember({"json", "dot"}));
  auto* decompose_cmd = app.add_subcommand("decompose", "Find a decomposition certificate");
  add_input(decompose_cmd);
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force colouring and cutset searches");
  add_input(oracle_cmd);
  auto* verify_cmd = app.add_subcommand("verify", "Check a structural theorem on every graph of a corpus");
  add_input(verify_cmd);
  verify_cmd->add_option("--which", opt.which, "Property to check")
      ->required()
      ->check(CLI::IsMember({"t12", "t13", "t25", "t31"}));

  auto* corpus_cmd = app.add_subcommand("corpus", "Generate a graph6 corpus of pentagraphs");
  corpus_cmd->add_option("--mode", opt.mode, "exhaustive or random")->check(CLI::IsMember({"exhaustive", "random"}));
  corpus_cmd->add_option("--n-min", opt.n_min, "Smallest order");
  corpus_cmd->add_option("--n-max", opt.n_max, "Largest order");
  corpus_cmd->add_option("--seed", opt.seed, "Random seed");
  corpus_cmd->add_option("--count", opt.count, "Graphs to draw in random mode");
  corpus_cmd->add_option("--out", opt.out, "graph6 output file (stdout when absent)");
  corpus_cmd->add_option("--max-steps", opt.max_steps, "Budget per edge check")->check(CLI::PositiveNumber);
  corpus_cmd->add_flag("--labeled", opt.labeled, "Exhaustive mode: every labelled graph");
  corpus_cmd->add_flag("--all-girth5", opt.all_girth5, "Exhaustive mode: keep graphs with long odd holes too");
  corpus_cmd->add_flag("--no-timing", opt.no_timing, "Omit the elapsed_ms field");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Exit::pentagraph;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Exit::pentagraph;
  } catch (const CLI::ParseError& e) {
    err << "penta: " << e.what() << '\n';
    return Exit::input_error;
  }

  Runner runner(opt, out, err);
  try {
    if (recognize_cmd->parsed()) return runner.recognize_cmd();
    if (color3_cmd->parsed()) return runner.color_cmd(3);
    if (color4_cmd->parsed()) return runner.color_cmd(4);
    if (decompose_cmd->parsed()) return runner.decompose_cmd();
    if (corpus_cmd->parsed()) return runner.corpus_cmd();
    if (verify_cmd->parsed()) return runner.verify_cmd();
    if (oracle_cmd->parsed()) return runner.oracle_cmd();
  } catch (const InputError& e) {
    err << "penta: " << e.what() << '\n';
    return Exit::input_error;
  } catch (const CorpusError& e) {
    err << "penta: " << e.what() << '\n';
    return Exit::input_error;
  } catch (const GraphError& e) {
    err << "penta: " << e.what() << '\n';
    return Exit::input_error;
  }
  return Exit::input_error;
}

}  // namespace penta::cli
