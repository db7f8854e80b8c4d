#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "redkit/bench.hpp"
#include "redkit/counts.hpp"
#include "redkit/errors.hpp"
#include "redkit/io.hpp"
#include "redkit/oracles.hpp"
#include "redkit/reductions_branch.hpp"
#include "redkit/reductions_dp.hpp"
#include "redkit/verify.hpp"

namespace {

using nlohmann::json;
using namespace redkit;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot open output file: " + path);
  out << text;
}

json counts_to_json(const SizeIndexedCounts& counts) {
  json obj = json::object();
  for (const auto& [size, value] : counts.counts)
    obj[std::to_string(size)] = value.get_str();
  return obj;
}

std::string counts_to_text(const SizeIndexedCounts& counts) {
  std::ostringstream os;
  for (const auto& [size, value] : counts.counts)
    os << size << " " << value.get_str() << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// reduce

struct ReduceArgs {
  std::string name;
  std::string input;
  std::string output;  // file for single-output, directory for multi-output
  int p = 3;
  int t = 0;
  bool t_set = false;
  int t0 = 0;
  bool t0_set = false;
  double alpha = 0.5;
};

struct ReduceOutcome {
  json report;             // scalar facts about the reduction
  std::vector<std::pair<std::string, std::string>> files;  // name stem -> text
  std::string single_text; // single-output instance text
  bool multi = false;
};

ReduceOutcome run_reduce(const ReduceArgs& args) {
  ReduceOutcome out;
  out.report["reduction"] = args.name;
  out.report["input"] = args.input;

  auto need_t = [&] {
    if (!args.t_set) throw ParameterError("reduction " + args.name + " requires --t");
    return args.t;
  };

  if (args.name == "cnf-to-hittingset") {
    CnfFormula f = std::get<CnfFormula>(parse_instance(Format::dimacs_cnf, read_text(args.input)));
    HittingSetInstance hs = cnf_to_hitting_set(f, args.p);
    out.report["p"] = args.p;
    out.report["target"] = hs.target;
    out.report["universe"] = hs.system.universe_size;
    out.report["sets"] = hs.system.num_sets();
    out.single_text = serialize(hs.system);
  } else if (args.name == "cnf-to-parity-hittingset") {
    CnfFormula f = std::get<CnfFormula>(parse_instance(Format::dimacs_cnf, read_text(args.input)));
    SetSystem sys = cnf_to_parity_hitting_set(f, args.p);
    out.report["p"] = args.p;
    out.report["universe"] = sys.universe_size;
    out.report["sets"] = sys.num_sets();
    out.single_text = serialize(sys);
  } else if (args.name == "hs-to-splitting") {
    SetSystem sys = std::get<SetSystem>(parse_instance(Format::setsys, read_text(args.input)));
    HittingSetInstance inst{sys, need_t()};
    auto outs = hitting_set_to_set_splitting(inst, args.p);
    out.multi = true;
    out.report["p"] = args.p;
    out.report["t"] = args.t;
    out.report["outputs"] = int(outs.size());
    char stem[64];
    for (size_t i = 0; i < outs.size(); ++i) {
      std::snprintf(stem, sizeof stem, "splitting-%03zu.setsys", i);
      out.files.emplace_back(stem, serialize(outs[i]));
    }
  } else if (args.name == "splitting-to-naecnf" || args.name == "hs-to-cnf") {
    SetSystem sys = std::get<SetSystem>(parse_instance(Format::setsys, read_text(args.input)));
    CnfFormula f = args.name == "hs-to-cnf" ? hitting_set_to_monotone_cnf(sys)
                                            : set_splitting_to_nae_cnf(sys);
    out.report["vars"] = f.num_vars;
    out.report["clauses"] = f.num_clauses();
    out.single_text = serialize(f);
  } else if (args.name == "nae-to-cnf") {
    CnfFormula f = std::get<CnfFormula>(parse_instance(Format::dimacs_cnf, read_text(args.input)));
    CnfFormula plain = nae_to_cnf(f);
    out.report["vars"] = plain.num_vars;
    out.report["clauses"] = plain.num_clauses();
    out.single_text = serialize(plain);
  } else if (args.name == "cnf-to-circuit") {
    CnfFormula f = std::get<CnfFormula>(parse_instance(Format::dimacs_cnf, read_text(args.input)));
    VspCircuit c = cnf_to_vsp_circuit(f);
    out.report["gates"] = c.num_gates();
    out.report["wires"] = c.wire_count();
    out.single_text = serialize(c);
  } else if (args.name == "setcover-group") {
    SetSystem sys = std::get<SetSystem>(parse_instance(Format::setsys, read_text(args.input)));
    GroupedCoverInstance g = group_set_cover(sys, need_t(), args.alpha);
    out.report["alpha"] = args.alpha;
    out.report["t"] = args.t;
    out.report["target"] = g.target;
    out.report["q"] = g.q;
    out.report["universe"] = g.system.universe_size;
    out.report["sets"] = g.system.num_sets();
    json prov = json::array();
    for (const auto& [idx, srcs] : g.provenance)
      prov.push_back({{"index", idx}, {"sources", srcs}});
    out.report["provenance"] = std::move(prov);
    out.single_text = serialize(g.system);
  } else if (args.name == "setcover-to-steiner") {
    SetSystem sys = std::get<SetSystem>(parse_instance(Format::setsys, read_text(args.input)));
    SteinerReduction sr = set_cover_to_steiner(sys, need_t());
    out.report["t"] = args.t;
    out.report["target"] = sr.target;
    out.report["vertices"] = sr.graph.num_vertices;
    out.report["trivially-no"] = sr.trivially_no;
    out.single_text = serialize(sr.graph);
  } else if (args.name == "setcover-to-cvc") {
    SetSystem sys = std::get<SetSystem>(parse_instance(Format::setsys, read_text(args.input)));
    CvcReduction cr = set_cover_to_cvc(sys, need_t());
    out.report["t"] = args.t;
    out.report["target"] = cr.target;
    out.report["vertices"] = cr.graph.num_vertices;
    out.report["trivially-no"] = cr.trivially_no;
    out.single_text = serialize(cr.graph);
  } else if (args.name == "setcover-to-setpart") {
    SetSystem sys = std::get<SetSystem>(parse_instance(Format::setsys, read_text(args.input)));
    PartitioningReduction pr = set_cover_to_set_partitioning(sys, need_t());
    out.report["t"] = args.t;
    out.report["target"] = pr.target;
    out.report["sets"] = pr.system.num_sets();
    out.single_text = serialize(pr.system);
  } else if (args.name == "setpart-to-subsetsum") {
    SetSystem sys = std::get<SetSystem>(parse_instance(Format::setsys, read_text(args.input)));
    if (args.t0_set) {
      SubsetSumInstance inst = set_partitioning_to_subset_sum(sys, args.t0);
      out.report["t0"] = args.t0;
      out.report["items"] = inst.num_items();
      out.report["bits"] = inst.bit_length();
      out.single_text = serialize(inst);
    } else {
      auto insts = set_partitioning_to_subset_sum_all(sys, need_t());
      out.multi = true;
      out.report["t"] = args.t;
      out.report["outputs"] = int(insts.size());
      char stem[64];
      for (size_t i = 0; i < insts.size(); ++i) {
        std::snprintf(stem, sizeof stem, "subsetsum-t%02zu.subsetsum", i + 1);
        out.files.emplace_back(stem, serialize(insts[i]));
      }
    }
  } else {
    throw ParameterError("unknown reduction: " + args.name);
  }
  return out;
}

int cmd_reduce(const ReduceArgs& args, const std::string& format) {
  ReduceOutcome out = run_reduce(args);

  if (out.multi) {
    if (args.output.empty())
      throw ParameterError("multi-output reductions need an output directory argument");
    std::filesystem::create_directories(args.output);
    json paths = json::array();
    for (const auto& [stem, text] : out.files) {
      std::string path = (std::filesystem::path(args.output) / stem).string();
      write_text(path, text);
      paths.push_back(path);
    }
    out.report["files"] = paths;
    // the manifest itself lives next to the instances for replay
    std::string manifest = (std::filesystem::path(args.output) / "manifest.json").string();
    write_text(manifest, out.report.dump(2) + "\n");
    if (format == "json") {
      std::cout << out.report.dump(2) << "\n";
    } else {
      for (const auto& [key, value] : out.report.items())
        if (key != "files" && key != "provenance")
          std::cout << key << " " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      for (const auto& p : paths) std::cout << "file " << p.get<std::string>() << "\n";
      std::cout << "manifest " << manifest << "\n";
    }
    return kExitPass;
  }

  bool to_stdout = args.output.empty() || args.output == "-";
  if (!to_stdout) {
    write_text(args.output, out.single_text);
    out.report["output"] = args.output;
  }
  if (format == "json") {
    if (to_stdout) out.report["text"] = out.single_text;
    std::cout << out.report.dump(2) << "\n";
  } else {
    if (to_stdout) std::cout << out.single_text;
    std::ostream& rep = to_stdout ? std::cerr : std::cout;
    for (const auto& [key, value] : out.report.items())
      if (key != "provenance")
        rep << key << " " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------
// solve

struct SolveArgs {
  std::string problem;
  std::string input;
  bool count = false;
  bool parity = false;
  bool decide = false;
  bool min = false;
  bool check_labels = false;
  int size = -1;
  int t = -1;
  std::string mode = "dp";
};

int report_scalar(const std::string& format, const std::string& problem,
                  const std::string& what, const std::string& value, int exit_code) {
  if (format == "json") {
    json obj{{"problem", problem}, {what, value}};
    std::cout << obj.dump(2) << "\n";
  } else {
    std::cout << value << "\n";
  }
  return exit_code;
}

int report_counts(const std::string& format, const std::string& problem,
                  const SizeIndexedCounts& counts, int size) {
  if (size >= 0)
    return report_scalar(format, problem, "count", counts.get(size).get_str(), kExitPass);
  if (format == "json") {
    json obj{{"problem", problem}, {"counts", counts_to_json(counts)}};
    std::cout << obj.dump(2) << "\n";
  } else {
    std::cout << counts_to_text(counts);
  }
  return kExitPass;
}

int report_parity(const std::string& format, const std::string& problem, int bit) {
  return report_scalar(format, problem, "parity", std::to_string(bit),
                       bit ? kExitPass : kExitFail);
}

int report_decision(const std::string& format, const std::string& problem, bool yes) {
  return report_scalar(format, problem, "decision", yes ? "YES" : "NO",
                       yes ? kExitPass : kExitFail);
}

int cmd_solve(const SolveArgs& args, const std::string& format, int cap) {
  const std::string& p = args.problem;
  int modes = int(args.count) + int(args.parity) + int(args.decide) + int(args.min) +
              int(args.check_labels);
  if (modes > 1) throw ParameterError("choose one of --count / --parity / --decide / --min");

  if (p == "cnf" || p == "nae") {
    CnfFormula f = std::get<CnfFormula>(parse_instance(Format::dimacs_cnf, read_text(args.input)));
    if (p == "nae") {
      if (args.decide) return report_decision(format, p, exists_nae_assignment(f, cap));
      mpz_class c = count_nae_assignments(f, cap);
      if (args.parity) return report_parity(format, p, mpz_odd_p(c.get_mpz_t()) ? 1 : 0);
      return report_scalar(format, p, "count", c.get_str(), kExitPass);
    }
    mpz_class c = count_satisfying(f, cap);
    if (args.parity) return report_parity(format, p, mpz_odd_p(c.get_mpz_t()) ? 1 : 0);
    if (args.decide) return report_decision(format, p, c > 0);
    return report_scalar(format, p, "count", c.get_str(), kExitPass);
  }

  if (p == "hittingset" || p == "setcover" || p == "partitioning" || p == "splitting" ||
      p == "flip") {
    SetSystem sys = std::get<SetSystem>(parse_instance(Format::setsys, read_text(args.input)));
    if (p == "flip") {
      FlipParities fp = flip_parities(sys, cap);
      if (format == "json") {
        json obj{{"problem", p},
                 {"hitting", fp.parity_hitting},
                 {"covers", fp.parity_covers},
                 {"independent-sets", fp.parity_is}};
        std::cout << obj.dump(2) << "\n";
      } else {
        std::cout << "hitting " << fp.parity_hitting << "\n"
                  << "covers " << fp.parity_covers << "\n"
                  << "independent-sets " << fp.parity_is << "\n";
      }
      return fp.parity_hitting ? kExitPass : kExitFail;
    }
    if (p == "splitting") {
      mpz_class c = count_set_splittings(sys, cap);
      if (args.decide) return report_decision(format, p, c > 0);
      return report_scalar(format, p, "count", c.get_str(), kExitPass);
    }
    if (p == "setcover" && args.min) {
      auto mn = min_set_cover_dp(sys, cap);
      return report_scalar(format, p, "min", mn ? std::to_string(*mn) : "none",
                           mn ? kExitPass : kExitFail);
    }
    SizeIndexedCounts counts = p == "hittingset" ? count_hitting_sets_by_size(sys, cap)
                               : p == "setcover" ? count_set_covers_by_size(sys, cap)
                                                 : count_set_partitionings_by_size(sys, cap);
    if (args.parity) return report_parity(format, p, counts.parity_total());
    if (args.decide) {
      if (args.t < 0) throw ParameterError("--decide on " + p + " requires --t");
      auto mn = counts.min_nonzero();
      return report_decision(format, p, mn && *mn <= args.t);
    }
    return report_counts(format, p, counts, args.size);
  }

  if (p == "steiner" || p == "cvc" || p == "bipartite-is") {
    Graph g = std::get<Graph>(parse_instance(Format::graph, read_text(args.input)));
    if (p == "bipartite-is") {
      mpz_class c = count_bipartite_independent_sets(g, cap);
      if (args.parity) return report_parity(format, p, mpz_odd_p(c.get_mpz_t()) ? 1 : 0);
      return report_scalar(format, p, "count", c.get_str(), kExitPass);
    }
    SizeIndexedCounts counts =
        p == "steiner" ? count_steiner_sets_by_size(g, cap) : count_cvc_by_size(g, cap);
    return report_counts(format, p, counts, args.size);
  }

  if (p == "subsetsum") {
    SubsetSumInstance inst =
        std::get<SubsetSumInstance>(parse_instance(Format::subsetsum, read_text(args.input)));
    SubsetSumMode mode;
    if (args.mode == "dp")
      mode = SubsetSumMode::dp;
    else if (args.mode == "brute")
      mode = SubsetSumMode::brute;
    else
      throw ParameterError("--mode must be dp or brute");
    return report_decision(format, p, subset_sum_decide(inst, mode, cap));
  }

  if (p == "circuit") {
    VspCircuit c = std::get<VspCircuit>(parse_instance(Format::circuit, read_text(args.input)));
    if (args.check_labels) {
      try {
        verify_vsp_labeling(c);
      } catch (const RedkitError& e) {
        return report_scalar(format, p, "labels", std::string("invalid: ") + e.what(),
                             kExitFail);
      }
      return report_scalar(format, p, "labels", "valid", kExitPass);
    }
    mpz_class count = circuit_count_sat(c, cap);
    if (args.parity) return report_parity(format, p, mpz_odd_p(count.get_mpz_t()) ? 1 : 0);
    if (args.decide) return report_decision(format, p, count > 0);
    return report_scalar(format, p, "count", count.get_str(), kExitPass);
  }

  throw ParameterError("unknown problem: " + p);
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::vector<std::string>& suites, const SuiteOptions& opts,
               const std::string& format) {
  std::vector<std::string> chosen = suites.empty() ? suite_names() : suites;
  std::vector<SuiteResult> results;
  for (const std::string& name : chosen) results.push_back(run_suite(name, opts));

  bool all_passed = true;
  for (const SuiteResult& r : results) all_passed = all_passed && r.passed();

  if (format == "json") {
    json doc{{"seed", opts.seed}, {"cap", opts.cap}, {"passed", all_passed}};
    json jsuites = json::array();
    for (const SuiteResult& r : results) {
      json recs = json::array();
      for (const CaseRecord& rec : r.records) {
        json jr{{"id", rec.id}, {"passed", rec.passed}};
        if (!rec.passed) jr["detail"] = rec.detail;
        recs.push_back(std::move(jr));
      }
      jsuites.push_back({{"name", r.name},
                         {"seed", r.seed},
                         {"cases", r.cases},
                         {"failures", r.failures},
                         {"seconds", r.seconds},
                         {"budget-seconds", r.budget_seconds},
                         {"records", std::move(recs)}});
    }
    doc["suites"] = std::move(jsuites);
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const SuiteResult& r : results) {
      for (const CaseRecord& rec : r.records) {
        if (rec.passed)
          std::cout << "case " << r.name << "/" << rec.id << " pass\n";
        else
          std::cout << "case " << r.name << "/" << rec.id << " FAIL " << rec.detail
                    << "\n";
      }
      std::printf("suite %s %s cases=%d failures=%d seconds=%.3f seed=%llu\n",
                  r.name.c_str(), r.passed() ? "pass" : "FAIL", r.cases, r.failures,
                  r.seconds, (unsigned long long)r.seed);
    }
    std::cout << "verdict " << (all_passed ? "pass" : "FAIL") << "\n";
  }
  return all_passed ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// bench

int cmd_bench(const std::vector<std::string>& targets, const std::string& range,
              uint64_t seed, const std::string& format) {
  int lo = 0, hi = 0;
  if (!range.empty()) {
    size_t dots = range.find("..");
    if (dots == std::string::npos)
      throw ParameterError("--n expects a range like 10..20");
    try {
      lo = std::stoi(range.substr(0, dots));
      hi = std::stoi(range.substr(dots + 2));
    } catch (const std::exception&) {
      throw ParameterError("--n expects a range like 10..20");
    }
  }
  std::vector<std::string> chosen = targets.empty() ? bench_targets() : targets;
  json jdoc = json::array();
  for (const std::string& target : chosen) {
    BenchResult r = run_bench(target, lo, hi, seed);
    if (format == "json") {
      json pts = json::array();
      for (const BenchPoint& pt : r.points) pts.push_back({{"x", pt.x}, {"seconds", pt.seconds}});
      jdoc.push_back({{"target", r.target},
                      {"seed", r.seed},
                      {"x", r.x_label},
                      {"points", std::move(pts)},
                      {"slope", r.slope},
                      {"intercept", r.intercept}});
    } else {
      std::cout << "target " << r.target << "\n";
      std::cout << "seed " << r.seed << "\n";
      std::cout << "x " << r.x_label << "\n";
      for (const BenchPoint& pt : r.points)
        std::printf("point %d %.9f\n", pt.x, pt.seconds);
      std::printf("slope %.4f\n", r.slope);
      std::printf("intercept %.4f\n", r.intercept);
    }
  }
  if (format == "json") std::cout << jdoc.dump(2) << "\n";
  return kExitPass;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    try {
      out.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw ParameterError("bad integer list: " + text);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduction toolkit: instance transformations, reference solvers, "
               "contract verification, and growth-rate benchmarks"};
  app.require_subcommand(1);
  app.fallthrough();

  uint64_t seed = 1;
  int cap = kDefaultCap;
  if (const char* env = std::getenv("REDKIT_CAP")) {
    try {
      cap = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "REDKIT_CAP is not an integer: " << env << "\n";
      return kExitUsage;
    }
  }
  std::string format = "text";
  app.add_option("--seed", seed, "random seed embedded in reports");
  app.add_option("--cap", cap, "brute-force size cap (REDKIT_CAP overrides the default)");
  app.add_option("--format", format, "report format: text | json")
      ->check(CLI::IsMember({"text", "json"}));

  ReduceArgs rargs;
  CLI::App* reduce = app.add_subcommand("reduce", "apply an instance transformation");
  reduce->add_option("name", rargs.name, "reduction name")->required();
  reduce->add_option("input", rargs.input, "input instance file, - for stdin")->required();
  reduce->add_option("output", rargs.output,
                     "output file (single) or directory (multi-output)");
  reduce->add_option("--p", rargs.p, "block size p where applicable");
  reduce->add_option("--t", rargs.t, "target size")->each([&](const std::string&) {
    rargs.t_set = true;
  });
  reduce->add_option("--t0", rargs.t0, "exact subfamily size (single subset-sum output)")
      ->each([&](const std::string&) { rargs.t0_set = true; });
  reduce->add_option("--alpha", rargs.alpha, "target-to-universe ratio bound");

  SolveArgs sargs;
  CLI::App* solve = app.add_subcommand("solve", "run a reference solver");
  solve->add_option("problem", sargs.problem, "problem name")->required();
  solve->add_option("input", sargs.input, "input instance file, - for stdin")->required();
  solve->add_flag("--count", sargs.count, "print counts (size-indexed where natural)");
  solve->add_flag("--parity", sargs.parity, "print the parity bit");
  solve->add_flag("--decide", sargs.decide, "print YES/NO");
  solve->add_flag("--min", sargs.min, "print the minimum cover size");
  solve->add_flag("--check-labels", sargs.check_labels, "validate circuit labels");
  solve->add_option("--size", sargs.size, "report the count at one size only");
  solve->add_option("--t", sargs.t, "decision target size");
  solve->add_option("--mode", sargs.mode, "subset-sum engine: dp | brute");

  std::vector<std::string> verify_suites;
  int verify_seeds = 0;
  std::string verify_sizes;
  CLI::App* verify = app.add_subcommand("verify", "run contract verification suites");
  verify->add_option("suites", verify_suites, "suite names (default: all)");
  verify->add_option("--seeds", verify_seeds, "number of seeded cases per suite");
  verify->add_option("--n", verify_sizes, "comma-separated size list where applicable");

  std::vector<std::string> bench_targets_arg;
  std::string bench_range;
  CLI::App* bench = app.add_subcommand("bench", "fit empirical growth exponents");
  bench->add_option("targets", bench_targets_arg, "bench targets (default: all)");
  bench->add_option("--n", bench_range, "sweep range, e.g. 10..20");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (reduce->parsed()) return cmd_reduce(rargs, format);
    if (solve->parsed()) return cmd_solve(sargs, format, cap);
    if (verify->parsed()) {
      SuiteOptions opts;
      opts.seed = seed;
      opts.cases = verify_seeds;
      opts.cap = cap;
      if (!verify_sizes.empty()) opts.sizes = parse_int_list(verify_sizes);
      return cmd_verify(verify_suites, opts, format);
    }
    if (bench->parsed()) return cmd_bench(bench_targets_arg, bench_range, seed, format);
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const RedkitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
