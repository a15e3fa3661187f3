#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orient/check/acceptance.hpp"
#include "orient/orient.hpp"

namespace {

using namespace orient;

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitAcceptance = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kRandomNames{"gnp-graph", "random-hypergraph", "bipartite", "star",
                                            "interval-layers"};
const std::vector<std::string> kAlgorithms{"threshold", "threshold-sampled", "bestvc", "baseline",
                                           "leaves-first", "opt"};

struct GenArgs {
  double eps = 0.01;
  std::size_t n = 0;
  double k = 0;
  double d = 0.618;
  double p = 0.4;
  double q = 0.4;
  double edge_p = 0.3;
  std::size_t hyperedges = 4;
  std::size_t max_size = 4;
  bool random_costs = false;
  std::uint64_t seed = 1;
};

bool is_random(const std::string& name) {
  return std::find(kRandomNames.begin(), kRandomNames.end(), name) != kRandomNames.end();
}

/// Instance document for a generator; interval-layers adds its layers.
nlohmann::json generate(const std::string& name, const GenArgs& a) {
  const auto& paper = paper_generator_names();
  if (!is_random(name) && std::find(paper.begin(), paper.end(), name) == paper.end())
    throw UsageError("unknown generator '" + name + "'");
  if (!is_random(name)) {
    PaperParams p;
    p.eps = a.eps;
    p.n = a.n;
    p.k = a.k;
    p.d = a.d;
    p.p = a.p;
    p.q = a.q;
    return to_json(gen_paper(name, p));
  }
  Rng rng = make_rng(a.seed, 0);
  if (name == "interval-layers") {
    const auto li = gen_interval_layers(a.k == 0 ? 2 : static_cast<std::size_t>(a.k), a.n == 0 ? 8 : a.n, rng);
    auto doc = to_json(li.instance);
    doc["layers"] = nlohmann::json::array();
    for (const auto& layer : li.layers) {
      nlohmann::json jl = nlohmann::json::array();
      for (auto v : layer) jl.push_back(li.instance.vertex(v).id);
      doc["layers"].push_back(std::move(jl));
    }
    return doc;
  }
  RandomSpec spec;
  spec.family = name == "gnp-graph"           ? RandomFamily::gnp_graph
                : name == "random-hypergraph" ? RandomFamily::random_hypergraph
                : name == "bipartite"         ? RandomFamily::bipartite
                                              : RandomFamily::star;
  if (a.n != 0) spec.n = a.n;
  spec.p = a.edge_p;
  spec.hyperedges = a.hyperedges;
  spec.max_size = a.max_size;
  spec.unit_costs = !a.random_costs;
  return to_json(gen_random(spec, rng));
}

void add_gen_options(CLI::App* cmd, GenArgs& a) {
  cmd->add_option("--eps", a.eps, "Generator epsilon");
  cmd->add_option("--n", a.n, "Size parameter (0 = generator default)");
  cmd->add_option("--k", a.k, "k parameter (cost ratio, copies or layers)");
  cmd->add_option("--d", a.d, "Threshold the tightness instances are built for");
  cmd->add_option("--p", a.p, "two-interval: mass of v0 in (1,2)");
  cmd->add_option("--q", a.q, "two-interval: mass of v1 in (1,2)");
  cmd->add_option("--edge-p", a.edge_p, "Edge probability of random graphs");
  cmd->add_option("--hyperedges", a.hyperedges, "Hyperedge count of random hypergraphs");
  cmd->add_option("--max-size", a.max_size, "Largest random hyperedge");
  cmd->add_flag("--random-costs", a.random_costs, "Integer costs in 1..5 instead of unit costs");
  cmd->add_option("--seed", a.seed, "Seed of random generators");
}

/// Applies key=value pairs from --gen-arg.
GenArgs parse_gen_args(const std::vector<std::string>& pairs) {
  GenArgs a;
  for (const auto& kv : pairs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw UsageError("--gen-arg expects key=value, got '" + kv + "'");
    const std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
    try {
      if (key == "eps") a.eps = std::stod(value);
      else if (key == "n") a.n = std::stoul(value);
      else if (key == "k") a.k = std::stod(value);
      else if (key == "d") a.d = std::stod(value);
      else if (key == "p") a.p = std::stod(value);
      else if (key == "q") a.q = std::stod(value);
      else if (key == "edge-p") a.edge_p = std::stod(value);
      else if (key == "hyperedges") a.hyperedges = std::stoul(value);
      else if (key == "max-size") a.max_size = std::stoul(value);
      else if (key == "random-costs") a.random_costs = value == "1" || value == "true";
      else if (key == "seed") a.seed = std::stoull(value);
      else throw UsageError("unknown generator argument '" + key + "'");
    } catch (const std::logic_error&) {
      throw UsageError("bad value for generator argument '" + key + "'");
    }
  }
  return a;
}

struct RunArgs {
  std::vector<std::string> instances;
  std::string gen;
  std::vector<std::string> gen_args;
  std::string instance_id;
  std::vector<std::string> algorithms{"threshold"};
  std::vector<std::string> stage1;
  double alpha = 1.0;
  std::string d = "auto";
  double eps = 0.05;
  double delta = 0.01;
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  std::size_t threads = 1;
  std::size_t bootstrap = 1000;
  std::string format = "csv";
  std::string output;
  bool timing = false;
};

VcStrategy strategy_for(double alpha, bool hyper) {
  if (alpha == 1.0) return hyper ? VcStrategy::few_hyperedges : VcStrategy::exact;
  if (alpha == 2.0) return VcStrategy::local_ratio;
  throw ValidationError("alpha must be 1 (exact cover) or 2 (local ratio)");
}

/// Builds an algorithm for an instance. Threshold and BestVC switch to sampled
/// probabilities on hypergraphs.
Algorithm make_algorithm(const std::string& name, const RunArgs& a, const Instance& inst) {
  const bool hyper = !reduce(inst).instance.is_graph();
  if (name == "threshold" || name == "threshold-sampled") {
    const bool sampled = hyper || name == "threshold-sampled";
    const VcStrategy vc = strategy_for(a.alpha, sampled);
    ThresholdConfig c = sampled ? hypergraph_threshold_config(a.eps, a.delta, vc) : graph_threshold_config(vc);
    if (a.d != "auto") {
      try {
        std::size_t used = 0;
        c.d = std::stod(a.d, &used);
        if (used != a.d.size()) throw std::invalid_argument(a.d);
      } catch (const std::logic_error&) {
        throw UsageError("--d expects a number or 'auto'");
      }
    }
    c.validate();
    return threshold_algorithm(c, name);
  }
  if (name == "bestvc")
    return best_vc_algorithm(strategy_for(a.alpha, false),
                             hyper ? ProbMode::sampled : ProbMode::exact_graph, a.eps, a.delta);
  if (name == "baseline") return baseline_algorithm();
  if (name == "leaves-first") return leaves_first_algorithm();
  if (name == "opt") return opt_algorithm();
  if (name == "vc") {
    if (a.stage1.empty()) throw UsageError("the vc algorithm needs --stage1 ids");
    return vc_based_algorithm(a.stage1, "vc");
  }
  throw UsageError("unknown algorithm '" + name + "'");
}

std::string file_stem(const std::string& path) {
  auto slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

int cmd_run(const RunArgs& a) {
  if (a.samples == 0) throw UsageError("--samples must be at least 1");
  if (a.instances.empty() == a.gen.empty()) throw UsageError("give either --instance files or --gen");
  if (!a.instance_id.empty() && a.instances.size() > 1)
    throw UsageError("--instance-id needs a single instance");
  if (a.threads == 0) throw UsageError("--threads must be at least 1");
  for (const auto& name : a.algorithms)
    if (name != "vc" && std::find(kAlgorithms.begin(), kAlgorithms.end(), name) == kAlgorithms.end())
      throw UsageError("unknown algorithm '" + name + "'");

  std::vector<std::pair<std::string, Instance>> work;
  if (!a.gen.empty()) {
    const GenArgs g = parse_gen_args(a.gen_args);
    work.emplace_back(a.instance_id.empty() ? a.gen : a.instance_id, parse_instance(generate(a.gen, g).dump()));
  } else {
    for (const auto& path : a.instances)
      work.emplace_back(a.instance_id.empty() ? file_stem(path) : a.instance_id, load_instance(path));
  }

  std::ofstream file;
  if (!a.output.empty()) {
    file.open(a.output);
    if (!file) throw ValidationError("cannot write '" + a.output + "'");
  }
  std::ostream& out = a.output.empty() ? std::cout : file;
  write_csv_header(out);
  bool failed = false;
  for (const auto& [id, inst] : work) {
    for (const auto& name : a.algorithms) {
      const Algorithm alg = make_algorithm(name, a, inst);
      EvalOptions o;
      o.samples = a.samples;
      o.seed = a.seed;
      o.threads = a.threads;
      o.bootstrap = a.bootstrap;
      o.instance_id = id;
      o.timing = a.timing;
      try {
        write_csv_row(out, evaluate(inst, alg, o));
      } catch (const std::exception& e) {
        std::cerr << "error: " << id << "/" << alg.name << ": " << e.what() << "\n";
        write_csv_failure(out, id, alg, a.samples, a.seed);
        failed = true;
      }
    }
  }
  return failed ? kExitValidation : EXIT_SUCCESS;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orientation under stochastic explorable uncertainty: generators, evaluation and checks"};
  app.require_subcommand(1);

  GenArgs gen;
  std::string gen_name, gen_out;
  auto* g = app.add_subcommand("generate", "Write a generated instance as JSON");
  g->add_option("name", gen_name, "Generator name")->required();
  g->add_option("-o,--output", gen_out, "Output file (stdout when omitted)");
  add_gen_options(g, gen);

  RunArgs run;
  auto* r = app.add_subcommand("run", "Evaluate algorithms against the offline optimum and print CSV");
  r->add_option("--instance", run.instances, "Instance JSON file (repeatable)");
  r->add_option("--gen", run.gen, "Generator name instead of a file");
  r->add_option("--gen-arg", run.gen_args, "Generator argument key=value (repeatable)");
  r->add_option("--instance-id", run.instance_id, "instance_id column value");
  r->add_option("-a,--algorithm", run.algorithms,
                "threshold, threshold-sampled, bestvc, baseline, leaves-first, opt or vc (repeatable)");
  r->add_option("--stage1", run.stage1, "Stage-one ids for the vc algorithm (repeatable)");
  r->add_option("--alpha", run.alpha, "1 for exact covers, 2 for the local-ratio cover");
  r->add_option("--d", run.d, "Threshold, a number or 'auto'");
  r->add_option("--eps", run.eps, "Sampling accuracy epsilon");
  r->add_option("--delta", run.delta, "Sampling failure probability delta");
  r->add_option("--samples", run.samples, "Realizations per evaluation");
  r->add_option("--seed", run.seed, "Master seed");
  r->add_option("--threads", run.threads, "Worker threads");
  r->add_option("--bootstrap", run.bootstrap, "Bootstrap resamples for the ratio interval");
  r->add_option("--format", run.format, "Output format")->check(CLI::IsMember({"csv"}));
  r->add_option("-o,--output", run.output, "Output file (stdout when omitted)");
  r->add_flag("--timing", run.timing, "Fill wall_ms (makes output time dependent)");

  std::string suite;
  acceptance::Options check_opts;
  auto* c = app.add_subcommand("check", "Run an acceptance suite");
  c->add_option("suite", suite, "all, oracles, thm4, lower-bounds, tightness, bestvc, sampling, split or hypergraph")
      ->required()
      ->check(CLI::IsMember(acceptance::suite_names()));
  c->add_option("--seed", check_opts.seed, "Master seed");
  c->add_option("--threads", check_opts.threads, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*g) {
      const auto doc = generate(gen_name, gen);
      if (gen_out.empty()) {
        std::cout << doc.dump(2) << "\n";
      } else {
        std::ofstream out(gen_out);
        if (!out) throw ValidationError("cannot write '" + gen_out + "'");
        out << doc.dump(2) << "\n";
      }
      return EXIT_SUCCESS;
    }
    if (*r) return cmd_run(run);
    if (*c) return acceptance::run_suite(suite, check_opts, std::cout) ? EXIT_SUCCESS : kExitAcceptance;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}
