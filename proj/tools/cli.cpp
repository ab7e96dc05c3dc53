#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "glauber/corpus.hpp"
#include "glauber/dynamics.hpp"
#include "glauber/errors.hpp"
#include "glauber/json_io.hpp"
#include "glauber/verification.hpp"
#include "glauber/weight_model.hpp"
#include "glauber/width.hpp"

namespace glauber::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ModelError(what + " is not valid JSON: " + e.what());
  }
}

struct ModelFlags {
  std::string model;
  std::string family;
  double q = 0, mu = 0, x = 0, y = 0;
  std::vector<double> v, xs;
  // Attached to several subcommands; each flag is set if any of its copies was parsed.
  std::map<std::string, std::vector<CLI::Option*>> opts;

  void attach(CLI::App& app) {
    app.add_option("--model", model, "Model as inline JSON or a path to a JSON file");
    app.add_option("--family", family, "Model family: rc, tutte, r2, multi_tutte, upoly, interlace");
    opts["q"].push_back(app.add_option("--q", q));
    opts["mu"].push_back(app.add_option("--mu", mu));
    opts["x"].push_back(app.add_option("--x", x, "Scalar x (tutte, interlace)"));
    opts["y"].push_back(app.add_option("--y", y));
    opts["v"].push_back(app.add_option("--v", v, "Per-edge weights (multi_tutte)")->delimiter(','));
    opts["xs"].push_back(
        app.add_option("--xs", xs, "Per-component-size weights x_1, x_2, ... (upoly)")->delimiter(','));
  }

  bool has(const std::string& name) const {
    const auto& list = opts.at(name);
    return std::any_of(list.begin(), list.end(), [](const CLI::Option* o) { return o->count() > 0; });
  }

  bool given() const { return !model.empty() || !family.empty(); }

  WeightModel resolve() const {
    if (!model.empty() && !family.empty()) throw UsageError("--model and --family are mutually exclusive");
    if (!model.empty()) {
      const bool inline_json = model.find('{') != std::string::npos;
      return model_from_json(parse_json_text(inline_json ? model : read_file(model), "--model"));
    }
    if (family.empty()) throw UsageError("a model is required (--model or --family)");
    if (has("x") && has("xs")) throw UsageError("--x and --xs are mutually exclusive");
    json spec{{"family", family}};
    if (has("q")) spec["q"] = q;
    if (has("mu")) spec["mu"] = mu;
    if (has("x")) spec["x"] = x;
    if (has("xs")) spec["x"] = xs;
    if (has("y")) spec["y"] = y;
    if (has("v")) spec["v"] = v;
    return model_from_json(spec);
  }
};

Graph open_graph(const std::string& path) {
  if (!fs::is_regular_file(path)) throw UsageError("cannot open graph file " + path);
  return load_graph(path);
}

Ordering resolve_ordering(const Graph& g, Kind kind, const std::string& how) {
  if (how == "exact") return optimal_ordering(g, kind);
  if (how == "greedy") return greedy_ordering(g, kind);
  return load_ordering(g, kind, how);
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

void write_curve(const std::string& path, const std::vector<double>& curve) {
  std::ofstream csv(path);
  if (!csv) throw UsageError("cannot write " + path);
  csv << "t,tv\n";
  csv.precision(17);
  for (std::size_t t = 0; t < curve.size(); ++t) csv << t << ',' << curve[t] << '\n';
}

// ---------------------------------------------------------------------------
// verify-all
// ---------------------------------------------------------------------------

struct Instance {
  std::string name;
  Graph graph;
  std::vector<WeightModel> models;
};

std::vector<WeightModel> models_from(const json& spec, const Graph& g) {
  if (spec.is_string() && spec.get<std::string>() == "default") return default_model_matrix(g);
  if (!spec.is_array()) throw ModelError("models must be a list of model objects or \"default\"");
  std::vector<WeightModel> out;
  for (const auto& m : spec) out.push_back(model_from_json(m));
  return out;
}

std::vector<Graph> family_graphs(const std::string& family, std::size_t n) {
  if (family == "path") return {path_graph(n)};
  if (family == "cycle") return {cycle_graph(n)};
  if (family == "star") return {star_graph(n)};
  if (family == "complete") return {complete_graph(n)};
  if (family == "all_connected") return connected_labeled_graphs(n);
  throw UsageError("unknown graph family \"" + family + "\" in manifest");
}

std::vector<Instance> load_manifest(const std::string& path, const std::optional<json>& models_override) {
  const json manifest = [&] {
    try {
      return json::parse(read_file(path));
    } catch (const json::parse_error& e) {
      throw ParseError(ParseError::Reason::Malformed, 1, "corpus manifest is not valid JSON: " + std::string(e.what()));
    }
  }();
  if (!manifest.is_array()) throw ParseError(ParseError::Reason::Malformed, 1, "corpus manifest must be a JSON list");
  const fs::path base = fs::path(path).parent_path();
  std::vector<Instance> out;
  for (const auto& entry : manifest) {
    if (!entry.is_object()) throw ParseError(ParseError::Reason::Malformed, 1, "manifest entries must be objects");
    json models = models_override.value_or(entry.value("models", json("default")));
    if (entry.contains("graph")) {
      const fs::path gp = base / entry.at("graph").get<std::string>();
      Graph g = open_graph(gp.string());
      auto ms = models_from(models, g);
      out.push_back({entry.value("name", gp.stem().string()), std::move(g), std::move(ms)});
    } else if (entry.contains("family")) {
      const auto fam = entry.at("family").get<std::string>();
      const auto n = entry.at("n").get<std::size_t>();
      std::size_t index = 0;
      for (auto& g : family_graphs(fam, n)) {
        auto ms = models_from(models, g);
        std::string name = entry.value("name", fam + std::to_string(n));
        if (fam == "all_connected") name += "_" + std::to_string(index++);
        out.push_back({std::move(name), std::move(g), std::move(ms)});
      }
    } else {
      throw ParseError(ParseError::Reason::Malformed, 1, "manifest entry needs \"graph\" or \"family\"");
    }
  }
  return out;
}

struct VerifyOptions {
  double epsilon = 0.01;
  unsigned mult_max_n = 6;
  unsigned max_ground = 10;
};

json verify_instance(const Instance& inst, const WeightModel& model, const VerifyOptions& opt, json& failures,
                     std::size_t& checks, std::size_t& skipped, std::vector<double>& curve) {
  const Graph& g = inst.graph;
  json record{{"graph", inst.name}, {"n", g.n()}, {"m", g.m()}, {"model", to_json(model)}};
  json results = json::object();
  bool pass = true;
  auto note = [&](const std::string& check, bool ok, const json& detail) {
    ++checks;
    results[check] = detail;
    if (!ok) {
      pass = false;
      failures.push_back({{"graph", inst.name}, {"model", to_json(model)}, {"check", check}, {"detail", detail}});
    }
  };
  auto skip = [&](const std::string& check, const std::string& reason) {
    ++skipped;
    results[check] = {{"skipped", reason}};
  };

  if (g.n() <= opt.mult_max_n) {
    const auto mult = check_multiplicativity(model, g, model.lambda());
    note("multiplicativity", mult.pass, to_json(mult));
  } else {
    skip("multiplicativity", "n > " + std::to_string(opt.mult_max_n));
  }

  const std::size_t ground = g.universe(model.kind());
  if (ground > opt.max_ground || ground == 0) {
    const std::string why = ground == 0 ? "empty ground set" : "ground set larger than " + std::to_string(opt.max_ground);
    for (const char* c : {"lemma", "congestion", "sinclair", "mixing_bound"}) skip(c, why);
  } else {
    const Ordering o = optimal_ordering(g, model.kind());
    record["ordering"] = to_json(o);
    const auto lemma = lemma_ratio_max(model, g, o, opt.max_ground);
    note("lemma", lemma.pass, to_json(lemma));
    const auto cong = congestion(model, g, o, opt.max_ground);
    note("congestion", cong.pass, to_json(cong));
    const auto mix = exact_mixing_time(model, g, opt.epsilon, cong, opt.max_ground);
    note("sinclair", mix.pass, to_json(mix));
    curve = mix.tv_curve;
    // Uses the congestion bound in place of the exact congestion.
    const double bound = cong.bound * (std::log(1.0 / mix.pi_min) + std::log(1.0 / opt.epsilon));
    note("mixing_bound", static_cast<double>(mix.tau) <= bound, {{"tau", mix.tau}, {"bound", bound}});
  }
  record["checks"] = std::move(results);
  record["pass"] = pass;
  return record;
}

// ---------------------------------------------------------------------------

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Glauber dynamics for subset-expansion graph polynomials"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "Cap on worker threads (0 = runtime default)");

  std::string graph_path;
  ModelFlags mf;

  auto* sample = app.add_subcommand("sample", "Run the single-flip chain and write a trace");
  std::size_t steps = 0, thin = 1;
  std::uint64_t seed = 0;
  std::size_t burn_in = 0;
  std::string out_path, initial_hex;
  sample->add_option("--graph", graph_path)->required();
  mf.attach(*sample);
  sample->add_option("--steps", steps)->required();
  sample->add_option("--seed", seed);
  auto* burn_opt = sample->add_option("--burn-in", burn_in);
  sample->add_option("--thin", thin);
  sample->add_option("--out", out_path, "JSON-lines trace file");
  sample->add_option("--initial", initial_hex, "Initial subset as a hex bitmask (default: empty)");

  auto* exact = app.add_subcommand("exact", "Exact log partition function and stationary distribution");
  exact->add_option("--graph", graph_path)->required();
  mf.attach(*exact);

  auto* width = app.add_subcommand("width", "Linear-width or vertex-separation orderings");
  std::string kind_name = "edge", ordering_how = "exact";
  width->add_option("--graph", graph_path)->required();
  width->add_option("--kind", kind_name)->check(CLI::IsMember({"edge", "vertex"}));
  width->add_option("--ordering", ordering_how, "exact, greedy, or an ordering file");

  auto* cong = app.add_subcommand("congestion", "Exact canonical-path congestion and lemma ratio");
  cong->add_option("--graph", graph_path)->required();
  mf.attach(*cong);
  cong->add_option("--ordering", ordering_how, "exact, greedy, or an ordering file");

  auto* mixing = app.add_subcommand("mixing", "Exact mixing time against the Sinclair bound");
  double epsilon = 0.01;
  std::string plot_path;
  mixing->add_option("--graph", graph_path)->required();
  mf.attach(*mixing);
  mixing->add_option("--ordering", ordering_how, "exact, greedy, or an ordering file");
  mixing->add_option("--epsilon", epsilon);
  mixing->add_option("--plot-data", plot_path, "CSV file for the (t, TV) decay curve");

  auto* mult = app.add_subcommand("check-mult", "Exhaustive lambda-multiplicativity check");
  double lambda = 0;
  unsigned max_vertices = 12;
  mult->add_option("--graph", graph_path)->required();
  mf.attach(*mult);
  auto* lambda_opt = mult->add_option("--lambda", lambda, "Override the model's lambda");
  mult->add_option("--max-vertices", max_vertices);

  auto* verify = app.add_subcommand("verify-all", "Run every check over a graph or corpus");
  std::string corpus_path, models_spec;
  VerifyOptions vopt;
  verify->add_option("--graph", graph_path);
  verify->add_option("--corpus", corpus_path, "JSON manifest of graphs and models");
  verify->add_option("--models", models_spec, "JSON file with a list of models, or \"default\"");
  verify->add_option("--epsilon", vopt.epsilon);
  verify->add_option("--mult-max-n", vopt.mult_max_n, "Skip multiplicativity above this vertex count");
  auto* plot_opt = verify->add_option("--plot-data", plot_path, "CSV of (instance, t, TV) decay curves");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif

  if (sample->parsed()) {
    Graph g = open_graph(graph_path);
    WeightModel model = mf.resolve();
    ChainConfig config{model, g, seed, std::nullopt, steps, std::nullopt, thin};
    if (burn_opt->count()) config.burn_in = burn_in;
    if (!initial_hex.empty()) config.initial = Subset::from_hex(model.kind(), g.universe(model.kind()), initial_hex);
    config.validate();

    const std::size_t universe = g.universe(model.kind());
    std::vector<std::uint64_t> counts;
    if (universe <= 20) counts.assign(std::size_t{1} << universe, 0);
    std::ofstream trace;
    if (!out_path.empty()) {
      trace.open(out_path);
      if (!trace) throw UsageError("cannot write " + out_path);
    }
    const auto summary = run_streaming(config, [&](std::size_t t, const Subset& s, double lw) {
      if (trace.is_open()) trace << sample_record(t, s, lw).dump() << '\n';
      if (!counts.empty()) ++counts[s.to_mask()];
    });

    json result{{"acceptance_rate", summary.acceptance_rate},
                {"final", to_json(summary.final)},
                {"steps", steps},
                {"burn_in", config.effective_burn_in()},
                {"thinning", thin},
                {"seed", seed},
                {"retained", summary.retained},
                {"model", to_json(model)}};
    if (!counts.empty() && summary.retained > 0) {
      const auto pi = stationary_distribution(model, g, 20);
      std::vector<double> freq(counts.size());
      for (std::size_t i = 0; i < counts.size(); ++i)
        freq[i] = static_cast<double>(counts[i]) / static_cast<double>(summary.retained);
      // Renormalise to absorb rounding in the division above.
      double total = 0;
      for (double f : freq) total += f;
      for (double& f : freq) f /= total;
      result["empirical_tv"] = tv_distance(freq, pi);
    }
    emit(out, result);
    return kOk;
  }

  if (exact->parsed()) {
    Graph g = open_graph(graph_path);
    WeightModel model = mf.resolve();
    model.check_fits(g);
    const std::size_t universe = g.universe(model.kind());
    json result{{"model", to_json(model)},
                {"log_partition", exact_partition_log(model, g)},
                {"ground_size", universe}};
    if (universe <= 20) result["pi"] = stationary_distribution(model, g, 20);
    emit(out, result);
    return kOk;
  }

  if (width->parsed()) {
    Graph g = open_graph(graph_path);
    const Kind kind = kind_name == "edge" ? Kind::Edge : Kind::Vertex;
    emit(out, to_json(resolve_ordering(g, kind, ordering_how)));
    return kOk;
  }

  if (cong->parsed()) {
    Graph g = open_graph(graph_path);
    WeightModel model = mf.resolve();
    model.check_fits(g);
    const Ordering o = resolve_ordering(g, model.kind(), ordering_how);
    const auto report = congestion(model, g, o);
    const auto lemma = lemma_ratio_max(model, g, o);
    const bool ok = report.pass && lemma.pass;
    emit(out, {{"model", to_json(model)},
               {"ordering", to_json(o)},
               {"congestion", to_json(report)},
               {"lemma", to_json(lemma)},
               {"pass", ok}});
    return ok ? kOk : kVerificationFailed;
  }

  if (mixing->parsed()) {
    Graph g = open_graph(graph_path);
    WeightModel model = mf.resolve();
    model.check_fits(g);
    const Ordering o = resolve_ordering(g, model.kind(), ordering_how);
    const auto report = congestion(model, g, o);
    const auto mix = exact_mixing_time(model, g, epsilon, report);
    if (!plot_path.empty()) write_curve(plot_path, mix.tv_curve);
    emit(out, {{"model", to_json(model)},
               {"ordering", to_json(o)},
               {"congestion", to_json(report)},
               {"mixing", to_json(mix)},
               {"pass", mix.pass}});
    return mix.pass ? kOk : kVerificationFailed;
  }

  if (mult->parsed()) {
    Graph g = open_graph(graph_path);
    WeightModel model = mf.resolve();
    MultiplicativityOptions options;
    options.max_vertices = max_vertices;
    const double lam = lambda_opt->count() ? lambda : model.lambda();
    const auto report = check_multiplicativity(model, g, lam, options);
    emit(out, {{"model", to_json(model)}, {"multiplicativity", to_json(report)}, {"pass", report.pass}});
    return report.pass ? kOk : kVerificationFailed;
  }

  // verify-all
  if (!graph_path.empty() && !corpus_path.empty()) throw UsageError("--graph and --corpus are mutually exclusive");
  if (graph_path.empty() && corpus_path.empty()) throw UsageError("verify-all needs --graph or --corpus");
  if (mf.given()) throw UsageError("verify-all takes models from --models or the manifest");
  std::optional<json> models_override;
  if (!models_spec.empty())
    models_override = models_spec == "default" ? json("default") : parse_json_text(read_file(models_spec), "--models");

  std::vector<Instance> instances;
  if (!graph_path.empty()) {
    Graph g = open_graph(graph_path);
    auto ms = models_from(models_override.value_or(json("default")), g);
    instances.push_back({fs::path(graph_path).stem().string(), std::move(g), std::move(ms)});
  } else {
    instances = load_manifest(corpus_path, models_override);
  }

  const auto start = std::chrono::steady_clock::now();
  json records = json::array(), failures = json::array();
  std::size_t checks = 0, skipped = 0, pairs = 0;
  std::ofstream curves;
  if (plot_opt->count()) {
    curves.open(plot_path);
    if (!curves) throw UsageError("cannot write " + plot_path);
    curves << "instance,t,tv\n";
  }
  for (const auto& inst : instances) {
    for (const auto& model : inst.models) {
      model.check_fits(inst.graph);
      std::vector<double> curve;
      records.push_back(verify_instance(inst, model, vopt, failures, checks, skipped, curve));
      if (curves.is_open())
        for (std::size_t t = 0; t < curve.size(); ++t) curves << pairs << ',' << t << ',' << curve[t] << '\n';
      ++pairs;
    }
  }
  if (pairs == 0) err << "warning: corpus is empty; no checks were run\n";
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  err << "verify-all: " << pairs << " instances, " << checks << " checks, " << failures.size() << " failed, "
      << skipped << " skipped in " << seconds << " s\n";
  const bool ok = failures.empty();
  emit(out, {{"instances", records},
             {"failures", failures},
             {"summary", {{"instances", pairs}, {"checks", checks}, {"failed", failures.size()}, {"skipped", skipped}}},
             {"pass", ok}});
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const ModelError& e) {
    err << "invalid model: " << e.what() << '\n';
    return kInvalidModel;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const json::exception& e) {
    err << "invalid input: " << e.what() << '\n';
    return kParseError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace glauber::cli
