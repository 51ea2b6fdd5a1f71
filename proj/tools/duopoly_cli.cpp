// Command-line front end for the duopoly library. Talks to the core only
// through the public C API. Exit codes: 0 success, 1 validation/parse
// error, 2 self-check failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "duopoly.h"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitSelfCheck = 2;

// Thrown for CLI-level validation problems; rendered as "error: ..." and
// exit code 1.
struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string g12(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

[[noreturn]] void raise_api_error() {
  throw CliError(duop_last_error());
}

void check(duop_status status) {
  if (status != DUOP_OK) raise_api_error();
}

struct NetworkHandle {
  duop_network* ptr = nullptr;
  NetworkHandle() = default;
  NetworkHandle(const NetworkHandle&) = delete;
  NetworkHandle& operator=(const NetworkHandle&) = delete;
  NetworkHandle(NetworkHandle&& other) noexcept : ptr(other.ptr) {
    other.ptr = nullptr;
  }
  NetworkHandle& operator=(NetworkHandle&& other) noexcept {
    if (this != &other) {
      duop_network_free(ptr);
      ptr = other.ptr;
      other.ptr = nullptr;
    }
    return *this;
  }
  ~NetworkHandle() { duop_network_free(ptr); }
  int n() const { return duop_network_size(ptr); }
};

// Scenario options shared by every computing subcommand. A scenario file is
// a flat JSON object with keys named after the long flags; explicit flags
// override file values.
struct ScenarioCli {
  std::string scenario_file;
  std::string graph_path;
  int star_n = 0;
  std::vector<int> balanced;  // n d
  std::vector<int> kstar;     // n k
  bool normalize = false;
  std::string y0_spec = "zeros";
  duop_params params{std::nan(""), std::nan(""), 1.0, 1.0, 1.0, 1.0,
                     0.0,          0.0};
  bool budget_given = false;
  bool star_given = false;

  CLI::Option* opt_graph = nullptr;
  CLI::Option* opt_star = nullptr;
  CLI::Option* opt_balanced = nullptr;
  CLI::Option* opt_kstar = nullptr;
  CLI::Option* opt_normalize = nullptr;
  CLI::Option* opt_y0 = nullptr;
  CLI::Option* opt_alpha = nullptr;
  CLI::Option* opt_delta = nullptr;
  CLI::Option* opt_qa = nullptr;
  CLI::Option* opt_qb = nullptr;
  CLI::Option* opt_cs = nullptr;
  CLI::Option* opt_cq = nullptr;
  CLI::Option* opt_budget_a = nullptr;
  CLI::Option* opt_budget_b = nullptr;

  void attach(CLI::App* cmd) {
    cmd->add_option("--scenario", scenario_file,
                    "JSON scenario file; flags override its values");
    opt_graph = cmd->add_option("--graph", graph_path, "graph file to load");
    opt_star = cmd->add_option("--star", star_n, "star graph with n agents");
    opt_balanced =
        cmd->add_option("--balanced", balanced,
                        "balanced ring with n agents and degree d")
            ->expected(2);
    opt_kstar = cmd->add_option("--kstar", kstar,
                                "k-star graph with n agents and k centers")
                    ->expected(2);
    opt_normalize = cmd->add_flag(
        "--normalize", normalize, "rescale rows of a loaded graph to sum 1");
    opt_y0 = cmd->add_option("--y0", y0_spec,
                             "initial state file or 'zeros'");
    opt_alpha = cmd->add_option("--alpha", params.alpha,
                                "isolation payoff weight, in [1/2, 1]");
    opt_delta = cmd->add_option("--delta", params.delta,
                                "discount factor, in [0, 1)");
    opt_qa = cmd->add_option("--qa", params.qa, "quality of product a");
    opt_qb = cmd->add_option("--qb", params.qb, "quality of product b");
    opt_cs = cmd->add_option("--cs", params.cs, "unit cost of seeding");
    opt_cq = cmd->add_option("--cq", params.cq,
                             "unit cost of quality improvement");
    opt_budget_a =
        cmd->add_option("--budget-a", params.budget_a, "budget of firm a");
    opt_budget_b =
        cmd->add_option("--budget-b", params.budget_b, "budget of firm b");
  }

  void merge_scenario_file() {
    if (scenario_file.empty()) return;
    std::ifstream in(scenario_file);
    if (!in) throw CliError("cannot open scenario file '" + scenario_file + "'");
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& err) {
      throw CliError("scenario file: " + std::string(err.what()));
    }
    if (!doc.is_object()) throw CliError("scenario file must hold an object");

    const bool cli_graph_source = opt_graph->count() > 0 ||
                                  opt_star->count() > 0 ||
                                  opt_balanced->count() > 0 ||
                                  opt_kstar->count() > 0;
    for (const auto& [key, value] : doc.items()) {
      try {
        if (key == "graph") {
          if (!cli_graph_source) graph_path = value.get<std::string>();
        } else if (key == "star") {
          if (!cli_graph_source) star_n = value.get<int>();
        } else if (key == "balanced") {
          if (!cli_graph_source) balanced = value.get<std::vector<int>>();
        } else if (key == "kstar") {
          if (!cli_graph_source) kstar = value.get<std::vector<int>>();
        } else if (key == "normalize") {
          if (opt_normalize->count() == 0) normalize = value.get<bool>();
        } else if (key == "y0") {
          if (opt_y0->count() == 0) y0_spec = value.get<std::string>();
        } else if (key == "alpha") {
          if (opt_alpha->count() == 0) params.alpha = value.get<double>();
        } else if (key == "delta") {
          if (opt_delta->count() == 0) params.delta = value.get<double>();
        } else if (key == "qa") {
          if (opt_qa->count() == 0) params.qa = value.get<double>();
        } else if (key == "qb") {
          if (opt_qb->count() == 0) params.qb = value.get<double>();
        } else if (key == "cs") {
          if (opt_cs->count() == 0) params.cs = value.get<double>();
        } else if (key == "cq") {
          if (opt_cq->count() == 0) params.cq = value.get<double>();
        } else if (key == "budget-a") {
          if (opt_budget_a->count() == 0) {
            params.budget_a = value.get<double>();
          }
          budget_given = true;
        } else if (key == "budget-b") {
          if (opt_budget_b->count() == 0) {
            params.budget_b = value.get<double>();
          }
        } else {
          throw CliError("scenario file: unknown key '" + key + "'");
        }
      } catch (const nlohmann::json::exception& err) {
        throw CliError("scenario file key '" + key + "': " + err.what());
      }
    }
    if (doc.contains("balanced") && balanced.size() != 2 &&
        !cli_graph_source) {
      throw CliError("scenario file: 'balanced' needs [n, d]");
    }
    if (doc.contains("kstar") && kstar.size() != 2 && !cli_graph_source) {
      throw CliError("scenario file: 'kstar' needs [n, k]");
    }
  }

  // Call after parsing + merging: checks required fields, builds handles.
  void finalize() {
    merge_scenario_file();
    budget_given = budget_given || opt_budget_a->count() > 0;
    star_given = opt_star->count() > 0 || star_n != 0;
    int sources = 0;
    if (!graph_path.empty()) ++sources;
    if (star_given) ++sources;
    if (!balanced.empty()) ++sources;
    if (!kstar.empty()) ++sources;
    if (sources != 1) {
      throw CliError(
          "exactly one graph source is required "
          "(--graph, --star, --balanced or --kstar)");
    }
    if (std::isnan(params.alpha)) throw CliError("--alpha is required");
    if (std::isnan(params.delta)) throw CliError("--delta is required");
    check(duop_params_validate(&params));
  }

  NetworkHandle build_network() const {
    NetworkHandle net;
    if (!graph_path.empty()) {
      check(duop_network_read(graph_path.c_str(), normalize ? 1 : 0,
                              &net.ptr));
    } else if (star_given) {
      check(duop_network_star(star_n, &net.ptr));
    } else if (!balanced.empty()) {
      check(duop_network_balanced_ring(balanced[0], balanced[1], &net.ptr));
    } else {
      check(duop_network_k_star(kstar[0], kstar[1], &net.ptr));
    }
    return net;
  }

  // Returns the y0 buffer, or std::nullopt for the all-zero state.
  std::optional<std::vector<double>> load_y0(int n) const {
    if (y0_spec == "zeros") return std::nullopt;
    std::vector<double> y0(static_cast<std::size_t>(n));
    check(duop_read_initial_state(y0_spec.c_str(), n, y0.data()));
    return y0;
  }
};

const double* data_or_null(const std::optional<std::vector<double>>& y0) {
  return y0 ? y0->data() : nullptr;
}

struct OutputOptions {
  std::string path;  // empty = stdout
  std::string format;

  void attach(CLI::App* cmd, const std::string& default_format) {
    format = default_format;
    cmd->add_option("--out", path, "output file (default stdout)");
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
  }

  void require_format(const std::string& expected) const {
    if (format != expected) {
      throw CliError("this subcommand only supports --format " + expected);
    }
  }

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CliError("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw CliError("failed writing '" + path + "'");
  }
};

// Minimal deterministic JSON emitter; all numbers go through %.12g.
class JsonOut {
 public:
  void begin_object() { open('{'); }
  void end_object() { close('}'); }
  void begin_array() { open('['); }
  void end_array() { close(']'); }

  void key(const std::string& name) {
    comma();
    out_ << '"' << name << "\":";
    pending_value_ = true;
  }
  void value(double v) { literal(g12(v)); }
  void value(int v) { literal(std::to_string(v)); }
  void value(const std::string& v) { literal('"' + v + '"'); }
  void value(const char* v) { literal('"' + std::string(v) + '"'); }
  void value(bool v) { literal(v ? "true" : "false"); }

  template <typename T>
  void kv(const std::string& name, T v) {
    key(name);
    value(v);
  }

  std::string str() const { return out_.str() + "\n"; }

 private:
  void comma() {
    if (needs_comma_) out_ << ',';
    needs_comma_ = false;
  }
  void open(char c) {
    comma();
    out_ << c;
    needs_comma_ = false;
    pending_value_ = false;
  }
  void close(char c) {
    out_ << c;
    needs_comma_ = true;
  }
  void literal(const std::string& text) {
    if (!pending_value_) comma();
    pending_value_ = false;
    out_ << text;
    needs_comma_ = true;
  }

  std::ostringstream out_;
  bool needs_comma_ = false;
  bool pending_value_ = false;
};

void emit_allocation_object(JsonOut& json, const std::vector<double>& seeds,
                            const duop_allocation& alloc) {
  json.begin_object();
  json.key("seeds");
  json.begin_array();
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (seeds[i] > 0.0) {
      json.begin_object();
      json.kv("agent", static_cast<int>(i) + 1);
      json.kv("amount", seeds[i]);
      json.end_object();
    }
  }
  json.end_array();
  json.kv("seed_total", alloc.seed_total);
  json.kv("dq", alloc.dq);
  json.kv("spend_seeding", alloc.spend_seeding);
  json.kv("spend_quality", alloc.spend_quality);
  json.end_object();
}

/* --- subcommand handlers ---------------------------------------------- */

struct SimulateOptions {
  ScenarioCli scenario;
  OutputOptions output;
  int horizon = 0;
};

int run_simulate(SimulateOptions& opt) {
  opt.output.require_format("csv");
  opt.scenario.finalize();
  const NetworkHandle net = opt.scenario.build_network();
  const int n = net.n();
  const auto y0 = opt.scenario.load_y0(n);

  std::vector<double> traj(static_cast<std::size_t>(opt.horizon + 1) * n);
  check(duop_simulate(net.ptr, &opt.scenario.params, data_or_null(y0),
                      opt.horizon, traj.data()));

  std::ostringstream csv;
  csv << "t";
  for (int i = 1; i <= n; ++i) csv << ",y_" << i;
  csv << ",x_sum_a,x_sum_b\n";
  for (int t = 0; t <= opt.horizon; ++t) {
    const double* row = traj.data() + static_cast<std::size_t>(t) * n;
    double sum_a = 0.0;
    double sum_b = 0.0;
    csv << t;
    for (int i = 0; i < n; ++i) {
      csv << ',' << g12(row[i]);
      sum_a += 0.5 + row[i];
      sum_b += 0.5 - row[i];
    }
    csv << ',' << g12(sum_a) << ',' << g12(sum_b) << '\n';
  }
  opt.output.write(csv.str());
  return kExitOk;
}

struct CentralityOptions {
  ScenarioCli scenario;
  OutputOptions output;
};

int run_centrality(CentralityOptions& opt) {
  opt.output.require_format("csv");
  opt.scenario.finalize();
  const NetworkHandle net = opt.scenario.build_network();
  const int n = net.n();

  std::vector<double> v(static_cast<std::size_t>(n));
  duop_centrality_stats stats{};
  check(duop_centrality(net.ptr, &opt.scenario.params, v.data(), &stats));

  std::ostringstream csv;
  csv << "agent,v\n";
  for (int i = 0; i < n; ++i) csv << (i + 1) << ',' << g12(v[i]) << '\n';
  csv << "# v_bar=" << g12(stats.v_bar) << " v_max=" << g12(stats.v_max)
      << " sum=" << g12(stats.sum)
      << " sum_identity=" << g12(stats.sum_identity) << '\n';
  opt.output.write(csv.str());
  return kExitOk;
}

struct ReportOptions {
  ScenarioCli scenario;
  OutputOptions output;
};

// Shared by allocate / equilibrium / capacity, which differ only in the
// body of the JSON report.
struct ReportContext {
  NetworkHandle net;
  int n = 0;
  std::optional<std::vector<double>> y0;
  double lambda = 0.0;
  double vc_a = 0.0;
  double vc_b = 0.0;
  duop_regime regime = DUOP_REGIME_GRAPH_DEPENDENT;
};

ReportContext make_report_context(ReportOptions& opt) {
  opt.scenario.finalize();
  ReportContext ctx;
  ctx.net = opt.scenario.build_network();
  ctx.n = ctx.net.n();
  ctx.y0 = opt.scenario.load_y0(ctx.n);
  check(duop_lambda(&opt.scenario.params, ctx.n, &ctx.lambda));
  check(duop_thresholds(&opt.scenario.params, ctx.n, &ctx.vc_a, &ctx.vc_b));
  check(duop_classify_regime(&opt.scenario.params, ctx.n, &ctx.regime));
  return ctx;
}

void emit_report_header(JsonOut& json, const ReportContext& ctx) {
  json.kv("n", ctx.n);
  json.kv("lambda", ctx.lambda);
  json.key("thresholds");
  json.begin_object();
  json.kv("firm_a", ctx.vc_a);
  json.kv("firm_b", ctx.vc_b);
  json.end_object();
  json.kv("regime", duop_regime_name(ctx.regime));
}

int run_allocate(ReportOptions& opt) {
  opt.output.require_format("json");
  ReportContext ctx = make_report_context(opt);
  const duop_params& params = opt.scenario.params;

  std::vector<double> seeds_a(ctx.n), seeds_b(ctx.n);
  duop_allocation alloc_a{}, alloc_b{};
  check(duop_optimal_allocation(ctx.net.ptr, &params, data_or_null(ctx.y0),
                                DUOP_FIRM_A, seeds_a.data(), &alloc_a));
  check(duop_optimal_allocation(ctx.net.ptr, &params, data_or_null(ctx.y0),
                                DUOP_FIRM_B, seeds_b.data(), &alloc_b));
  double capacity_a = 0.0, capacity_b = 0.0;
  check(duop_seeding_capacity(ctx.net.ptr, &params, data_or_null(ctx.y0),
                              DUOP_FIRM_A, &capacity_a, nullptr));
  check(duop_seeding_capacity(ctx.net.ptr, &params, data_or_null(ctx.y0),
                              DUOP_FIRM_B, &capacity_b, nullptr));

  JsonOut json;
  json.begin_object();
  emit_report_header(json, ctx);
  json.key("firm_a");
  emit_allocation_object(json, seeds_a, alloc_a);
  json.key("firm_b");
  emit_allocation_object(json, seeds_b, alloc_b);
  json.key("capacities");
  json.begin_object();
  json.kv("firm_a", capacity_a);
  json.kv("firm_b", capacity_b);
  json.end_object();
  json.end_object();
  opt.output.write(json.str());
  return kExitOk;
}

int run_equilibrium(ReportOptions& opt) {
  opt.output.require_format("json");
  ReportContext ctx = make_report_context(opt);
  const duop_params& params = opt.scenario.params;

  std::vector<double> seeds_a(ctx.n), seeds_b(ctx.n), joint(ctx.n);
  duop_allocation alloc_a{}, alloc_b{};
  int32_t clamped = 0;
  check(duop_equilibrium(ctx.net.ptr, &params, data_or_null(ctx.y0),
                         seeds_a.data(), &alloc_a, seeds_b.data(), &alloc_b,
                         joint.data(), &clamped));

  JsonOut json;
  json.begin_object();
  emit_report_header(json, ctx);
  json.key("firm_a");
  emit_allocation_object(json, seeds_a, alloc_a);
  json.key("firm_b");
  emit_allocation_object(json, seeds_b, alloc_b);
  json.key("joint_y0");
  json.begin_array();
  for (double y : joint) json.value(y);
  json.end_array();
  json.kv("clamped", static_cast<int>(clamped));
  json.end_object();
  opt.output.write(json.str());
  return kExitOk;
}

int run_capacity(ReportOptions& opt) {
  opt.output.require_format("json");
  ReportContext ctx = make_report_context(opt);
  const duop_params& params = opt.scenario.params;

  JsonOut json;
  json.begin_object();
  emit_report_header(json, ctx);
  for (duop_firm firm : {DUOP_FIRM_A, DUOP_FIRM_B}) {
    double capacity = 0.0;
    std::vector<int32_t> mask(static_cast<std::size_t>(ctx.n));
    check(duop_seeding_capacity(ctx.net.ptr, &params, data_or_null(ctx.y0),
                                firm, &capacity, mask.data()));
    json.key(firm == DUOP_FIRM_A ? "firm_a" : "firm_b");
    json.begin_object();
    json.kv("capacity", capacity);
    json.key("seeded_agents");
    json.begin_array();
    for (int i = 0; i < ctx.n; ++i) {
      if (mask[static_cast<std::size_t>(i)] != 0) json.value(i + 1);
    }
    json.end_array();
    json.end_object();
  }
  json.end_object();
  opt.output.write(json.str());
  return kExitOk;
}

struct SweepOptions {
  ScenarioCli scenario;
  OutputOptions output;
  std::string parameter;
  std::vector<double> grid;
  int jobs = 1;
};

duop_sweep_param sweep_param_from_name(const std::string& name) {
  if (name == "qa") return DUOP_SWEEP_QA;
  if (name == "qb") return DUOP_SWEEP_QB;
  if (name == "alpha") return DUOP_SWEEP_ALPHA;
  if (name == "delta") return DUOP_SWEEP_DELTA;
  if (name == "cs") return DUOP_SWEEP_CS;
  if (name == "cq") return DUOP_SWEEP_CQ;
  throw CliError("unknown sweep parameter '" + name + "'");
}

int run_sweep(SweepOptions& opt) {
  opt.output.require_format("csv");
  opt.scenario.finalize();
  const NetworkHandle net = opt.scenario.build_network();
  const int n = net.n();
  const auto y0 = opt.scenario.load_y0(n);
  const duop_sweep_param parameter = sweep_param_from_name(opt.parameter);

  const auto count = static_cast<int32_t>(opt.grid.size());
  std::vector<double> amount(opt.grid.size()), spend(opt.grid.size()),
      dq(opt.grid.size());
  check(duop_sweep(net.ptr, &opt.scenario.params, data_or_null(y0), parameter,
                   opt.grid.data(), count, opt.jobs,
                   opt.scenario.budget_given ? 1 : 0, amount.data(),
                   spend.data(), dq.data(), nullptr));

  // The cost-of-seeding sweep is judged on the seeded amount; every other
  // parameter on the money spent.
  const std::vector<double>& measure =
      (parameter == DUOP_SWEEP_CS) ? amount : spend;
  std::ostringstream csv;
  csv << "param_value,seed_amount,seed_spend,dq,verdict_running\n";
  for (std::size_t i = 0; i < opt.grid.size(); ++i) {
    duop_monotonicity verdict = DUOP_MONO_CONSTANT;
    check(duop_classify_monotonicity(measure.data(),
                                     static_cast<int32_t>(i + 1), 1e-12,
                                     &verdict));
    csv << g12(opt.grid[i]) << ',' << g12(amount[i]) << ',' << g12(spend[i])
        << ',' << g12(dq[i]) << ',' << duop_monotonicity_name(verdict)
        << '\n';
  }
  opt.output.write(csv.str());
  return kExitOk;
}

struct Example1Options {
  OutputOptions output;
  double override_alpha = std::nan("");
};

int run_example1(const Example1Options& opt) {
  opt.output.require_format("json");
  duop_params params{0.5, 0.5, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0};
  if (!std::isnan(opt.override_alpha)) params.alpha = opt.override_alpha;
  constexpr int kAgents = 15;
  constexpr double kTol = 1e-9;

  double vc_a = 0.0, vc_b = 0.0, lambda = 0.0, v_bar = 0.0, v_h = 0.0,
         v_l = 0.0;
  int32_t k = 0;
  check(duop_thresholds(&params, kAgents, &vc_a, &vc_b));
  check(duop_lambda(&params, kAgents, &lambda));
  check(duop_max_seed_count(&params, kAgents, &k, nullptr));
  check(duop_balanced_centrality(&params, &v_bar));
  check(duop_star_centralities(kAgents, &params, &v_h, &v_l));

  const auto capacity_of = [&](NetworkHandle net) {
    double capacity = 0.0;
    check(duop_seeding_capacity(net.ptr, &params, nullptr, DUOP_FIRM_A,
                                &capacity, nullptr));
    return capacity;
  };
  NetworkHandle balanced_net, star_net, kstar_net;
  check(duop_network_balanced_ring(kAgents, 2, &balanced_net.ptr));
  check(duop_network_star(kAgents, &star_net.ptr));
  check(duop_network_k_star(kAgents, 3, &kstar_net.ptr));
  const double capacity_balanced = capacity_of(std::move(balanced_net));
  const double capacity_star = capacity_of(std::move(star_net));
  const double capacity_3star = capacity_of(std::move(kstar_net));

  struct Check {
    const char* name;
    double got;
    double expected;
  };
  const Check checks[] = {
      {"vc_a", vc_a, 2.5},
      {"vc_b", vc_b, 2.5},
      {"lambda", lambda, 5.0},
      {"k", static_cast<double>(k), 3.0},
      {"v_bar", v_bar, 4.0 / 3.0},
      {"v_h", v_h, 4.8},
      {"capacity_balanced", capacity_balanced, 0.0},
      {"capacity_star", capacity_star, 0.5},
      {"capacity_3star", capacity_3star, 1.5},
  };
  std::vector<const Check*> failed;
  for (const Check& c : checks) {
    if (!(std::abs(c.got - c.expected) <= kTol)) failed.push_back(&c);
  }

  JsonOut json;
  json.begin_object();
  json.kv("n", kAgents);
  for (const Check& c : checks) json.kv(c.name, c.got);
  json.kv("status", failed.empty() ? "ok" : "self_check_failed");
  json.end_object();
  opt.output.write(json.str());

  if (!failed.empty()) {
    for (const Check* c : failed) {
      std::cerr << "SelfCheckError: " << c->name << " expected "
                << g12(c->expected) << " got " << g12(c->got) << "\n";
    }
    return kExitSelfCheck;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"competitive seeding and quality allocation on social networks"};
  app.require_subcommand(1);

  SimulateOptions simulate_opt;
  auto* simulate_cmd = app.add_subcommand(
      "simulate", "run the best-response consumption dynamics");
  simulate_opt.scenario.attach(simulate_cmd);
  simulate_cmd->add_option("--horizon", simulate_opt.horizon,
                           "number of update steps")
      ->required()
      ->check(CLI::NonNegativeNumber);
  simulate_opt.output.attach(simulate_cmd, "csv");

  CentralityOptions centrality_opt;
  auto* centrality_cmd =
      app.add_subcommand("centrality", "discounted walk centralities");
  centrality_opt.scenario.attach(centrality_cmd);
  centrality_opt.output.attach(centrality_cmd, "csv");

  ReportOptions allocate_opt;
  auto* allocate_cmd = app.add_subcommand(
      "allocate", "optimal seeding/quality budget split per firm");
  allocate_opt.scenario.attach(allocate_cmd);
  allocate_opt.output.attach(allocate_cmd, "json");

  ReportOptions equilibrium_opt;
  auto* equilibrium_cmd = app.add_subcommand(
      "equilibrium", "Nash equilibrium of the budget allocation game");
  equilibrium_opt.scenario.attach(equilibrium_cmd);
  equilibrium_opt.output.attach(equilibrium_cmd, "json");

  ReportOptions capacity_opt;
  auto* capacity_cmd = app.add_subcommand(
      "capacity", "seeding capacities without budget constraint");
  capacity_opt.scenario.attach(capacity_cmd);
  capacity_opt.output.attach(capacity_cmd, "json");

  SweepOptions sweep_opt;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "parameter sweep of the firm-a allocation");
  sweep_opt.scenario.attach(sweep_cmd);
  sweep_cmd
      ->add_option("--param", sweep_opt.parameter, "parameter to sweep")
      ->required()
      ->check(CLI::IsMember({"qa", "qb", "alpha", "delta", "cs", "cq"}));
  sweep_cmd->add_option("--grid", sweep_opt.grid, "comma-separated grid")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--jobs", sweep_opt.jobs,
                        "evaluate grid points with this many threads")
      ->check(CLI::PositiveNumber);
  sweep_opt.output.attach(sweep_cmd, "csv");

  Example1Options example1_opt;
  auto* example1_cmd = app.add_subcommand(
      "example1", "golden 15-agent worked example with self-check");
  example1_opt.output.attach(example1_cmd, "json");
  example1_cmd
      ->add_option("--self-check-alpha", example1_opt.override_alpha)
      ->group("");  // hidden: negative control for the self-check

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (simulate_cmd->parsed()) return run_simulate(simulate_opt);
    if (centrality_cmd->parsed()) return run_centrality(centrality_opt);
    if (allocate_cmd->parsed()) return run_allocate(allocate_opt);
    if (equilibrium_cmd->parsed()) return run_equilibrium(equilibrium_opt);
    if (capacity_cmd->parsed()) return run_capacity(capacity_opt);
    if (sweep_cmd->parsed()) return run_sweep(sweep_opt);
    if (example1_cmd->parsed()) return run_example1(example1_opt);
  } catch (const CliError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
