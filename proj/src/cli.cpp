#include "exclugraph/cli.hpp"

#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "exclugraph/bounds.hpp"
#include "exclugraph/cache.hpp"
#include "exclugraph/codec.hpp"
#include "exclugraph/error.hpp"
#include "exclugraph/families.hpp"
#include "exclugraph/isomorphism.hpp"
#include "exclugraph/quantum_set.hpp"

namespace exclugraph {
namespace {

using nlohmann::json;

constexpr const char* kCsvHeader = "graph6,n,alpha,theta,alpha_star,vt,sc,theta_complement,product_vt_check";

// Family specs contain ':' (or are the bare word "petersen"), which never
// occurs in graph6 text; edge lists contain ';'.
Graph resolve_graph(const std::string& text) {
  if (text.find(':') != std::string::npos || text == "petersen") return generate_family(FamilySpec::parse(text));
  return parse_any(text);
}

std::vector<double> parse_number_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ParameterError(std::string("malformed ") + what + " entry '" + item + "'");
    }
  }
  return out;
}

std::vector<double> read_number_file(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw ParameterError(std::string("cannot open ") + what + " file '" + path + "'");
  std::vector<double> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto values = parse_number_list(line, what);
    out.insert(out.end(), values.begin(), values.end());
  }
  return out;
}

json health_json(const SolverHealth& h) {
  return {{"sdp_solves", h.solves},
          {"max_gap", h.max_gap},
          {"min_eigenvalue", h.min_eigenvalue},
          {"max_edge_entry", h.max_edge_entry},
          {"max_iterations", h.max_iterations}};
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct Payload {
  json result;
  SolverHealth health;
  bool passed = true;  // verification commands report failures through exit 3
};

struct BoundsRow {
  std::string graph6;
  Payload payload;
};

Payload bounds_payload(const Graph& g, const WeightVector& w, const SdpOptions& options) {
  const auto r = bounds_report(g, w, options);
  Payload p;
  double theta_complement = 0;
  if (r.theta > 0) {
    p.health.record(r.theta_solution);
    const auto s = solve_theta_sdp(complement(g), w.values(), options);
    p.health.record(s);
    theta_complement = s.value;
  }
  const double product = r.theta * theta_complement;
  p.result = {{"alpha", r.alpha},
              {"theta", r.theta},
              {"alpha_star", r.alpha_star},
              {"theta_complement", theta_complement},
              {"independent_set", r.independent_set.vertices},
              {"packing_point", r.packing.point},
              {"vertex_transitive", r.vertex_transitive},
              {"self_complementary", r.self_complementary.has_value()},
              {"self_complementary_map",
               r.self_complementary ? json(r.self_complementary->mapping()) : json(nullptr)},
              {"product_vt_check", r.vertex_transitive && r.unit_weights ? json(product) : json(nullptr)},
              {"s_max_classical", optional_json(r.s_max_classical())},
              {"s_max_quantum", optional_json(r.s_max_quantum())},
              {"s_max_exclusivity", optional_json(r.s_max_exclusivity())}};
  return p;
}

std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
  return v.dump();
}

void append_csv(const std::string& path, const std::string& graph6, int n, const json& result) {
  const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw ParameterError("cannot open CSV file '" + path + "'");
  if (fresh) out << kCsvHeader << '\n';
  out << graph6 << ',' << n << ',' << csv_cell(result["alpha"]) << ',' << csv_cell(result["theta"]) << ','
      << csv_cell(result["alpha_star"]) << ',' << csv_cell(result["vertex_transitive"]) << ','
      << csv_cell(result["self_complementary"]) << ',' << csv_cell(result["theta_complement"]) << ','
      << csv_cell(result["product_vt_check"]) << '\n';
}

class Dispatcher {
 public:
  Dispatcher(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
      : args_(args), out_(out), err_(err) {}

  int run() {
    CLI::App app{"Classical, quantum and exclusivity-principle bounds of exclusivity graphs", "exclugraph"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolkitVersion);

    auto* bounds = add_graph_command(app, "bounds", "alpha, theta and alpha* with structural flags");
    bounds->add_option("--weights", weights_text_, "comma-separated vertex weights (default: all 1)");
    bounds->add_option("--csv", csv_path_, "append a CSV row to this file");

    auto* member = add_graph_command(app, "membership", "classify a distribution against the quantum set");
    add_distribution_options(member);
    auto* witness = add_graph_command(app, "witness", "extract an E-principle witness for a supra-quantum point");
    add_distribution_options(witness);
    auto* sym = add_graph_command(app, "symmetrize", "average a distribution over the automorphism group");
    add_distribution_options(sym);
    add_graph_command(app, "quantum-max", "quantum maxima of G and its complement");

    auto* verify = app.add_subcommand("verify", "executable checks of the three exclusivity results");
    verify->require_subcommand(1);
    auto* r1 = add_graph_command(*verify, "result1", "quantum set of G from the quantum set of its complement");
    r1->add_option("--trials", trials_, "sampled distributions")->check(CLI::NonNegativeNumber);
    r1->add_option("--seed", seed_, "random seed");
    auto* r2 = add_graph_command(*verify, "result2", "supra-quantum exclusion on self-complementary graphs");
    r2->add_option("--eps", eps_text_, "comma-separated epsilon grid");
    add_graph_command(*verify, "result3", "theta(G) theta(complement G) = n on vertex-transitive graphs");

    auto* family = app.add_subcommand("family", "emit a named graph");
    family->add_option("spec", family_text_, "e.g. cycle:5, circulant:8:1,4, petersen")->required();
    add_format_option(family);

    auto* product = app.add_subcommand("product", "graph products");
    product->add_flag("--or", or_product_, "OR (co-normal) product")->required();
    product->add_option("left", left_text_, "graph6, edge list or family spec")->required();
    product->add_option("right", right_text_, "graph6, edge list or family spec")->required();
    add_format_option(product);

    auto* compl_cmd = app.add_subcommand("complement", "complement graph");
    compl_cmd->add_option("graph", left_text_, "graph6, edge list or family spec")->required();
    add_format_option(compl_cmd);

    auto* sweep = app.add_subcommand("sweep", "bounds over a range of family sizes");
    sweep->add_option("--family", sweep_kind_, "family kind, e.g. cycle")->required();
    sweep->add_option("--from", sweep_from_, "first size")->required();
    sweep->add_option("--to", sweep_to_, "last size (inclusive)")->required();
    sweep->add_option("--step", sweep_step_, "size increment")->check(CLI::PositiveNumber);
    sweep->add_option("--distances", sweep_distances_, "circulant connection set, e.g. 1,4");
    sweep->add_option("--threads", threads_, "worker threads")->check(CLI::PositiveNumber);
    sweep->add_option("--csv", csv_path_, "append CSV rows to this file");
    sweep->add_option("--tol", tolerance_, "SDP duality gap tolerance");
    sweep->add_flag("--cache", use_cache_, "reuse and store results in the result cache");

    std::vector<const char*> argv;
    for (const auto& a : args_) argv.push_back(a.c_str());
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out_, err_);
      return code == 0 ? kExitOk : kExitParameter;
    }

    try {
      if (bounds->parsed()) return run_cached("bounds", [&](const Graph& g) { return cmd_bounds(g); });
      if (member->parsed()) return run_cached("membership", [&](const Graph& g) { return cmd_membership(g); });
      if (witness->parsed()) return run_cached("witness", [&](const Graph& g) { return cmd_witness(g); });
      if (sym->parsed()) return run_cached("symmetrize", [&](const Graph& g) { return cmd_symmetrize(g); });
      if (app.get_subcommand("quantum-max")->parsed())
        return run_cached("quantum-max", [&](const Graph& g) { return cmd_quantum_max(g); });
      if (r1->parsed()) return run_cached("verify result1", [&](const Graph& g) { return cmd_result1(g); });
      if (r2->parsed()) return run_cached("verify result2", [&](const Graph& g) { return cmd_result2(g); });
      if (verify->get_subcommand("result3")->parsed())
        return run_cached("verify result3", [&](const Graph& g) { return cmd_result3(g); });
      if (family->parsed()) return emit_graph(generate_family(FamilySpec::parse(family_text_)));
      if (product->parsed()) return emit_graph(or_product(resolve_graph(left_text_), resolve_graph(right_text_)));
      if (compl_cmd->parsed()) return emit_graph(complement(resolve_graph(left_text_)));
      if (sweep->parsed()) return cmd_sweep();
    } catch (const NumericalError& e) {
      err_ << "numerical error: " << e.what() << " [bracket " << e.lower() << ", " << e.upper() << "]\n";
      return kExitNumerical;
    } catch (const Error& e) {
      err_ << "error: " << e.what() << '\n';
      return kExitParameter;
    }
    err_ << app.help();
    return kExitParameter;
  }

 private:
  CLI::App* add_graph_command(CLI::App& parent, const std::string& name, const std::string& help) {
    auto* cmd = parent.add_subcommand(name, help);
    auto* graph = cmd->add_option("--graph", graph_text_, "graph6 text or edge list \"n; u-v ...\"");
    auto* fam = cmd->add_option("--family", family_text_, "named family, e.g. cycle:5");
    graph->excludes(fam);
    cmd->add_option("--tol", tolerance_, "SDP duality gap tolerance");
    cmd->add_flag("--cache", use_cache_, "reuse and store results in the result cache");
    cmd->add_flag("--pretty", pretty_, "indent the JSON record");
    return cmd;
  }

  void add_distribution_options(CLI::App* cmd) {
    auto* d = cmd->add_option("--dist", dist_text_, "comma-separated probabilities");
    auto* f = cmd->add_option("--dist-file", dist_file_, "one probability per line");
    d->excludes(f);
  }

  void add_format_option(CLI::App* cmd) {
    cmd->add_option("--format", format_, "graph6 or edge-list")->check(CLI::IsMember({"graph6", "edge-list"}));
  }

  Graph input_graph() const {
    if (!graph_text_.empty()) return parse_any(graph_text_);
    if (!family_text_.empty()) return generate_family(FamilySpec::parse(family_text_));
    throw ParameterError("no input graph: pass --graph or --family");
  }

  std::vector<double> input_distribution_values(int n) const {
    std::vector<double> v;
    if (!dist_text_.empty()) {
      v = parse_number_list(dist_text_, "distribution");
    } else if (!dist_file_.empty()) {
      v = read_number_file(dist_file_, "distribution");
    } else {
      throw ParameterError("no distribution: pass --dist or --dist-file");
    }
    if (static_cast<int>(v.size()) != n) {
      throw ParameterError("distribution has " + std::to_string(v.size()) + " entries for " + std::to_string(n) +
                           " vertices");
    }
    return v;
  }

  std::vector<double> input_weights(int n) const {
    if (weights_text_.empty()) return std::vector<double>(n, 1.0);
    auto w = parse_number_list(weights_text_, "weight");
    if (static_cast<int>(w.size()) != n) {
      throw ParameterError("weights have " + std::to_string(w.size()) + " entries for " + std::to_string(n) +
                           " vertices");
    }
    return w;
  }

  SdpOptions sdp_options() const {
    if (!(tolerance_ > 0)) throw ParameterError("tolerance must be positive");
    SdpOptions o;
    o.tolerance = tolerance_;
    return o;
  }

  std::string command_echo() const {
    std::string s;
    for (std::size_t i = 1; i < args_.size(); ++i) s += (i > 1 ? " " : "") + args_[i];
    return s;
  }

  // Per-vertex data the command reads (weights or a distribution), hashed into
  // the cache key, plus the parameters that change the result.
  std::pair<std::vector<double>, std::string> key_material(const std::string& command, int n) const {
    std::string tail = command;
    if (command == "bounds") return {input_weights(n), tail};
    if (command == "membership" || command == "witness" || command == "symmetrize")
      return {input_distribution_values(n), tail};
    if (command == "verify result1") tail += " trials=" + std::to_string(trials_) + " seed=" + std::to_string(seed_);
    if (command == "verify result2") tail += " eps=" + eps_text_;
    return {{}, tail};
  }

  int run_cached(const std::string& command, const std::function<Payload(const Graph&)>& compute) {
    const Graph g = input_graph();
    const std::string graph6 = to_graph6(g);
    const auto [vertex_data, command_key] = key_material(command, g.order());

    std::optional<ResultCache> cache;
    std::string key;
    std::optional<std::string> hit;
    if (use_cache_) {
      cache.emplace(ResultCache::default_path());
      key = ResultCache::make_key(graph6, vertex_data, command_key, tolerance_);
      hit = cache->lookup(key);
    }

    std::string payload_text;
    bool passed = true;
    if (hit) {
      payload_text = *hit;
      passed = json::parse(payload_text).value("passed", true);
    } else {
      const Payload p = compute(g);
      passed = p.passed;
      payload_text = json{{"result", p.result}, {"diagnostics", health_json(p.health)}, {"passed", p.passed}}.dump();
      if (cache) cache->store(key, payload_text);
    }

    const json payload = json::parse(payload_text);
    json record = {{"command", command_echo()},
                   {"graph6", graph6},
                   {"n", g.order()},
                   {"result", payload["result"]},
                   {"diagnostics", payload["diagnostics"]},
                   {"passed", passed},
                   {"cached", hit.has_value()},
                   {"tolerance", tolerance_},
                   {"timestamp", timestamp_utc()},
                   {"version", kToolkitVersion}};
    if (command == "bounds") record["weights"] = vertex_data;
    if (command == "membership" || command == "witness" || command == "symmetrize") record["distribution"] = vertex_data;
    out_ << (pretty_ ? record.dump(2) : record.dump()) << '\n';

    if (command == "bounds" && !csv_path_.empty()) append_csv(csv_path_, graph6, g.order(), payload["result"]);
    return passed ? kExitOk : kExitNumerical;
  }

  Payload cmd_bounds(const Graph& g) const {
    return bounds_payload(g, WeightVector(input_weights(g.order())), sdp_options());
  }

  static json witness_json(const Witness& w) {
    return {{"distribution", std::vector<double>(w.distribution.values().begin(), w.distribution.values().end())},
            {"product", w.product},
            {"membership_check", w.membership_check}};
  }

  Payload cmd_membership(const Graph& g) const {
    const Distribution p(input_distribution_values(g.order()));
    const auto v = membership(g, p, sdp_options());
    Payload out;
    out.health = v.health;
    out.result = {{"theta_complement", v.theta_complement},
                  {"classification", to_string(v.classification)},
                  {"witness", v.witness ? witness_json(*v.witness) : json(nullptr)}};
    return out;
  }

  Payload cmd_witness(const Graph& g) const {
    const Distribution p(input_distribution_values(g.order()));
    const auto w = extract_witness(g, p, sdp_options());
    Payload out;
    out.health = w.health;
    out.result = witness_json(w);
    return out;
  }

  Payload cmd_symmetrize(const Graph& g) const {
    const Distribution p(input_distribution_values(g.order()));
    const auto q = symmetrize(g, p);
    Payload out;
    out.result = {{"distribution", std::vector<double>(q.values().begin(), q.values().end())},
                  {"sum", q.sum()},
                  {"group_order", automorphism_group(g).order()}};
    return out;
  }

  Payload cmd_quantum_max(const Graph& g) const {
    const auto r = quantum_max(g, sdp_options());
    Payload out;
    out.health = r.health;
    out.result = {{"m_q", r.m_q},
                  {"complement_m_q", r.complement_m_q},
                  {"p_max", optional_json(r.p_max)},
                  {"product", r.product},
                  {"vertex_transitive", r.vertex_transitive}};
    return out;
  }

  Payload cmd_result1(const Graph& g) const {
    const auto r = verify_result1(g, trials_, seed_, sdp_options());
    Payload out;
    out.health = r.health;
    out.passed = r.passed();
    out.result = {{"trials", r.trials},
                  {"inside", r.inside},
                  {"boundary", r.boundary},
                  {"outside", r.outside},
                  {"e_product_checks", r.e_product_checks},
                  {"e_product_violations", r.e_product_violations},
                  {"max_inside_product", r.max_inside_product},
                  {"witnesses_verified", r.witnesses_verified},
                  {"witness_failures", r.witness_failures},
                  {"seed", seed_}};
    return out;
  }

  Payload cmd_result2(const Graph& g) const {
    const auto r = verify_result2(g, parse_number_list(eps_text_, "epsilon"), sdp_options());
    Payload out;
    out.health = r.health;
    out.passed = r.passed();
    json entries = json::array();
    for (const auto& e : r.entries) {
      entries.push_back({{"epsilon", e.epsilon},
                         {"product", e.product},
                         {"theta_complement", e.theta_complement},
                         {"witness_check", e.witness_check},
                         {"permuted_check", e.permuted_check},
                         {"passed", e.passed}});
    }
    out.result = {{"theta", r.theta},
                  {"isomorphism", r.isomorphism.mapping()},
                  {"entries", entries},
                  {"increasing", r.increasing}};
    return out;
  }

  Payload cmd_result3(const Graph& g) const {
    const auto r = verify_result3(g, sdp_options());
    Payload out;
    out.health = r.health;
    out.passed = r.passed();
    out.result = {{"n", r.n},
                  {"theta", r.theta},
                  {"theta_complement", r.theta_complement},
                  {"product", r.product},
                  {"e_value", r.e_value},
                  {"upper_margin", r.upper_margin},
                  {"lower_margin", r.lower_margin}};
    return out;
  }

  int emit_graph(const Graph& g) {
    out_ << serialize(g, format_ == "edge-list" ? GraphFormat::edge_list : GraphFormat::graph6) << '\n';
    return kExitOk;
  }

  int cmd_sweep() {
    if (sweep_to_ < sweep_from_) throw ParameterError("--to must not be below --from");
    std::vector<FamilySpec> specs;
    for (int size = sweep_from_; size <= sweep_to_; size += sweep_step_) {
      std::string text = sweep_kind_ + ":" + std::to_string(size);
      if (!sweep_distances_.empty()) text += ":" + sweep_distances_;
      specs.push_back(FamilySpec::parse(text));
    }
    const SdpOptions options = sdp_options();
    std::optional<ResultCache> cache;
    if (use_cache_) cache.emplace(ResultCache::default_path());

    struct Row {
      std::string graph6;
      int n = 0;
      std::string payload;
      bool cached = false;
      std::string error;
      int code = kExitOk;
    };
    std::vector<Row> rows(specs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next++) < specs.size();) {
        Row& row = rows[i];
        try {
          const Graph g = generate_family(specs[i]);
          row.graph6 = to_graph6(g);
          row.n = g.order();
          const std::vector<double> w(g.order(), 1.0);
          const std::string key = ResultCache::make_key(row.graph6, w, "bounds", tolerance_);
          if (cache) {
            if (auto hit = cache->lookup(key)) {
              row.payload = *hit;
              row.cached = true;
              continue;
            }
          }
          const Payload p = bounds_payload(g, WeightVector(w), options);
          row.payload =
              json{{"result", p.result}, {"diagnostics", health_json(p.health)}, {"passed", p.passed}}.dump();
          if (cache) cache->store(key, row.payload);
        } catch (const NumericalError& e) {
          row.error = e.what();
          row.code = kExitNumerical;
        } catch (const Error& e) {
          row.error = e.what();
          row.code = kExitParameter;
        }
      }
    };
    std::vector<std::thread> pool;
    const int threads = std::max(1, std::min<int>(threads_, static_cast<int>(specs.size())));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    int status = kExitOk;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Row& row = rows[i];
      if (row.code != kExitOk) {
        err_ << "error: " << specs[i].to_string() << ": " << row.error << '\n';
        status = std::max(status, row.code);
        continue;
      }
      const json payload = json::parse(row.payload);
      json record = {{"command", command_echo()},
                     {"family", specs[i].to_string()},
                     {"graph6", row.graph6},
                     {"n", row.n},
                     {"result", payload["result"]},
                     {"diagnostics", payload["diagnostics"]},
                     {"cached", row.cached},
                     {"tolerance", tolerance_},
                     {"timestamp", timestamp_utc()},
                     {"version", kToolkitVersion}};
      out_ << record.dump() << '\n';
      if (!csv_path_.empty()) append_csv(csv_path_, row.graph6, row.n, payload["result"]);
    }
    return status;
  }

  const std::vector<std::string>& args_;
  std::ostream& out_;
  std::ostream& err_;

  std::string graph_text_, family_text_, weights_text_, csv_path_;
  std::string dist_text_, dist_file_, eps_text_ = "0.05,0.1,0.2";
  std::string left_text_, right_text_, format_ = "graph6";
  std::string sweep_kind_, sweep_distances_;
  int sweep_from_ = 0, sweep_to_ = 0, sweep_step_ = 1, threads_ = 1;
  int trials_ = 100;
  std::uint64_t seed_ = 0;
  double tolerance_ = kDefaultGapTolerance;
  bool use_cache_ = false, pretty_ = false, or_product_ = false;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return Dispatcher(args, out, err).run();
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitParameter;
  }
}

}  // namespace exclugraph
