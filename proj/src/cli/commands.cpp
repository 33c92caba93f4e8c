#include "gsnet/cli/commands.hpp"

#include <openssl/evp.h>

#include <map>

#include "gsnet/core/errors.hpp"
#include "gsnet/noise/monte_carlo.hpp"
#include "gsnet/noise/pump_sweep.hpp"
#include "gsnet/qcka/simulate.hpp"
#include "gsnet/router/router.hpp"
#include "gsnet/router/schedule.hpp"

namespace gsnet {

namespace fs = std::filesystem;

namespace {

std::string labels_text(const std::vector<int>& vs) {
  std::string s;
  for (int v : vs) s += (s.empty() ? "" : " ") + std::to_string(v + 1);
  return s.empty() ? "-" : s;
}

std::string resource_name(std::size_t index, bool has_ghz) {
  if (has_ghz && index == 0) return "ghz";
  return "pairs_copy" + std::to_string(index + (has_ghz ? 0 : 1));
}

// Resources in canonical order: GHZ first, then the pairwise copies.
std::vector<const ExtractionPlan*> resources(const ProtocolPlans& p) {
  std::vector<const ExtractionPlan*> out;
  if (p.ghz) out.push_back(&*p.ghz);
  for (const ExtractionPlan& q : p.pairwise) out.push_back(&q);
  return out;
}

Json input_entry(const std::string& role, const fs::path& path, const std::string& bytes) {
  Json j;
  j["role"] = role;
  j["file"] = path.filename().string();
  j["sha256"] = sha256_hex(bytes);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) throw Error("SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

GraphState load_network(const RunConfig& c) {
  const Graph g = parse_graph_file(c.graph);
  validate_roles(c, g);
  GraphState gs = graph_state_of(g);
  for (std::size_t v = 0; v < c.network_frame.size(); ++v)
    gs = apply_local(gs, static_cast<int>(v), LocalClifford::named(c.network_frame[v]));
  return gs;
}

ProtocolPlans build_plans(const RunConfig& c, const GraphState& network) {
  PlanOptions opt;
  opt.loss_tolerant = c.loss_tolerant;
  opt.max_orbit = c.orbit_cap;
  Router router(network, opt);
  const std::vector<int> parts = c.participants();
  ProtocolPlans out;
  if (c.protocol != ProtocolChoice::TwoQkd) {
    auto plan = router.find_ghz_plan(parts);
    if (!plan) throw NoPlanError("no GHZ plan for participants " + labels_text(parts));
    out.ghz = std::move(*plan);
  }
  if (c.protocol != ProtocolChoice::Nqkd) {
    out.pairwise = c.schedule.empty() ? plan_pairwise_schedule(router, parts) : plan_explicit_schedule(router, c.schedule);
    try {
      network_use_accounting(out.pairwise, Protocol::TwoQkd, parts);
    } catch (const InvalidArgument& e) {
      throw NoPlanError(std::string("schedule does not serve the participants: ") + e.what());
    }
  }
  return out;
}

OrbitListing cmd_orbit(const fs::path& graph, std::size_t cap) {
  const Graph g = parse_graph_file(graph);
  if (g.size() > LcOrbit::kMaxVertices)
    throw CapExceeded("orbit enumeration is limited to " + std::to_string(LcOrbit::kMaxVertices) + " vertices");
  return {lc_orbit(g, cap)};
}

std::string format_orbit(const OrbitListing& o) {
  std::string out = "orbit_size " + std::to_string(o.members.size()) + "\n";
  for (const Graph& g : o.members) {
    std::string line;
    for (const auto& [u, v] : g.edges()) line += (line.empty() ? "" : " ") + std::to_string(u + 1) + "-" + std::to_string(v + 1);
    out += (line.empty() ? "(no edges)" : line) + "\n";
  }
  return out;
}

CommandOutput cmd_extract(const RunConfig& c) {
  const GraphState net = load_network(c);
  const ProtocolPlans plans = build_plans(c, net);
  CommandOutput out;
  std::string& s = out.summary;
  auto describe = [&](const ExtractionPlan& p, const std::string& title) {
    s += title + "\n";
    s += "  participants " + labels_text(p.participants) + "\n";
    if (!p.pairs.empty()) {
      s += "  pairs";
      for (const auto& [a, b] : p.pairs) s += " (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
      s += "\n";
    }
    s += "  lc_sequence " + labels_text(p.lc_sequence) + "\n";
    s += "  measured " + labels_text(p.measured) + "\n";
    s += "  type1 " + compile_round_settings(p, RoundType::Type1).basis_string() + "\n";
    s += "  type2 " + compile_round_settings(p, RoundType::Type2).basis_string() + "\n";
  };
  if (plans.ghz) {
    describe(*plans.ghz, "nqkd: GHZ plan, copies 1");
    const fs::path f = c.output / "plan_nqkd.json";
    write_file(f, dump(plan_to_json(*plans.ghz)));
    out.files.push_back(f);
  }
  if (!plans.pairwise.empty()) {
    const int copies = network_use_accounting(plans.pairwise, Protocol::TwoQkd, c.participants());
    s += "2qkd: " + std::to_string(plans.pairwise.size()) + " multicast plans, copies " + std::to_string(copies) + "\n";
    Json arr = Json::array();
    for (std::size_t i = 0; i < plans.pairwise.size(); ++i) {
      describe(plans.pairwise[i], "  copy " + std::to_string(i + 1));
      arr.push_back(plan_to_json(plans.pairwise[i]));
    }
    const fs::path f = c.output / "plan_2qkd.json";
    write_file(f, dump(arr));
    out.files.push_back(f);
  }
  const fs::path f = c.output / "plan_summary.txt";
  write_file(f, s);
  out.files.push_back(f);
  return out;
}

std::string counts_file_name(const std::string& resource, RoundType type) {
  return resource + "_type" + std::to_string(static_cast<int>(type)) + ".counts";
}

CommandOutput cmd_simulate(const RunConfig& c) {
  if (!c.seed) throw InvalidArgument("simulation needs a seed (--seed or config 'seed')");
  const GraphState net = load_network(c);
  const ProtocolPlans plans = build_plans(c, net);
  const OutcomeModel model = noisy_state_model(net, c.noise);
  CommandOutput out;
  const auto rs = resources(plans);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    SimulationOptions opt;
    opt.rounds = c.rounds;
    opt.type2_fraction = c.type2_fraction;
    opt.disclosed_fraction = c.disclosed_fraction;
    opt.seed = *c.seed + i;
    const RoundBatches b = simulate_protocol(*rs[i], net, model, opt);
    const std::string name = resource_name(i, plans.ghz.has_value());
    for (const RoundBatch* batch : {&b.type1, &b.type2}) {
      const fs::path f = c.output / counts_file_name(name, batch->setting.type);
      write_file(f, serialize_counts({name, *batch, opt.seed, opt.rounds}));
      out.files.push_back(f);
    }
    out.summary += name + ": " + std::to_string(b.type1.total()) + " type-1 and " + std::to_string(b.type2.total()) +
                   " type-2 rounds\n";
  }
  return out;
}

Json cmd_analyze(const RunConfig& c, const std::vector<fs::path>& counts, const std::optional<fs::path>& config_path) {
  const std::string graph_bytes = read_file(c.graph);
  const GraphState net = load_network(c);
  const ProtocolPlans plans = build_plans(c, net);
  const auto rs = resources(plans);

  std::vector<fs::path> paths = counts;
  if (paths.empty())
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (RoundType t : {RoundType::Type1, RoundType::Type2})
        paths.push_back(c.output / counts_file_name(resource_name(i, plans.ghz.has_value()), t));

  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < rs.size(); ++i) index[resource_name(i, plans.ghz.has_value())] = i;
  std::vector<std::optional<RoundBatch>> t1(rs.size()), t2(rs.size());
  Json inputs = Json::array();
  inputs.push_back(input_entry("graph", c.graph, graph_bytes));
  if (config_path) inputs.push_back(input_entry("config", *config_path, read_file(*config_path)));
  for (const fs::path& p : paths) {
    if (!fs::exists(p)) throw MissingSettingError("missing counts file " + p.string());
    const std::string bytes = read_file(p);
    // The header names the resource; parse once without a plan to find it.
    const std::string resource = parse_counts(bytes).resource;
    const auto it = index.find(resource);
    if (it == index.end()) throw MissingSettingError("counts for unknown resource '" + resource + "' in " + p.string());
    CountsFile cf = parse_counts(bytes, rs[it->second]);
    auto& slot = cf.batch.setting.type == RoundType::Type1 ? t1[it->second] : t2[it->second];
    if (slot) throw MissingSettingError("two counts files for " + resource + " round type " +
                                        std::to_string(static_cast<int>(cf.batch.setting.type)));
    slot = std::move(cf.batch);
    inputs.push_back(input_entry("counts", p, bytes));
  }

  ProtocolData data;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const std::string name = resource_name(i, plans.ghz.has_value());
    if (!t1[i]) throw MissingSettingError("no type-1 counts for " + name);
    if (!t2[i]) throw MissingSettingError("no type-2 counts for " + name);
    ResourceData r{*rs[i], std::move(*t1[i]), std::move(*t2[i])};
    if (plans.ghz && i == 0) data.ghz = std::move(r);
    else data.pairwise.push_back(std::move(r));
  }

  KeyRateReport report = analyze(data);
  const std::uint64_t mc_seed = c.mc_seed.value_or(c.seed.value_or(0));
  Json mc = Json::object();
  std::vector<Statistic> wanted;
  for (Statistic s : all_statistics())
    if (statistic_value(report, s)) wanted.push_back(s);
  if (!wanted.empty())
    for (const auto& [s, r] : poisson_mc(data, wanted, c.mc_samples, mc_seed)) {
      report.uncertainties[to_string(s)] = r.std;
      mc[to_string(s)] = mc_to_json(r);
    }

  Json j;
  j["protocol"] = to_string(c.protocol);
  Json parts = Json::array();
  for (int v : c.participants()) parts.push_back(v + 1);
  j["participants"] = parts;
  j["alice"] = c.alice + 1;
  if (report.ghz)
    j["qber_configured_alice"] = round12(qber_for_alice(*report.ghz, data.ghz->plan.participants, c.alice));
  j["report"] = report_to_json(report);
  j["monte_carlo"] = {{"samples", c.mc_samples}, {"seed", mc_seed}, {"statistics", mc}};
  j["provenance"] = {{"tool", "gsnet"}, {"tool_version", kToolVersion}, {"inputs", inputs}, {"config", config_echo(c)}};
  write_file(c.output / "report.json", dump(j));
  return j;
}

Json cmd_sweep(const RunConfig& c) {
  const GraphState net = load_network(c);
  const ProtocolPlans plans = build_plans(c, net);
  const std::vector<double> grid = linear_grid(c.sweep.p_min_mw, c.sweep.p_max_mw, c.sweep.points);
  Json summary;
  summary["grid"] = {{"p_min_mw", round12(c.sweep.p_min_mw)},
                     {"p_max_mw", round12(c.sweep.p_max_mw)},
                     {"points", c.sweep.points}};
  summary["pump"] = {{"rate_coefficient", round12(c.noise.pump.rate_coefficient)},
                     {"contamination", round12(c.noise.pump.contamination)}};
  Json results = Json::object();
  std::vector<Protocol> protos;
  if (plans.ghz) protos.push_back(Protocol::Nqkd);
  if (!plans.pairwise.empty()) protos.push_back(Protocol::TwoQkd);
  for (Protocol p : protos) {
    const PumpSweepResult r = pump_sweep(c.noise, grid, plans, p);
    const std::string csv = sweep_csv(r);
    const fs::path f = c.output / ("sweep_" + to_string(p) + ".csv");
    write_file(f, csv);
    double best = 0.0;
    for (const SweepPoint& pt : r.grid) best = std::max(best, pt.keyrate_hz);
    results[to_string(p)] = {{"file", f.filename().string()},
                             {"argmax_p_mw", round12(r.argmax_p)},
                             {"max_keyrate_hz", round12(best)},
                             {"sha256", sha256_hex(csv)}};
  }
  summary["results"] = results;
  write_file(c.output / "sweep_summary.json", dump(summary));
  return summary;
}

}  // namespace gsnet
