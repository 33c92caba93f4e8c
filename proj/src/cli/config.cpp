#include "gsnet/cli/config.hpp"

#include <algorithm>
#include <set>

#include "gsnet/core/errors.hpp"

namespace gsnet {

namespace {

std::vector<int> labels(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be a list of labels");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(x.get<int>() - 1);
  return out;
}

std::vector<double> probabilities(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be a list, one entry per vertex");
  return j.get<std::vector<double>>();
}

void reject_unknown(const Json& j, std::initializer_list<const char*> known, const std::string& where) {
  for (const auto& [k, v] : j.items())
    if (std::none_of(known.begin(), known.end(), [&](const char* s) { return k == s; }))
      throw ParseError("unknown key '" + k + "' in " + where);
}

}  // namespace

std::string to_string(ProtocolChoice p) {
  switch (p) {
    case ProtocolChoice::Nqkd: return "nqkd";
    case ProtocolChoice::TwoQkd: return "2qkd";
    case ProtocolChoice::Both: return "both";
  }
  return "?";
}

ProtocolChoice protocol_choice_from_string(const std::string& s) {
  if (s == "nqkd") return ProtocolChoice::Nqkd;
  if (s == "2qkd") return ProtocolChoice::TwoQkd;
  if (s == "both") return ProtocolChoice::Both;
  throw ParseError("protocol must be nqkd, 2qkd or both, got '" + s + "'");
}

std::vector<int> RunConfig::participants() const {
  std::vector<int> p = bobs;
  p.push_back(alice);
  std::sort(p.begin(), p.end());
  return p;
}

RunConfig parse_config(const std::string& text, const std::filesystem::path& base_dir) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  reject_unknown(j,
                 {"graph", "network_frame", "roles", "protocol", "rounds", "type2_fraction", "disclosed_fraction",
                  "seed", "noise", "schedule", "loss_tolerant", "orbit_cap", "mc_samples", "mc_seed", "sweep", "output"},
                 "config");
  RunConfig c;
  try {
    if (!j.contains("graph")) throw ParseError("config needs 'graph'");
    c.graph = j.at("graph").get<std::string>();
    if (c.graph.is_relative() && !base_dir.empty()) c.graph = base_dir / c.graph;
    if (j.contains("network_frame")) c.network_frame = j.at("network_frame").get<std::vector<std::string>>();
    if (!j.contains("roles")) throw ParseError("config needs 'roles'");
    const Json& roles = j.at("roles");
    reject_unknown(roles, {"alice", "bobs", "nonparticipants"}, "roles");
    c.alice = roles.at("alice").get<int>() - 1;
    c.bobs = labels(roles.at("bobs"), "bobs");
    if (roles.contains("nonparticipants")) c.nonparticipants = labels(roles.at("nonparticipants"), "nonparticipants");
    if (j.contains("protocol")) c.protocol = protocol_choice_from_string(j.at("protocol").get<std::string>());
    if (j.contains("rounds")) c.rounds = j.at("rounds").get<std::uint64_t>();
    if (j.contains("type2_fraction")) c.type2_fraction = j.at("type2_fraction").get<double>();
    if (j.contains("disclosed_fraction")) c.disclosed_fraction = j.at("disclosed_fraction").get<double>();
    if (j.contains("seed") && !j.at("seed").is_null()) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("noise")) {
      const Json& n = j.at("noise");
      reject_unknown(n, {"depolarizing", "dephasing", "white_noise", "pump"}, "noise");
      if (n.contains("depolarizing")) c.noise.depolarizing = probabilities(n.at("depolarizing"), "depolarizing");
      if (n.contains("dephasing")) c.noise.dephasing = probabilities(n.at("dephasing"), "dephasing");
      if (n.contains("white_noise")) c.noise.white_noise = n.at("white_noise").get<double>();
      if (n.contains("pump")) {
        const Json& p = n.at("pump");
        reject_unknown(p, {"rate_coefficient", "contamination"}, "pump");
        if (p.contains("rate_coefficient")) c.noise.pump.rate_coefficient = p.at("rate_coefficient").get<double>();
        if (p.contains("contamination")) c.noise.pump.contamination = p.at("contamination").get<double>();
      }
    }
    if (j.contains("schedule")) {
      for (const auto& copy : j.at("schedule")) {
        std::vector<std::pair<int, int>> pairs;
        for (const auto& p : copy) {
          if (!p.is_array() || p.size() != 2) throw ParseError("schedule pairs need two labels");
          pairs.emplace_back(p[0].get<int>() - 1, p[1].get<int>() - 1);
        }
        c.schedule.push_back(std::move(pairs));
      }
    }
    if (j.contains("loss_tolerant")) c.loss_tolerant = j.at("loss_tolerant").get<bool>();
    if (j.contains("orbit_cap")) c.orbit_cap = j.at("orbit_cap").get<std::size_t>();
    if (j.contains("mc_samples")) c.mc_samples = j.at("mc_samples").get<std::uint64_t>();
    if (j.contains("mc_seed") && !j.at("mc_seed").is_null()) c.mc_seed = j.at("mc_seed").get<std::uint64_t>();
    if (j.contains("sweep")) {
      const Json& s = j.at("sweep");
      reject_unknown(s, {"p_min_mw", "p_max_mw", "points"}, "sweep");
      if (s.contains("p_min_mw")) c.sweep.p_min_mw = s.at("p_min_mw").get<double>();
      if (s.contains("p_max_mw")) c.sweep.p_max_mw = s.at("p_max_mw").get<double>();
      if (s.contains("points")) c.sweep.points = s.at("points").get<int>();
    }
    if (j.contains("output")) {
      c.output = j.at("output").get<std::string>();
      if (c.output.is_relative() && !base_dir.empty()) c.output = base_dir / c.output;
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad config value: ") + e.what());
  }
  c.noise.validate();
  if (c.rounds == 0) throw InvalidArgument("rounds must be positive");
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  return parse_config(read_file(path), path.parent_path());
}

Json config_echo(const RunConfig& c) {
  Json j;
  j["graph"] = c.graph.filename().string();
  j["network_frame"] = c.network_frame;
  Json roles;
  roles["alice"] = c.alice + 1;
  Json bobs = Json::array();
  for (int b : c.bobs) bobs.push_back(b + 1);
  roles["bobs"] = bobs;
  Json non = Json::array();
  for (int v : c.nonparticipants) non.push_back(v + 1);
  roles["nonparticipants"] = non;
  j["roles"] = roles;
  j["protocol"] = to_string(c.protocol);
  j["rounds"] = c.rounds;
  j["type2_fraction"] = round12(c.type2_fraction);
  j["disclosed_fraction"] = round12(c.disclosed_fraction);
  j["seed"] = c.seed ? Json(*c.seed) : Json(nullptr);
  Json noise;
  Json dep = Json::array();
  for (double x : c.noise.depolarizing) dep.push_back(round12(x));
  Json dph = Json::array();
  for (double x : c.noise.dephasing) dph.push_back(round12(x));
  noise["depolarizing"] = dep;
  noise["dephasing"] = dph;
  noise["white_noise"] = round12(c.noise.white_noise);
  noise["pump"] = {{"rate_coefficient", round12(c.noise.pump.rate_coefficient)},
                   {"contamination", round12(c.noise.pump.contamination)}};
  j["noise"] = noise;
  Json sched = Json::array();
  for (const auto& copy : c.schedule) {
    Json jc = Json::array();
    for (const auto& [a, b] : copy) jc.push_back(Json::array({a + 1, b + 1}));
    sched.push_back(jc);
  }
  j["schedule"] = sched;
  j["loss_tolerant"] = c.loss_tolerant;
  j["orbit_cap"] = c.orbit_cap;
  j["mc_samples"] = c.mc_samples;
  j["mc_seed"] = c.mc_seed ? Json(*c.mc_seed) : Json(nullptr);
  j["sweep"] = {{"p_min_mw", round12(c.sweep.p_min_mw)},
                {"p_max_mw", round12(c.sweep.p_max_mw)},
                {"points", c.sweep.points}};
  return j;
}

void validate_roles(const RunConfig& c, const Graph& g) {
  auto in_range = [&](int v) { return v >= 0 && v < g.size(); };
  if (!in_range(c.alice)) throw InvalidArgument("alice label outside the graph");
  std::set<int> seen{c.alice};
  for (int b : c.bobs) {
    if (!in_range(b)) throw InvalidArgument("bob label outside the graph");
    if (!seen.insert(b).second) throw InvalidArgument("roles overlap");
  }
  if (seen.size() < 2) throw InvalidArgument("need at least two participants");
  if (!c.nonparticipants.empty()) {
    std::set<int> non;
    for (int v : c.nonparticipants) {
      if (!in_range(v)) throw InvalidArgument("nonparticipant label outside the graph");
      if (seen.contains(v) || !non.insert(v).second) throw InvalidArgument("roles overlap");
    }
    if (static_cast<int>(seen.size() + non.size()) != g.size())
      throw InvalidArgument("nonparticipants must list every vertex that is not a participant");
  }
  if (!c.network_frame.empty() && static_cast<int>(c.network_frame.size()) != g.size())
    throw InvalidArgument("network_frame needs one entry per vertex");
  for (const auto& copy : c.schedule)
    for (const auto& [a, b] : copy)
      if (!in_range(a) || !in_range(b)) throw InvalidArgument("schedule label outside the graph");
}

}  // namespace gsnet
