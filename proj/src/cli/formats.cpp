#include "gsnet/cli/formats.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "gsnet/core/errors.hpp"

namespace gsnet {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::int64_t parse_int(const std::string& s, int line, const char* what) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError(std::string("bad ") + what + " '" + s + "'", line);
  return v;
}

std::uint64_t parse_uint(const std::string& s, int line, const char* what) {
  const std::int64_t v = parse_int(s, line, what);
  if (v < 0) throw ParseError(std::string(what) + " must be nonnegative", line);
  return static_cast<std::uint64_t>(v);
}

Json number(double x) { return round12(x); }

std::vector<int> to_labels(const std::vector<int>& vs) {
  std::vector<int> out;
  for (int v : vs) out.push_back(v + 1);
  return out;
}

std::vector<int> from_labels(const Json& j) {
  std::vector<int> out;
  for (const auto& x : j) out.push_back(x.get<int>() - 1);
  return out;
}

Json pairs_to_json(const std::vector<std::pair<int, int>>& ps) {
  Json a = Json::array();
  for (const auto& [u, v] : ps) a.push_back(Json::array({u + 1, v + 1}));
  return a;
}

std::vector<std::pair<int, int>> pairs_from_json(const Json& j) {
  std::vector<std::pair<int, int>> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw ParseError("a pair needs two labels");
    out.emplace_back(p[0].get<int>() - 1, p[1].get<int>() - 1);
  }
  return out;
}

SignedPauli signed_pauli_from_string(const std::string& s) {
  if (s.size() != 2 || (s[0] != '+' && s[0] != '-')) throw ParseError("bad signed Pauli '" + s + "'");
  return {pauli_from_char(s[1]), s[0] == '-' ? -1 : 1};
}

template <class T>
std::optional<T> opt(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("failed writing " + path.string());
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::optional<Graph> g;
  int lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    const auto t = tokens(strip_comment(line));
    if (t.empty()) continue;
    if (!g) {
      if (t.size() != 1) throw ParseError("first line must hold the vertex count", lineno);
      const std::int64_t n = parse_int(t[0], lineno, "vertex count");
      if (n < 1 || n > Graph::kMaxVertices)
        throw ParseError("vertex count must lie in 1.." + std::to_string(Graph::kMaxVertices), lineno);
      g.emplace(static_cast<int>(n));
      continue;
    }
    if (t.size() != 2) throw ParseError("expected an edge 'u v'", lineno);
    const std::int64_t u = parse_int(t[0], lineno, "label");
    const std::int64_t v = parse_int(t[1], lineno, "label");
    if (u < 1 || v < 1 || u > g->size() || v > g->size())
      throw ParseError("label out of range 1.." + std::to_string(g->size()), lineno);
    if (u == v) throw ParseError("self-loop", lineno);
    if (g->has_edge(static_cast<int>(u - 1), static_cast<int>(v - 1))) throw ParseError("duplicate edge", lineno);
    g->add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
  }
  if (!g) throw ParseError("empty graph file");
  return *g;
}

Graph parse_graph_file(const std::filesystem::path& path) { return parse_graph(read_file(path)); }

std::string serialize_graph(const Graph& g) {
  std::string out = std::to_string(g.size()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

std::string serialize_counts(const CountsFile& c) {
  const RoundBatch& b = c.batch;
  std::string out = "# gsnet counts file\n";
  out += "resource " + c.resource + "\n";
  out += "round_type " + std::to_string(static_cast<int>(b.setting.type)) + "\n";
  out += "basis " + b.setting.basis_string() + "\n";
  out += "participants";
  for (int v : b.participants) out += " " + std::to_string(v + 1);
  out += "\nseed " + std::to_string(c.seed) + "\n";
  out += "rounds " + std::to_string(c.rounds) + "\n";
  out += "bits count\n";
  for (std::uint64_t o = 0; o < b.counts.size(); ++o)
    out += outcome_string(o, b.size()) + " " + std::to_string(b.counts[o]) + "\n";
  return out;
}

CountsFile parse_counts(const std::string& text, const ExtractionPlan* plan) {
  std::istringstream in(text);
  const std::vector<std::string> keys{"resource", "round_type", "basis", "participants", "seed", "rounds", "bits"};
  std::size_t next_key = 0;
  CountsFile c;
  RoundType type = RoundType::Type1;
  std::string basis;
  std::vector<int> participants;
  std::set<std::uint64_t> seen;
  int lineno = 0;
  bool header_comment = false;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!header_comment) {
      if (line != "# gsnet counts file") throw ParseError("missing '# gsnet counts file' header", lineno);
      header_comment = true;
      continue;
    }
    const auto t = tokens(strip_comment(line));
    if (t.empty()) continue;
    if (next_key < keys.size()) {
      if (t[0] != keys[next_key]) throw ParseError("expected '" + keys[next_key] + "'", lineno);
      switch (next_key) {
        case 0:
          if (t.size() != 2) throw ParseError("resource needs one name", lineno);
          c.resource = t[1];
          break;
        case 1: {
          if (t.size() != 2 || (t[1] != "1" && t[1] != "2")) throw ParseError("round_type must be 1 or 2", lineno);
          type = t[1] == "1" ? RoundType::Type1 : RoundType::Type2;
          break;
        }
        case 2:
          if (t.size() != 2) throw ParseError("basis needs one string", lineno);
          basis = t[1];
          break;
        case 3:
          for (std::size_t k = 1; k < t.size(); ++k) participants.push_back(static_cast<int>(parse_int(t[k], lineno, "label")) - 1);
          break;
        case 4:
          if (t.size() != 2) throw ParseError("seed needs one value", lineno);
          c.seed = parse_uint(t[1], lineno, "seed");
          break;
        case 5:
          if (t.size() != 2) throw ParseError("rounds needs one value", lineno);
          c.rounds = parse_uint(t[1], lineno, "rounds");
          break;
        case 6: {
          if (t.size() != 2 || t[1] != "count") throw ParseError("expected 'bits count'", lineno);
          RoundSetting s;
          s.type = type;
          for (char ch : basis) {
            try {
              s.bases.push_back(pauli_from_char(ch));
            } catch (const InvalidArgument&) {
              throw ParseError(std::string("bad basis letter '") + ch + "'", 3);
            }
          }
          s.signs.assign(s.bases.size(), 1);
          for (int v : participants)
            if (v < 0 || v >= static_cast<int>(s.bases.size()))
              throw ParseError("participant label outside the basis string", 5);
          if (plan) {
            const RoundSetting want = compile_round_settings(*plan, type);
            if (want.bases != s.bases)
              throw MissingSettingError("basis " + basis + " does not match the plan's " + want.basis_string());
            if (participants != plan->participants)
              throw MissingSettingError("participants do not match the plan");
            s.signs = want.signs;
          }
          try {
            c.batch = RoundBatch(std::move(s), participants);
          } catch (const InvalidArgument& e) {
            throw ParseError(e.what(), 5);
          }
          break;
        }
      }
      ++next_key;
      continue;
    }
    if (t.size() != 2) throw ParseError("expected 'bits count'", lineno);
    if (static_cast<int>(t[0].size()) != c.batch.size())
      throw ParseError("bitstring length differs from the participant count", lineno);
    std::uint64_t o = 0;
    try {
      o = parse_outcome(t[0]);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
    if (!seen.insert(o).second) throw ParseError("duplicate outcome " + t[0], lineno);
    c.batch.counts[o] = parse_uint(t[1], lineno, "count");
  }
  if (next_key < keys.size()) throw ParseError("truncated counts header");
  return c;
}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format12(x).c_str(), nullptr);
}

std::string format12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Json plan_to_json(const ExtractionPlan& p) {
  Json j;
  j["kind"] = to_string(p.kind);
  j["network_size"] = p.network_size;
  j["participants"] = to_labels(p.participants);
  j["pairs"] = pairs_to_json(p.pairs);
  j["lc_sequence"] = to_labels(p.lc_sequence);
  j["measured"] = to_labels(p.measured);
  Json bases = Json::array();
  for (const SignedPauli& b : p.measured_bases) bases.push_back(to_string(b));
  j["measured_bases"] = bases;
  j["discarded"] = to_labels(p.discarded);
  Json frames = Json::array();
  for (const LocalClifford& c : p.participant_frames) frames.push_back(c.name());
  j["participant_frames"] = frames;
  Json gens = Json::array();
  for (const auto& row : p.byproduct_generators) {
    std::string s;
    for (Pauli q : row) s.push_back(to_char(q));
    gens.push_back(s);
  }
  j["byproduct_generators"] = gens;
  j["copies_required"] = p.copies_required;
  return j;
}

ExtractionPlan plan_from_json(const Json& j) {
  try {
    ExtractionPlan p;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "ghz") p.kind = ResourceKind::Ghz;
    else if (kind == "bell_multicast") p.kind = ResourceKind::BellMulticast;
    else throw ParseError("unknown plan kind '" + kind + "'");
    p.network_size = j.at("network_size").get<int>();
    p.participants = from_labels(j.at("participants"));
    p.pairs = pairs_from_json(j.at("pairs"));
    p.lc_sequence = from_labels(j.at("lc_sequence"));
    p.measured = from_labels(j.at("measured"));
    for (const auto& b : j.at("measured_bases")) p.measured_bases.push_back(signed_pauli_from_string(b.get<std::string>()));
    p.discarded = from_labels(j.at("discarded"));
    for (const auto& f : j.at("participant_frames")) p.participant_frames.push_back(LocalClifford::named(f.get<std::string>()));
    for (const auto& g : j.at("byproduct_generators")) {
      std::vector<Pauli> row;
      for (char ch : g.get<std::string>()) row.push_back(pauli_from_char(ch));
      if (row.size() != p.participants.size()) throw ParseError("byproduct row length differs from participant count");
      p.byproduct_generators.push_back(std::move(row));
    }
    p.copies_required = j.at("copies_required").get<int>();
    if (p.measured_bases.size() != p.measured.size() || p.byproduct_generators.size() != p.measured.size() ||
        p.participant_frames.size() != p.participants.size())
      throw ParseError("plan arrays have inconsistent lengths");
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed plan: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("malformed plan: ") + e.what());
  }
}

Json report_to_json(const KeyRateReport& r) {
  Json j;
  if (r.ghz) {
    Json g;
    g["alice_choice"] = r.ghz->alice_choice + 1;
    g["qber"] = number(r.ghz->qber);
    g["qx"] = number(r.ghz->qx);
    Json q = Json::array();
    for (const auto& row : r.ghz->pairwise_q) {
      Json jr = Json::array();
      for (double x : row) jr.push_back(number(x));
      q.push_back(jr);
    }
    g["pairwise_q"] = q;
    j["ghz"] = g;
  } else {
    j["ghz"] = nullptr;
  }
  j["akr_n"] = r.akr_n ? number(*r.akr_n) : Json(nullptr);
  Json pr = Json::array();
  for (const PairEstimate& p : r.pairwise) {
    Json e;
    e["link"] = Json::array({p.link.first + 1, p.link.second + 1});
    e["copy"] = p.copy + 1;
    e["qber"] = number(p.qber);
    e["qx"] = number(p.qx);
    e["rate"] = number(p.rate);
    pr.push_back(e);
  }
  j["pairwise_rates"] = pr;
  j["akr_2"] = r.akr_2 ? number(*r.akr_2) : Json(nullptr);
  j["dead_link"] = r.dead_link;
  j["ratio"] = r.ratio ? number(*r.ratio) : Json(nullptr);
  Json copies;
  copies["nqkd"] = r.copies_nqkd ? Json(*r.copies_nqkd) : Json(nullptr);
  copies["2qkd"] = r.copies_2qkd ? Json(*r.copies_2qkd) : Json(nullptr);
  j["copies_per_bit"] = copies;
  Json secure;
  secure["akr_n"] = r.secure_akr_n ? number(*r.secure_akr_n) : Json(nullptr);
  secure["akr_2"] = r.secure_akr_2 ? number(*r.secure_akr_2) : Json(nullptr);
  j["secure_rates"] = secure;
  Json u = Json::object();
  for (const auto& [k, v] : r.uncertainties) u[k] = number(v);
  j["uncertainties"] = u;
  return j;
}

KeyRateReport report_from_json(const Json& j) {
  try {
    KeyRateReport r;
    if (!j.at("ghz").is_null()) {
      const Json& g = j.at("ghz");
      ErrorEstimates e;
      e.alice_choice = g.at("alice_choice").get<int>() - 1;
      e.qber = g.at("qber").get<double>();
      e.qx = g.at("qx").get<double>();
      e.pairwise_q = g.at("pairwise_q").get<std::vector<std::vector<double>>>();
      r.ghz = std::move(e);
    }
    r.akr_n = opt<double>(j, "akr_n");
    for (const auto& e : j.at("pairwise_rates")) {
      PairEstimate p;
      p.link = {e.at("link")[0].get<int>() - 1, e.at("link")[1].get<int>() - 1};
      p.copy = e.at("copy").get<int>() - 1;
      p.qber = e.at("qber").get<double>();
      p.qx = e.at("qx").get<double>();
      p.rate = e.at("rate").get<double>();
      r.pairwise.push_back(p);
    }
    r.akr_2 = opt<double>(j, "akr_2");
    r.dead_link = j.at("dead_link").get<bool>();
    r.ratio = opt<double>(j, "ratio");
    r.copies_nqkd = opt<int>(j.at("copies_per_bit"), "nqkd");
    r.copies_2qkd = opt<int>(j.at("copies_per_bit"), "2qkd");
    r.secure_akr_n = opt<double>(j.at("secure_rates"), "akr_n");
    r.secure_akr_2 = opt<double>(j.at("secure_rates"), "akr_2");
    for (const auto& [k, v] : j.at("uncertainties").items()) r.uncertainties[k] = v.get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

Json mc_to_json(const MonteCarloResult& r) {
  Json j;
  j["point_estimate"] = number(r.point_estimate);
  j["mean"] = number(r.mean);
  j["std"] = number(r.std);
  j["n_samples"] = r.n_samples;
  j["rejected"] = r.rejected;
  j["seed"] = r.seed;
  return j;
}

std::string sweep_csv(const PumpSweepResult& s) {
  std::string out = "p_mW,akr,rate_hz,keyrate_hz\n";
  for (const SweepPoint& p : s.grid)
    out += format12(p.p_mw) + "," + format12(p.akr) + "," + format12(p.rate_hz) + "," + format12(p.keyrate_hz) + "\n";
  return out;
}

}  // namespace gsnet
