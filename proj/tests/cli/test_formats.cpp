#include <doctest.h>

#include <random>

#include "gsnet/cli/formats.hpp"
#include "gsnet/core/errors.hpp"
#include "support/fixtures.hpp"

using namespace gsnet;

namespace {

int parse_error_line(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

CountsFile sample_counts(RoundType t) {
  const ExtractionPlan p = fixture::six_node_ghz_plan();
  CountsFile c{"ghz", RoundBatch(compile_round_settings(p, t), p.participants), 42, 1000};
  for (std::size_t i = 0; i < c.batch.counts.size(); ++i) c.batch.counts[i] = i * 3 % 7;
  return c;
}

}  // namespace

TEST_CASE("graph files") {
  const Graph g = parse_graph("6\n1 2\n2 4\n3 4\n4 6\n5 6\n");
  CHECK(g == Graph(6, fixture::kSixNodeEdges));
  CHECK(g.edge_count() == 5);
  CHECK(parse_graph("1\n").size() == 1);
  CHECK(parse_graph("# comment\n\n3\n1 2  # trailing\n").has_edge(0, 1));
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 12;
    Graph r(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() & 1) r.add_edge(u, v);
    CHECK(parse_graph(serialize_graph(r)) == r);
  }
}

TEST_CASE("graph file errors carry line numbers") {
  CHECK(parse_error_line("x\n") == 1);
  CHECK(parse_error_line("3\n1 2\n1 4\n") == 3);
  CHECK(parse_error_line("3\n2 2\n") == 2);
  CHECK(parse_error_line("# c\n3\n1 2\n2 1\n") == 4);
  CHECK(parse_error_line("3\n1 2 3\n") == 2);
  CHECK(parse_error_line("0\n") == 1);
  CHECK(parse_error_line("") == 0);
  CHECK(parse_error_line("3\n1 -2\n") == 2);
}

TEST_CASE("counts files round trip and check the plan") {
  const ExtractionPlan p = fixture::six_node_ghz_plan();
  for (RoundType t : {RoundType::Type1, RoundType::Type2}) {
    const CountsFile c = sample_counts(t);
    const std::string text = serialize_counts(c);
    CHECK(parse_counts(text, &p) == c);
    CHECK(parse_counts(text).batch.counts == c.batch.counts);
  }
  const std::string t1 = serialize_counts(sample_counts(RoundType::Type1));
  CHECK(t1.find("basis ZZXXZZ") != std::string::npos);
  CHECK(t1.find("participants 1 2 5 6") != std::string::npos);
  std::string wrong = t1;
  wrong.replace(wrong.find("ZZXXZZ"), 6, "ZZZZZZ");
  CHECK_THROWS_AS(parse_counts(wrong, &p), MissingSettingError);
  CHECK_NOTHROW(parse_counts(wrong));
}

TEST_CASE("a sixteen-row file sums to its total") {
  std::string text = "# gsnet counts file\nresource ghz\nround_type 1\nbasis ZZXXZZ\nparticipants 1 2 5 6\nseed 0\nrounds 0\nbits count\n";
  std::uint64_t want = 0;
  for (int i = 0; i < 16; ++i) {
    std::string bits;
    for (int b = 3; b >= 0; --b) bits += char('0' + (i >> b & 1));
    text += bits + " " + std::to_string(i * i) + "\n";
    want += static_cast<std::uint64_t>(i * i);
  }
  const auto p = fixture::six_node_ghz_plan();
  CHECK(parse_counts(text, &p).batch.total() == want);
  // Missing rows count as zero.
  CHECK(parse_counts(text.substr(0, text.find("0001"))).batch.total() == 0);
}

TEST_CASE("counts file errors") {
  const std::string good = serialize_counts(sample_counts(RoundType::Type1));
  auto mutate = [&](const std::string& from, const std::string& to) {
    std::string s = good;
    s.replace(s.find(from), from.size(), to);
    return s;
  };
  CHECK_THROWS_AS(parse_counts(mutate("# gsnet counts file", "# other")), ParseError);
  CHECK_THROWS_AS(parse_counts(mutate("round_type 1", "round_type 3")), ParseError);
  CHECK_THROWS_AS(parse_counts(mutate("0000 0", "000 0")), ParseError);
  CHECK_THROWS_AS(parse_counts(mutate("0000 0", "0000 -1")), ParseError);
  CHECK_THROWS_AS(parse_counts(mutate("0001 3", "0000 3")), ParseError);
  CHECK_THROWS_AS(parse_counts(good.substr(0, 40)), ParseError);
  try {
    parse_counts(mutate("0010 6", "0010 x"));
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 11);
  }
}

TEST_CASE("plans and reports survive JSON") {
  const ExtractionPlan p = fixture::six_node_ghz_plan();
  CHECK(plan_from_json(Json::parse(plan_to_json(p).dump())) == p);
  for (const auto& q : fixture::six_node_pair_plans()) CHECK(plan_from_json(plan_to_json(q)) == q);
  const Json j = plan_to_json(p);
  CHECK(j["participants"] == Json::array({1, 2, 5, 6}));
  CHECK_THROWS_AS(plan_from_json(Json::parse(R"({"kind": "star"})")), ParseError);

  KeyRateReport r;
  r.ghz = ErrorEstimates{{{0, 0.1}, {0.1, 0}}, 0.1, 0.05, 1};
  r.akr_n = 0.25;
  r.secure_akr_n = 0.25;
  r.copies_nqkd = 1;
  r.uncertainties["qber"] = 0.01;
  const KeyRateReport back = report_from_json(report_to_json(r));
  CHECK(back.akr_n == r.akr_n);
  CHECK(back.ghz->alice_choice == 1);
  CHECK(back.uncertainties == r.uncertainties);
  CHECK_FALSE(back.akr_2.has_value());
}

TEST_CASE("number formatting") {
  CHECK(format12(0.1) == "0.1");
  CHECK(format12(2.0870817391234567) == "2.08708173912");
  CHECK(round12(1.0 / 3) == doctest::Approx(0.333333333333).epsilon(1e-15));
}
