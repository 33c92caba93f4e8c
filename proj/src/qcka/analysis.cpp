#include "gsnet/qcka/analysis.hpp"

#include <algorithm>

#include "gsnet/core/errors.hpp"
#include "gsnet/router/schedule.hpp"

namespace gsnet {

namespace {

void check_setting(const ResourceData& r) {
  for (const auto* b : {&r.type1, &r.type2}) {
    const RoundSetting want = compile_round_settings(r.plan, b->setting.type);
    if (b->setting.bases != want.bases || b->setting.signs != want.signs)
      throw MissingSettingError("counts were taken with basis " + b->setting.basis_string() +
                                " but the plan needs " + want.basis_string());
    if (b->participants != r.plan.participants)
      throw MissingSettingError("counts cover different participants than the plan");
  }
  if (r.type1.setting.type != RoundType::Type1 || r.type2.setting.type != RoundType::Type2)
    throw MissingSettingError("need one type-1 and one type-2 batch per resource");
}

std::vector<int> pair_union(const std::vector<ExtractionPlan>& pairwise) {
  std::vector<int> vs;
  for (const ExtractionPlan& p : pairwise)
    for (const auto& [a, b] : p.pairs) {
      vs.push_back(a);
      vs.push_back(b);
    }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

}  // namespace

KeyRateReport assemble_report(const ExtractionPlan* ghz, std::optional<ErrorEstimates> ghz_estimates,
                              const std::vector<ExtractionPlan>& pairwise, std::vector<PairEstimate> pair_estimates) {
  if (!ghz && pairwise.empty()) throw MissingSettingError("no resources to report on");
  if (static_cast<bool>(ghz) != ghz_estimates.has_value())
    throw InvalidArgument("GHZ estimates must accompany the GHZ plan");
  KeyRateReport rep;

  if (ghz) {
    if (ghz->kind != ResourceKind::Ghz) throw InvalidArgument("GHZ slot carries a multicast plan");
    rep.akr_n = akr_n(ghz_estimates->qber, ghz_estimates->qx);
    rep.secure_akr_n = std::max(0.0, *rep.akr_n);
    rep.copies_nqkd = network_use_accounting({*ghz}, Protocol::Nqkd);
    rep.ghz = std::move(ghz_estimates);
  }

  if (!pairwise.empty()) {
    std::vector<std::vector<Link>> copies(pairwise.size());
    std::map<Link, double> rates;
    std::size_t next = 0;
    for (std::size_t c = 0; c < pairwise.size(); ++c) {
      if (pairwise[c].kind != ResourceKind::BellMulticast)
        throw InvalidArgument("pairwise slot carries a GHZ plan");
      for (const Link& l : pairwise[c].pairs) {
        if (next >= pair_estimates.size() || pair_estimates[next].link != l)
          throw InvalidArgument("pair estimates do not follow the plans");
        PairEstimate& pe = pair_estimates[next++];
        pe.copy = static_cast<int>(c);
        pe.rate = akr_n(pe.qber, pe.qx);
        if (rates.contains(l)) throw InvalidArgument("the same link appears on two copies");
        rates[l] = pe.rate;
        copies[c].push_back(l);
      }
    }
    if (next != pair_estimates.size()) throw InvalidArgument("pair estimates do not follow the plans");
    rep.copies_2qkd = network_use_accounting(pairwise, Protocol::TwoQkd);
    const Akr2 a2 = conference_rate(copies, rates);
    rep.akr_2 = a2.value;
    rep.dead_link = a2.dead_link;
    rep.secure_akr_2 = std::max(0.0, a2.value);
    rep.pairwise = std::move(pair_estimates);
  }

  if (ghz && !pairwise.empty()) {
    if (pair_union(pairwise) != ghz->participants)
      throw InvalidArgument("GHZ and pairwise data involve different participants");
    if (*rep.akr_2 > 0.0) rep.ratio = *rep.akr_n / *rep.akr_2;
  }
  return rep;
}

KeyRateReport analyze_unchecked(const ProtocolData& data) {
  std::optional<ErrorEstimates> ghz_est;
  if (data.ghz) {
    ghz_est = estimate_qber(data.ghz->type1);
    ghz_est->qx = estimate_qx(data.ghz->type2);
  }
  std::vector<ExtractionPlan> plans;
  std::vector<PairEstimate> pairs;
  for (const ResourceData& r : data.pairwise) {
    plans.push_back(r.plan);
    for (const auto& [a, b] : r.plan.pairs) {
      const int i = r.plan.participant_index(a);
      const int j = r.plan.participant_index(b);
      PairEstimate pe;
      pe.link = {a, b};
      pe.qber = pairwise_error(r.type1, i, j);
      pe.qx = estimate_qx(r.type2, {i, j});
      pairs.push_back(pe);
    }
  }
  return assemble_report(data.ghz ? &data.ghz->plan : nullptr, std::move(ghz_est), plans, std::move(pairs));
}

KeyRateReport analyze(const ProtocolData& data) {
  if (data.ghz) check_setting(*data.ghz);
  for (const ResourceData& r : data.pairwise) check_setting(r);
  return analyze_unchecked(data);
}

}  // namespace gsnet
