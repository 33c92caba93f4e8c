#include "gsnet/noise/pump_sweep.hpp"

#include <algorithm>

#include "gsnet/core/errors.hpp"

namespace gsnet {

PumpSweepResult pump_sweep(const NoiseModel& model, const std::vector<double>& grid_mw, const ProtocolPlans& plans,
                           Protocol protocol) {
  model.validate();
  if (grid_mw.empty()) throw InvalidArgument("empty pump-power grid");
  for (std::size_t i = 0; i < grid_mw.size(); ++i) {
    if (!(grid_mw[i] >= 0.0)) throw InvalidArgument("pump powers must be nonnegative");
    if (i > 0 && !(grid_mw[i] > grid_mw[i - 1])) throw InvalidArgument("pump-power grid must be increasing");
  }
  ProtocolPlans used;
  if (protocol == Protocol::Nqkd) {
    if (!plans.ghz) throw InvalidArgument("sweep needs a GHZ plan");
    used.ghz = plans.ghz;
  } else {
    if (plans.pairwise.empty()) throw InvalidArgument("sweep needs pairwise plans");
    used.pairwise = plans.pairwise;
  }

  PumpSweepResult out;
  double best = -1.0;
  for (double p : grid_mw) {
    NoiseModel m = model;
    m.white_noise = 1.0 - (1.0 - model.white_noise) * (1.0 - model.pump.white_noise(p));
    const KeyRateReport rep = analytic_report(used, m);
    SweepPoint pt;
    pt.p_mw = p;
    pt.akr = protocol == Protocol::Nqkd ? *rep.akr_n : *rep.akr_2;
    pt.rate_hz = model.pump.rate(p);
    pt.keyrate_hz = std::max(0.0, pt.akr) * pt.rate_hz;
    if (pt.keyrate_hz > best) {
      best = pt.keyrate_hz;
      out.argmax_p = p;
    }
    out.grid.push_back(pt);
  }
  return out;
}

std::vector<double> linear_grid(double lo, double hi, int points) {
  if (points < 2 || !(hi > lo)) throw InvalidArgument("grid needs hi > lo and at least two points");
  std::vector<double> g(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) g[i] = lo + (hi - lo) * i / (points - 1);
  return g;
}

}  // namespace gsnet
