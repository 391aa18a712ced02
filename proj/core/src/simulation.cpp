#include "asep2/simulation.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "asep2/generator.hpp"

namespace asep2 {

std::uint64_t replica_seed(std::uint64_t seed, int replica) {
  std::uint64_t z = seed + static_cast<std::uint64_t>(replica) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double uniform_open0(SimRng& rng) { return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53; }

void SimConfig::validate() const {
  if (L < 1) throw std::invalid_argument("lattice size must be >= 1");
  if (!sector.valid_for(L)) throw std::invalid_argument("invalid sector");
  if (!(q0 > 0) || !std::isfinite(q0)) throw std::invalid_argument("q0 must be positive");
  if (!(w > 0) || !std::isfinite(w)) throw std::invalid_argument("w must be positive");
  if (t_max.has_value() == n_events.has_value()) throw std::invalid_argument("set exactly one of t_max and n_events");
  if (t_max && !(*t_max > 0)) throw std::invalid_argument("t_max must be positive");
  if (n_events && *n_events == 0) throw std::invalid_argument("n_events must be positive");
  if (!(burn_in >= 0 && burn_in < 1)) throw std::invalid_argument("burn_in must lie in [0, 1)");
  if (replicas < 1) throw std::invalid_argument("replicas must be >= 1");
  if (initial && (initial->size() != L || initial->sector() != sector))
    throw std::invalid_argument("initial configuration is not in the sector");
}

double EmpiricalMeasure::probability(const Configuration& c) const {
  if (total_time <= 0) return 0;
  auto it = dwell.find(c);
  return it == dwell.end() ? 0 : it->second / total_time;
}

namespace {

// Index of the move selected by u in (0, 1] against cumulative rates.
std::size_t select_move(const std::vector<double>& cumulative, double u) {
  const double target = u * cumulative.back();
  for (std::size_t i = 0; i + 1 < cumulative.size(); ++i)
    if (target <= cumulative[i]) return i;
  return cumulative.size() - 1;
}

struct StateTable {
  std::vector<std::size_t> targets;
  std::vector<double> cumulative;
};

}  // namespace

StepResult step(const Configuration& state, double q0, double w, SimRng& rng) {
  const auto moves = numeric_jumps(state, q0, w);
  if (moves.empty()) return {state, 0, true};
  std::vector<double> cumulative;
  double total = 0;
  for (const auto& m : moves) cumulative.push_back(total += m.rate);
  const double dwell = -std::log(uniform_open0(rng)) / total;
  const std::size_t pick = select_move(cumulative, uniform_open0(rng));
  return {moves[pick].target, dwell, false};
}

EmpiricalMeasure run_replica(const SimConfig& cfg, int replica) {
  cfg.validate();
  SimRng rng(replica_seed(cfg.seed, replica));

  const std::vector<Configuration> states = enumerate_sector(cfg.L, cfg.sector);
  std::unordered_map<std::uint64_t, std::size_t> local;
  for (std::size_t i = 0; i < states.size(); ++i) local[states[i].index()] = i;
  std::vector<StateTable> table(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    double total = 0;
    for (const auto& m : numeric_jumps(states[i], cfg.q0, cfg.w)) {
      table[i].targets.push_back(local.at(m.target.index()));
      table[i].cumulative.push_back(total += m.rate);
    }
  }

  std::size_t cur = cfg.initial ? local.at(cfg.initial->index())
                                : static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(states.size()));
  std::vector<double> dwell(states.size(), 0.0);
  EmpiricalMeasure out{cfg.L, cfg.sector, {}, 0, 0, false};

  if (table[cur].targets.empty()) {
    out.absorbing = true;
    const double span = cfg.t_max ? *cfg.t_max * (1 - cfg.burn_in) : 1.0;
    dwell[cur] = span;
  } else if (cfg.t_max) {
    const double t_end = *cfg.t_max;
    const double t_start = cfg.burn_in * t_end;
    double t = 0;
    while (t < t_end) {
      const StateTable& s = table[cur];
      const double tau = -std::log(uniform_open0(rng)) / s.cumulative.back();
      const double lo = std::max(t, t_start);
      const double hi = std::min(t + tau, t_end);
      if (hi > lo) dwell[cur] += hi - lo;
      t += tau;
      if (t >= t_end) break;
      cur = s.targets[select_move(s.cumulative, uniform_open0(rng))];
      ++out.events;
    }
  } else {
    const std::uint64_t n = *cfg.n_events;
    const auto skip = static_cast<std::uint64_t>(cfg.burn_in * static_cast<double>(n));
    for (std::uint64_t e = 0; e < n; ++e) {
      const StateTable& s = table[cur];
      const double tau = -std::log(uniform_open0(rng)) / s.cumulative.back();
      if (e >= skip) dwell[cur] += tau;
      cur = s.targets[select_move(s.cumulative, uniform_open0(rng))];
      ++out.events;
    }
  }

  for (std::size_t i = 0; i < states.size(); ++i) {
    if (dwell[i] > 0) out.dwell[states[i]] = dwell[i];
    out.total_time += dwell[i];
  }
  return out;
}

EmpiricalMeasure run(const SimConfig& cfg) {
  cfg.validate();
  EmpiricalMeasure merged{cfg.L, cfg.sector, {}, 0, 0, false};
  for (int r = 0; r < cfg.replicas; ++r) {
    const EmpiricalMeasure one = run_replica(cfg, r);
    for (const auto& [c, t] : one.dwell) merged.dwell[c] += t;
    merged.total_time += one.total_time;
    merged.events += one.events;
    merged.absorbing = merged.absorbing || one.absorbing;
  }
  return merged;
}

double tv_distance(const EmpiricalMeasure& emp, const SectorMeasure& exact) {
  if (emp.L != exact.L || emp.sector != exact.sector) throw std::invalid_argument("sector mismatch");
  if (!exact.normalized) throw std::invalid_argument("exact measure must be normalized");
  double sum = 0;
  for (const auto& w : exact.weights) sum += std::abs(emp.probability(w.config) - *w.value);
  for (const auto& [c, t] : emp.dwell)
    if (c.sector() != exact.sector) throw std::invalid_argument("empirical support outside the sector");
  return 0.5 * sum;
}

std::string simulation_csv(const EmpiricalMeasure& emp, const SectorMeasure* exact) {
  std::string out = exact ? "config,dwell_time,empirical_prob,exact_prob,abs_diff\n" : "config,dwell_time,empirical_prob\n";
  char buf[160];
  for (const Configuration& c : enumerate_sector(emp.L, emp.sector)) {
    auto it = emp.dwell.find(c);
    const double t = it == emp.dwell.end() ? 0.0 : it->second;
    const double p = emp.probability(c);
    std::snprintf(buf, sizeof buf, "%.17g,%.17g", t, p);
    out += c.to_string() + "," + buf;
    if (exact) {
      double e = 0;
      for (const auto& w : exact->weights)
        if (w.config == c) e = *w.value;
      std::snprintf(buf, sizeof buf, ",%.17g,%.17g", e, std::abs(p - e));
      out += buf;
    }
    out += "\n";
  }
  return out;
}

std::string simulation_summary_json(const SimConfig& cfg, const EmpiricalMeasure& emp, std::optional<double> tv,
                                    int indent) {
  nlohmann::ordered_json j;
  j["L"] = cfg.L;
  j["N"] = cfg.sector.N;
  j["M"] = cfg.sector.M;
  j["q0"] = cfg.q0;
  j["w"] = cfg.w;
  j["seed"] = cfg.seed;
  j["rng"] = kRngName;
  j["replicas"] = cfg.replicas;
  j["t_max"] = cfg.t_max ? nlohmann::ordered_json(*cfg.t_max) : nlohmann::ordered_json(nullptr);
  j["n_events"] = cfg.n_events ? nlohmann::ordered_json(*cfg.n_events) : nlohmann::ordered_json(nullptr);
  j["burn_in"] = cfg.burn_in;
  j["total_time"] = emp.total_time;
  j["events"] = emp.events;
  j["absorbing"] = emp.absorbing;
  j["tv_distance"] = tv ? nlohmann::ordered_json(*tv) : nlohmann::ordered_json(nullptr);
  return j.dump(indent);
}

}  // namespace asep2
