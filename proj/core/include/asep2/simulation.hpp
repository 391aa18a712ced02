// Continuous-time Monte Carlo of the exclusion process (direct Gillespie
// method) and comparison against the exact stationary measure.
#ifndef ASEP2_SIMULATION_HPP
#define ASEP2_SIMULATION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>

#include "asep2/config.hpp"
#include "asep2/measure.hpp"

namespace asep2 {

using SimRng = std::mt19937_64;
inline constexpr const char* kRngName = "mt19937_64";

/// Seed of replica r: splitmix64(seed + r * 0x9E3779B97F4A7C15).
std::uint64_t replica_seed(std::uint64_t seed, int replica);

/// Uniform in (0, 1] from the top 53 bits of one draw.
double uniform_open0(SimRng& rng);

struct SimConfig {
  int L = 1;
  Sector sector;
  double q0 = 1.0;
  double w = 1.0;
  std::uint64_t seed = 0;
  std::optional<double> t_max;              // simulated time per replica
  std::optional<std::uint64_t> n_events;    // events per replica
  double burn_in = 0.1;                     // fraction discarded
  int replicas = 1;
  std::optional<Configuration> initial;     // default: uniform in the sector

  /// Throws std::invalid_argument on an inconsistent configuration.
  void validate() const;
};

struct EmpiricalMeasure {
  int L = 0;
  Sector sector;
  std::map<Configuration, double> dwell;  // observed time per configuration
  double total_time = 0;
  std::uint64_t events = 0;
  bool absorbing = false;  // a replica started in a state without moves

  double probability(const Configuration& c) const;
};

struct StepResult {
  Configuration next;
  double dwell = 0;
  bool absorbing = false;
};

/// One Gillespie step: exponential dwell at the total exit rate, then a move
/// chosen proportionally to its rate.  Draws the dwell first, then the move.
StepResult step(const Configuration& state, double q0, double w, SimRng& rng);

/// A single replica seeded with replica_seed(cfg.seed, r).
EmpiricalMeasure run_replica(const SimConfig& cfg, int replica);
/// All replicas merged in replica order.
EmpiricalMeasure run(const SimConfig& cfg);

/// 1/2 sum |emp - exact| over the sector; exact must carry normalized values.
double tv_distance(const EmpiricalMeasure& emp, const SectorMeasure& exact);

/// config,dwell_time,empirical_prob[,exact_prob,abs_diff]
std::string simulation_csv(const EmpiricalMeasure& emp, const SectorMeasure* exact = nullptr);
std::string simulation_summary_json(const SimConfig& cfg, const EmpiricalMeasure& emp,
                                    std::optional<double> tv = std::nullopt, int indent = 2);

}  // namespace asep2

#endif  // ASEP2_SIMULATION_HPP
