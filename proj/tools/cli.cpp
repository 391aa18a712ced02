#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "asep2/generator.hpp"
#include "asep2/measure.hpp"
#include "asep2/operators.hpp"
#include "asep2/report.hpp"
#include "asep2/simulation.hpp"
#include "asep2/symmetry.hpp"

namespace asep2::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Hidden negative-control option: double one entry of a named matrix.
struct Corruption {
  std::string target;
  std::uint32_t row = 0;  // 1-based
  std::uint32_t col = 0;
};

std::optional<Corruption> parse_corruption(const std::string& spec) {
  if (spec.empty()) return std::nullopt;
  const auto colon = spec.rfind(':');
  const auto comma = spec.find(',', colon == std::string::npos ? 0 : colon);
  if (colon == std::string::npos || comma == std::string::npos) throw UsageError("--corrupt expects TARGET:ROW,COL");
  Corruption c;
  c.target = spec.substr(0, colon);
  try {
    const long r = std::stol(spec.substr(colon + 1, comma - colon - 1));
    const long k = std::stol(spec.substr(comma + 1));
    if (r < 1 || k < 1) throw UsageError("--corrupt indices are 1-based");
    c.row = static_cast<std::uint32_t>(r);
    c.col = static_cast<std::uint32_t>(k);
  } catch (const std::logic_error&) {
    throw UsageError("--corrupt expects TARGET:ROW,COL");
  }
  return c;
}

void corrupt_entry(SparseQMatrix& m, const Corruption& c) {
  if (c.row > m.dim() || c.col > m.dim()) throw UsageError("--corrupt index outside the matrix");
  const LaurentPoly v = m.get(c.row - 1, c.col - 1);
  m.set(c.row - 1, c.col - 1, v.is_zero() ? LaurentPoly(1) : v * LaurentPoly(2));
}

bool parse_generator_name(const std::string& name, char letter, int& i, Sign& s) {
  if (name.size() != 3 || name[0] != letter || (name[1] != '1' && name[1] != '2') || (name[2] != '+' && name[2] != '-'))
    return false;
  i = name[1] - '0';
  s = name[2] == '+' ? Sign::Plus : Sign::Minus;
  return true;
}

void check_sites(int L, int cap, bool force) {
  if (L < 1) throw UsageError("--sites must be >= 1");
  if (L > cap && !force) throw UsageError("--sites above the default cap of " + std::to_string(cap) + " (use --force)");
}

int emit_report(const RelationReport& report, std::ostream& out, std::ostream& err) {
  out << report.to_json() << "\n";
  for (const std::string& name : report.failed_relations()) err << "failed: " << name << "\n";
  return report.all_hold() ? kExitOk : kExitFailed;
}

int verify_algebra(int L, const std::optional<Corruption>& corrupt, std::ostream& out, std::ostream& err) {
  Gl3Reps gens = rep_global(L);
  if (corrupt) {
    int i;
    Sign s;
    if (!parse_generator_name(corrupt->target, 'X', i, s)) throw UsageError("verify algebra corrupts X1+, X1-, X2+ or X2-");
    corrupt_entry(gens.X(i, s), *corrupt);
  }
  RelationReport report = verify_gl3(gens);
  report.append(verify_sl3(gens));
  report.append(verify_transformation_lemmas(L));
  for (int n = 0; n <= L; ++n)
    for (int m = 0; n + m <= L; ++m) report.append(lowering_construction_check(L, {n, m}));
  return emit_report(report, out, err);
}

int verify_symmetry_cmd(int L, const std::optional<Corruption>& corrupt, std::ostream& out, std::ostream& err) {
  SymmetryContext ctx = make_symmetry_context(L);
  if (corrupt) {
    int i;
    Sign s;
    if (corrupt->target == "H") {
      corrupt_entry(ctx.H, *corrupt);
    } else if (corrupt->target == "G") {
      corrupt_entry(ctx.G, *corrupt);
    } else if (parse_generator_name(corrupt->target, 'X', i, s)) {
      corrupt_entry(ctx.gens.X(i, s), *corrupt);
    } else {
      throw UsageError("verify symmetry corrupts H, G, X1+, X1-, X2+ or X2-");
    }
  }
  RelationReport report = verify_similarity(ctx);
  report.append(verify_symmetry(ctx));
  return emit_report(report, out, err);
}

std::string format_q1(const SparseQMatrix& m) {
  std::ostringstream s;
  m.for_each([&s](std::uint32_t r, std::uint32_t c, const LaurentPoly& v) {
    const Rational x = v.at_one();
    if (x != 0) s << r + 1 << " " << c + 1 << " " << x.get_str() << "\n";
  });
  return s.str();
}

SparseQMatrix dump_target(const std::string& target, const std::string& name, int L) {
  if (target == "generator") return generator({L, 1});
  if (target == "perk-schultz") return perk_schultz({L, 1});
  if (target == "rmatrix") return build_R(L);
  if (target == "rep") {
    int i;
    Sign s;
    const Gl3Reps gens = rep_global(L);
    if (parse_generator_name(name, 'X', i, s)) return gens.X(i, s);
    if (parse_generator_name(name, 'Y', i, s)) return transform_Y(gens, build_R(L)).Y(i, s);
    if (name == "H1" || name == "H2") return gens.H(name[1] - '0');
    if (name == "L1" || name == "L2" || name == "L3") return gens.Lj(name[1] - '0');
    throw UsageError("unknown representation matrix '" + name + "'");
  }
  throw UsageError("unknown dump target '" + target + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-species exclusion process: exact algebra, stationary measure and simulation", "asep2"};
  app.require_subcommand(1);

  int sites = 0;
  bool force = false;
  std::string corrupt_spec;

  auto* verify = app.add_subcommand("verify", "Exact verification of algebraic identities");
  verify->require_subcommand(1);
  auto* v_alg = verify->add_subcommand("algebra", "Quantum algebra relations of the tensor representation");
  auto* v_sym = verify->add_subcommand("symmetry", "Symmetries of the generator and the similarity transform");
  for (auto* sub : {v_alg, v_sym}) {
    sub->add_option("--sites", sites, "Number of lattice sites")->required();
    sub->add_flag("--force", force, "Allow sizes above the default cap");
    sub->add_option("--corrupt", corrupt_spec)->group("");
  }

  int n = 0, m = 0;
  std::optional<double> q;
  bool normalize = false;
  std::string format = "json";
  auto* stat = app.add_subcommand("stationary", "Unnormalized reversible measure on a sector");
  stat->add_option("--sites", sites)->required();
  stat->add_option("--n", n, "Number of A particles")->required();
  stat->add_option("--m", m, "Number of B particles")->required();
  stat->add_option("--q", q, "Numeric value of q");
  stat->add_flag("--normalize", normalize, "Normalize numeric values (requires --q)");
  stat->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  stat->add_flag("--force", force);

  auto* check = app.add_subcommand("check", "Reference tables and measure identities");
  check->require_subcommand(1);
  int max_sites = 8;
  auto* c_app = check->add_subcommand("appendix", "Small-lattice tables and closed forms");
  c_app->add_option("--max-sites", max_sites, "Largest lattice for the closed forms")->check(CLI::Range(2, 12));
  auto* c_part = check->add_subcommand("partition", "Sector sums against q-multinomials");
  c_part->add_option("--sites", sites)->required();
  c_part->add_flag("--force", force);
  double kernel_q = 1.5;
  auto* c_meas = check->add_subcommand("measure", "Detailed balance, stationarity and formula agreement");
  c_meas->add_option("--sites", sites)->required();
  c_meas->add_option("--q", kernel_q, "q used for the numeric kernel dimension")->check(CLI::PositiveNumber);
  c_meas->add_flag("--force", force);
  auto* c_entry = check->add_subcommand("entrywise", "Entry-wise Y formulas against R X R^-1, both count readings");
  c_entry->add_option("--sites", sites)->required();
  c_entry->add_flag("--force", force);

  double q_sim = 1, w = 1, burn_in = 0.1;
  std::optional<double> t_max, events;
  std::uint64_t seed = 0;
  int replicas = 1;
  bool compare = false;
  std::string summary_path, initial;
  std::string sim_format = "csv";
  auto* sim = app.add_subcommand("simulate", "Gillespie simulation on a sector");
  sim->add_option("--sites", sites)->required();
  sim->add_option("--n", n)->required();
  sim->add_option("--m", m)->required();
  sim->add_option("--q", q_sim)->required()->check(CLI::PositiveNumber);
  sim->add_option("--w", w, "Rate scale")->check(CLI::PositiveNumber);
  auto* t_opt = sim->add_option("--t-max", t_max, "Simulated time per replica");
  auto* e_opt = sim->add_option("--events", events, "Events per replica");
  t_opt->excludes(e_opt);
  sim->add_option("--seed", seed);
  sim->add_option("--replicas", replicas)->check(CLI::PositiveNumber);
  sim->add_option("--burn-in", burn_in, "Fraction of each replica discarded");
  sim->add_option("--initial", initial, "Starting configuration (default: uniform in the sector)");
  sim->add_flag("--compare", compare, "Add exact probabilities and the TV distance");
  sim->add_option("--summary", summary_path, "Write the summary JSON here");
  sim->add_option("--format", sim_format)->check(CLI::IsMember({"csv", "json"}));

  std::string dump_what, dump_name;
  bool q1 = false;
  auto* dump_cmd = app.add_subcommand("dump", "Print a matrix as 'row col entry' lines");
  dump_cmd->add_option("target", dump_what, "generator | perk-schultz | rep | rmatrix")->required();
  dump_cmd->add_option("name", dump_name, "Matrix name for rep: X1+, Y2-, H1, L3, ...");
  dump_cmd->add_option("--sites", sites)->required();
  dump_cmd->add_flag("--q1", q1, "Evaluate entries at q = 1");
  dump_cmd->add_flag("--force", force);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    const auto corrupt = parse_corruption(corrupt_spec);
    if (v_alg->parsed()) {
      check_sites(sites, kAlgebraCap, force);
      return verify_algebra(sites, corrupt, out, err);
    }
    if (v_sym->parsed()) {
      check_sites(sites, kSymmetryCap, force);
      return verify_symmetry_cmd(sites, corrupt, out, err);
    }
    if (stat->parsed()) {
      check_sites(sites, kMeasureCap, force);
      if (normalize && !q) throw UsageError("--normalize requires --q");
      if (q && !(*q > 0)) throw UsageError("--q must be positive");
      if (!Sector{n, m}.valid_for(sites)) throw UsageError("invalid sector");
      const SectorMeasure measure = sector_measure(sites, {n, m}, q, normalize);
      out << (format == "csv" ? measure_to_csv(measure) : measure_to_json(measure) + "\n");
      return kExitOk;
    }
    if (c_app->parsed()) return emit_report(appendix_check(max_sites), out, err);
    if (c_part->parsed()) {
      check_sites(sites, kMeasureCap, force);
      return emit_report(partition_check(sites), out, err);
    }
    if (c_meas->parsed()) {
      check_sites(sites, kMeasureCap, force);
      RelationReport report = verify_detailed_balance(sites);
      report.append(verify_measure_formulas(sites));
      for (int a = 0; a <= sites; ++a)
        for (int b = 0; a + b <= sites; ++b) report.append(kernel_check(sites, {a, b}, kernel_q));
      return emit_report(report, out, err);
    }
    if (c_entry->parsed()) {
      check_sites(sites, kAlgebraCap, force);
      const RelationReport report = compare_entrywise_Y(sites);
      out << report.to_json() << "\n";
      bool target_holds = true;
      for (const auto& r : report.results())
        if (r.relation.find("(target counts)") != std::string::npos) target_holds = target_holds && r.holds;
      return target_holds ? kExitOk : kExitFailed;
    }
    if (sim->parsed()) {
      SimConfig cfg;
      cfg.L = sites;
      cfg.sector = {n, m};
      cfg.q0 = q_sim;
      cfg.w = w;
      cfg.seed = seed;
      cfg.burn_in = burn_in;
      cfg.replicas = replicas;
      if (events) {
        if (!(*events >= 1) || *events != std::floor(*events)) throw UsageError("--events must be a positive integer");
        cfg.n_events = static_cast<std::uint64_t>(*events);
      } else {
        cfg.t_max = t_max.value_or(1e5);
      }
      if (!initial.empty()) cfg.initial = Configuration::parse(initial);
      try {
        cfg.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const EmpiricalMeasure emp = run(cfg);
      if (emp.absorbing)
        err << "warning: absorbing state, the sector has a single configuration without moves\n";
      std::optional<SectorMeasure> exact;
      std::optional<double> tv;
      if (compare) {
        exact = sector_measure(cfg.L, cfg.sector, cfg.q0, true);
        tv = tv_distance(emp, *exact);
      }
      const std::string summary = simulation_summary_json(cfg, emp, tv);
      if (sim_format == "json") {
        out << summary << "\n";
      } else {
        out << simulation_csv(emp, exact ? &*exact : nullptr);
        if (tv) err << "tv_distance " << *tv << "\n";
      }
      std::string path = summary_path;
      if (path.empty()) {
        if (const char* dir = std::getenv("ASEP2_OUTPUT_DIR"); dir && *dir)
          path = (std::filesystem::path(dir) / "simulate_summary.json").string();
      }
      if (!path.empty()) {
        std::ofstream f(path);
        if (!f) throw std::runtime_error("cannot write " + path);
        f << summary << "\n";
      }
      return kExitOk;
    }
    if (dump_cmd->parsed()) {
      check_sites(sites, kMeasureCap, force);
      const SparseQMatrix mat = dump_target(dump_what, dump_name, sites);
      out << (q1 ? format_q1(mat) : dump(mat));
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace asep2::cli
