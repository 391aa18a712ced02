#include "asep2/measure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "asep2/generator.hpp"
#include "asep2/symmetry.hpp"

namespace asep2 {

namespace {

void check_sector(int L, Sector sector) {
  if (L < 1) throw std::invalid_argument("lattice size must be >= 1");
  if (!sector.valid_for(L)) throw std::invalid_argument("invalid sector");
}

std::string sector_tag(Sector s) { return "(N,M)=(" + std::to_string(s.N) + "," + std::to_string(s.M) + ")"; }

std::vector<Sector> all_sectors(int L) {
  std::vector<Sector> out;
  for (int n = 0; n <= L; ++n)
    for (int m = 0; n + m <= L; ++m) out.push_back({n, m});
  return out;
}

}  // namespace

int measure_exponent(const Configuration& c) {
  const int L = c.size();
  int e = 0;
  for (int k = 1; k <= L; ++k) {
    const Occupation o = c.occupations(k);
    e += (2 * k - L - 1) * (o.a - o.b);
  }
  // Running prefix sums turn the double sum into a single pass.
  int a_left = 0, b_left = 0;
  for (int k = 1; k < L; ++k) {
    const Occupation ok = c.occupations(k);
    a_left += ok.a;
    b_left += ok.b;
    const Occupation next = c.occupations(k + 1);
    e += a_left * next.b - b_left * next.a;
  }
  return e;
}

LaurentPoly measure_occupation(const Configuration& c) { return LaurentPoly::q_power(measure_exponent(c)); }

LaurentPoly measure_position(const Configuration& c) {
  const int L = c.size();
  const PositionRep pos = c.to_positions();
  int e = 0;
  for (int x : pos.x) e += 2 * x - L - 1 - c.left_counts(x).M;
  for (int y : pos.y) e -= 2 * y - L - 1 - c.left_counts(y).N;
  return LaurentPoly::q_power(e);
}

LaurentPoly measure_conjugate(const Configuration& c) {
  const int L = c.size();
  int e = 0;
  for (int k = 1; k < L; ++k) {
    for (int l = 1; l <= k; ++l) {
      const Occupation ol = c.occupations(l);
      const Occupation on = c.occupations(k + 1);
      e += (1 - ol.a) * (1 - on.b) - (1 - ol.b) * (1 - on.a);
    }
  }
  return LaurentPoly::q_power(e);
}

std::vector<double> SectorMeasure::values() const {
  std::vector<double> out;
  out.reserve(weights.size());
  for (const auto& w : weights) {
    if (!w.value) throw std::logic_error("measure has no numeric values");
    out.push_back(*w.value);
  }
  return out;
}

SectorMeasure sector_measure(int L, Sector sector, std::optional<double> q0, bool normalize) {
  check_sector(L, sector);
  if (q0 && !(*q0 > 0)) throw std::invalid_argument("q0 must be positive");
  SectorMeasure m;
  m.L = L;
  m.sector = sector;
  m.q0 = q0;
  for (Configuration& c : enumerate_sector(L, sector)) {
    const int e = measure_exponent(c);
    m.weights.push_back({std::move(c), LaurentPoly::q_power(e), e, std::nullopt});
  }
  if (q0) {
    double total = 0;
    for (auto& w : m.weights) {
      w.value = std::pow(*q0, w.q_exponent);
      total += *w.value;
    }
    if (normalize) {
      for (auto& w : m.weights) *w.value /= total;
      m.normalized = true;
    }
  }
  return m;
}

RelationReport verify_detailed_balance(int L, const WeightFn& pi) {
  if (L < 1) throw std::invalid_argument("lattice size must be >= 1");
  RelationReport report;
  const std::uint64_t dim = basis_dimension(L);
  std::vector<RelationResult> bonds;
  for (int k = 1; k < L; ++k)
    bonds.push_back({"detailed balance on bond " + std::to_string(k) + "," + std::to_string(k + 1), L, true,
                     std::nullopt, {}});

  auto rate_to = [](const Configuration& from, const Configuration& to) {
    for (const Jump& j : jumps(from))
      if (j.target == to) return j.rate;
    throw std::logic_error("no jump between the given configurations");
  };

  for (std::uint64_t idx = 1; idx <= dim; ++idx) {
    const Configuration eta = Configuration::decode(idx, L);
    for (int k = 1; k < L; ++k) {
      if (eta.at(k) == eta.at(k + 1)) continue;
      const Configuration other = eta.swap(k);
      if (other.index() < idx) continue;  // each unordered pair once
      RelationResult& r = bonds[static_cast<std::size_t>(k - 1)];
      if (!r.holds) continue;
      const LaurentPoly lhs = pi(eta) * rate_to(eta, other);
      const LaurentPoly rhs = pi(other) * rate_to(other, eta);
      if (lhs != rhs) {
        r.holds = false;
        r.first_mismatch = EntryDiff{static_cast<std::uint32_t>(other.offset()), static_cast<std::uint32_t>(eta.offset()),
                                     lhs, rhs};
        r.detail = eta.to_string() + " <-> " + other.to_string();
      }
    }
  }
  for (auto& r : bonds) report.add(std::move(r));

  const SparseQMatrix h = generator({L, 1});
  report.check("H^rev = pi H^T pi^-1 = H", L, reversed_generator(h, diagonal_lift(pi, L)), h);
  return report;
}

RelationReport verify_measure_formulas(int L) {
  if (L < 1) throw std::invalid_argument("lattice size must be >= 1");
  RelationReport report;
  const SparseQMatrix occ = diagonal_lift(measure_occupation, L);
  const SparseQMatrix r = build_R(L);
  report.check("occupation form = position form", L, occ, diagonal_lift(measure_position, L));
  report.check("occupation form = conjugate form", L, occ, diagonal_lift(measure_conjugate, L));
  report.check("occupation form = diag(R^2)", L, occ, r * r);
  return report;
}

LaurentPoly sector_partition(int L, Sector sector) {
  check_sector(L, sector);
  LaurentPoly z;
  for (const Configuration& c : enumerate_sector(L, sector)) z += measure_occupation(c);
  return z;
}

RelationReport partition_check(int L) {
  if (L < 1) throw std::invalid_argument("lattice size must be >= 1");
  RelationReport report;
  for (Sector s : all_sectors(L)) {
    LaurentPoly z = sector_partition(L, s);
    LaurentPoly c = q_multinomial(L, s.N, s.M);
    RelationResult r{"sector sum = C_L(N,M) " + sector_tag(s), L, z == c, std::nullopt, {}};
    if (!r.holds) r.first_mismatch = EntryDiff{0, 0, std::move(z), std::move(c)};
    report.add(std::move(r));
  }
  return report;
}

namespace {

// Sector block of H evaluated at q0, rows and columns in sector order.
std::vector<std::vector<double>> numeric_block(const SparseQMatrix& h, const std::vector<Configuration>& configs,
                                               double q0) {
  std::map<std::uint32_t, std::size_t> pos;
  for (std::size_t i = 0; i < configs.size(); ++i) pos[static_cast<std::uint32_t>(configs[i].offset())] = i;
  std::vector<std::vector<double>> a(configs.size(), std::vector<double>(configs.size(), 0.0));
  for (std::size_t i = 0; i < configs.size(); ++i) {
    for (const auto& [col, v] : h.row(static_cast<std::uint32_t>(configs[i].offset()))) {
      auto it = pos.find(col);
      if (it == pos.end()) throw std::logic_error("generator leaves the sector");
      a[i][it->second] = evaluate(v, q0);
    }
  }
  return a;
}

int numeric_rank(std::vector<std::vector<double>> a, double tol) {
  const std::size_t n = a.size();
  double scale = 0;
  for (const auto& row : a)
    for (double v : row) scale = std::max(scale, std::abs(v));
  if (scale == 0) return 0;
  const double eps = tol * scale;
  int rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t piv = r;
    for (std::size_t i = r + 1; i < n; ++i)
      if (std::abs(a[i][c]) > std::abs(a[piv][c])) piv = i;
    if (std::abs(a[piv][c]) <= eps) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < n; ++i) {
      const double f = a[i][c] / a[r][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace

int sector_kernel_dimension(int L, Sector sector, double q0, double tol) {
  check_sector(L, sector);
  if (!(q0 > 0)) throw std::invalid_argument("q0 must be positive");
  const auto configs = enumerate_sector(L, sector);
  const auto block = numeric_block(generator({L, 1}), configs, q0);
  return static_cast<int>(configs.size()) - numeric_rank(block, tol);
}

RelationReport kernel_check(int L, Sector sector, double q0) {
  check_sector(L, sector);
  if (!(q0 > 0)) throw std::invalid_argument("q0 must be positive");
  RelationReport report;
  const SparseQMatrix h = generator({L, 1});
  QVector pi(h.dim());
  for (const Configuration& c : enumerate_sector(L, sector)) pi.set(static_cast<std::uint32_t>(c.offset()), measure_occupation(c));
  const QVector residual = apply(h, pi);
  RelationResult exact{"H |pi> = 0 " + sector_tag(sector), L, residual.is_zero(), std::nullopt, {}};
  if (!exact.holds) {
    const auto& [i, v] = *residual.entries().begin();
    exact.first_mismatch = EntryDiff{i, 0, v, LaurentPoly()};
  }
  report.add(std::move(exact));

  const int dim = sector_kernel_dimension(L, sector, q0);
  std::ostringstream detail;
  detail << "kernel dimension " << dim << " at q0=" << q0;
  report.add({"dim ker H = 1 on sector " + sector_tag(sector), L, dim == 1, std::nullopt, detail.str()});
  return report;
}

namespace {

using Positions = std::vector<int>;
struct ClosedCase {
  bool (*when)(const Positions& x, const Positions& y);
  int offset;
};
struct ClosedForm {
  Sector sector;
  std::vector<ClosedCase> cases;
};

bool always(const Positions&, const Positions&) { return true; }

// Literal transcription of the piecewise forms; positions are sorted.
const std::vector<ClosedForm>& closed_forms() {
  static const std::vector<ClosedForm> forms = {
      {{1, 0}, {{always, -1}}},
      {{0, 1}, {{always, 1}}},
      {{2, 0}, {{always, -2}}},
      {{1, 1},
       {{[](const Positions& x, const Positions& y) { return y[0] < x[0]; }, -1},
        {[](const Positions& x, const Positions& y) { return y[0] > x[0]; }, 1}}},
      {{0, 2}, {{always, 2}}},
      {{3, 0}, {{always, -3}}},
      {{2, 1},
       {{[](const Positions& x, const Positions& y) { return y[0] < x[0] && y[0] < x[1]; }, -3},
        {[](const Positions& x, const Positions& y) { return x[0] < y[0] && y[0] < x[1]; }, -1},
        {[](const Positions& x, const Positions& y) { return x[0] < y[0] && x[1] < y[0]; }, 1}}},
      {{1, 2},
       {{[](const Positions& x, const Positions& y) { return y[0] < x[0] && y[1] < x[0]; }, -1},
        {[](const Positions& x, const Positions& y) { return y[0] < x[0] && x[0] < y[1]; }, 1},
        {[](const Positions& x, const Positions& y) { return x[0] < y[0] && x[0] < y[1]; }, 3}}},
      {{0, 3}, {{always, 3}}},
      {{4, 0}, {{always, -4}}},
      {{3, 1},
       {{[](const Positions& x, const Positions& y) { return y[0] < x[0] && y[0] < x[1] && y[0] < x[2]; }, -5},
        {[](const Positions& x, const Positions& y) { return x[0] < y[0] && y[0] < x[1] && y[0] < x[2]; }, -3},
        {[](const Positions& x, const Positions& y) { return x[0] < y[0] && x[1] < y[0] && y[0] < x[2]; }, -1},
        {[](const Positions& x, const Positions& y) { return x[0] < y[0] && x[1] < y[0] && x[2] < y[0]; }, 1}}},
      {{2, 2},
       {{[](const Positions& x, const Positions& y) { return y[1] < x[0]; }, -4},
        {[](const Positions& x, const Positions& y) { return y[0] < x[0] && x[0] < y[1] && y[1] < x[1]; }, -2},
        {[](const Positions& x, const Positions& y) { return y[0] < x[0] && x[1] < y[1]; }, 0},
        {[](const Positions& x, const Positions& y) { return x[0] < y[0] && y[1] < x[1]; }, 0},
        {[](const Positions& x, const Positions& y) { return x[0] < y[0] && y[0] < x[1] && x[1] < y[1]; }, 2},
        {[](const Positions& x, const Positions& y) { return x[1] < y[0]; }, 4}}},
      {{1, 3},
       {{[](const Positions& x, const Positions& y) { return y[2] < x[0]; }, -1},
        {[](const Positions& x, const Positions& y) { return y[1] < x[0] && x[0] < y[2]; }, 1},
        {[](const Positions& x, const Positions& y) { return y[0] < x[0] && x[0] < y[1]; }, 3},
        {[](const Positions& x, const Positions& y) { return x[0] < y[0]; }, 5}}},
      {{0, 4}, {{always, 4}}},
  };
  return forms;
}

}  // namespace

std::optional<int> closed_form_exponent(const PositionRep& pos) {
  const Sector s{static_cast<int>(pos.x.size()), static_cast<int>(pos.y.size())};
  for (const ClosedForm& f : closed_forms()) {
    if (f.sector != s) continue;
    int base = 0;
    for (int x : pos.x) base += 2 * x;
    for (int y : pos.y) base -= 2 * y;
    for (const ClosedCase& c : f.cases)
      if (c.when(pos.x, pos.y)) return base + c.offset;
    return std::nullopt;
  }
  return std::nullopt;
}

std::vector<AnchorResult> closed_form_anchors(int L) {
  if (L < 1) throw std::invalid_argument("lattice size must be >= 1");
  std::vector<AnchorResult> out;
  for (Sector s : all_sectors(L)) {
    if (s.N + s.M < 1 || s.N + s.M > 4) continue;
    AnchorResult r{L, s, std::nullopt, true};
    for (const Configuration& c : enumerate_sector(L, s)) {
      const auto closed = closed_form_exponent(c.to_positions());
      const LaurentPoly w = measure_position(c);
      if (!closed) {
        r.consistent = false;
        break;
      }
      const int diff = w.min_half_exponent() / 2 - *closed;
      if (!r.anchor) r.anchor = diff;
      if (*r.anchor != diff) {
        r.consistent = false;
        break;
      }
    }
    if (!r.consistent) r.anchor.reset();
    out.push_back(r);
  }
  return out;
}

RelationReport appendix_check(int max_L) {
  RelationReport report;
  for (const AppendixSector& table : appendix_tables()) {
    const int L = table.L;
    std::map<std::uint32_t, LaurentPoly> listed;
    bool well_formed = true;
    for (const auto& [e, configs] : table.terms) {
      for (const std::string& text : configs) {
        const Configuration c = Configuration::parse(text);
        if (c.size() != L || c.sector() != table.sector) well_formed = false;
        listed[static_cast<std::uint32_t>(c.offset())] += LaurentPoly::q_power(e);
      }
    }
    RelationResult r{"appendix table L=" + std::to_string(L) + " " + sector_tag(table.sector), L, well_formed,
                     std::nullopt, {}};
    if (!well_formed) r.detail = "table lists configurations outside the sector";
    const auto configs = enumerate_sector(L, table.sector);
    if (r.holds && listed.size() != configs.size()) {
      r.holds = false;
      r.detail = "table lists " + std::to_string(listed.size()) + " configurations, sector has " +
                 std::to_string(configs.size());
    }
    for (const Configuration& c : configs) {
      if (!r.holds) break;
      const auto i = static_cast<std::uint32_t>(c.offset());
      const auto it = listed.find(i);
      LaurentPoly expected = it == listed.end() ? LaurentPoly() : it->second;
      LaurentPoly got = measure_occupation(c);
      if (got != expected) {
        r.holds = false;
        r.first_mismatch = EntryDiff{i, i, std::move(got), std::move(expected)};
        r.detail = c.to_string();
      }
    }
    report.add(std::move(r));
  }

  for (int L = 2; L <= max_L; ++L) {
    for (const AnchorResult& a : closed_form_anchors(L)) {
      RelationResult r{"closed form L=" + std::to_string(L) + " " + sector_tag(a.sector), L, a.consistent,
                       std::nullopt, {}};
      r.detail = a.consistent ? "global factor q^" + std::to_string(*a.anchor) : "no constant factor";
      report.add(std::move(r));
    }
  }
  return report;
}

std::string measure_to_json(const SectorMeasure& m, int indent) {
  nlohmann::ordered_json j;
  j["L"] = m.L;
  j["N"] = m.sector.N;
  j["M"] = m.sector.M;
  j["normalized"] = m.normalized;
  j["q0"] = m.q0 ? nlohmann::ordered_json(*m.q0) : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json weights = nlohmann::ordered_json::array();
  for (const auto& w : m.weights) {
    weights.push_back({{"config", w.config.to_string()},
                       {"q_exponent", w.q_exponent},
                       {"value", w.value ? nlohmann::ordered_json(*w.value) : nlohmann::ordered_json(nullptr)}});
  }
  j["weights"] = std::move(weights);
  return j.dump(indent);
}

std::string measure_to_csv(const SectorMeasure& m) {
  std::string out = "config,q_exponent,value\n";
  char buf[64];
  for (const auto& w : m.weights) {
    out += w.config.to_string() + "," + std::to_string(w.q_exponent) + ",";
    if (w.value) {
      std::snprintf(buf, sizeof buf, "%.17g", *w.value);
      out += buf;
    }
    out += "\n";
  }
  return out;
}

}  // namespace asep2
