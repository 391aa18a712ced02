// The reversible measure of the two-species process in three closed forms,
// detailed balance and kernel checks, sector partition functions, and the
// small-lattice reference tables.
#ifndef ASEP2_MEASURE_HPP
#define ASEP2_MEASURE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "asep2/config.hpp"
#include "asep2/laurent.hpp"
#include "asep2/report.hpp"

namespace asep2 {

/// Integer q-exponent of the occupation-number form.
int measure_exponent(const Configuration& c);

/// q^{sum_k (2k-L-1)(a_k-b_k) + sum_{k<L} sum_{l<=k} (a_l b_{k+1} - b_l a_{k+1})}.
LaurentPoly measure_occupation(const Configuration& c);
/// q^{sum_i (2x_i-L-1-M_{x_i}) - sum_i (2y_i-L-1-N_{y_i})}, M_x (N_y) counting
/// B (A) particles left of x (y).
LaurentPoly measure_position(const Configuration& c);
/// The double sum of the occupation form with a, b replaced by 1-a, 1-b.
LaurentPoly measure_conjugate(const Configuration& c);

struct MeasureWeight {
  Configuration config;
  LaurentPoly weight;               // single monomial q^k
  int q_exponent = 0;
  std::optional<double> value;      // at q0, normalized if requested
};

struct SectorMeasure {
  int L = 0;
  Sector sector;
  std::vector<MeasureWeight> weights;  // increasing canonical index
  bool normalized = false;
  std::optional<double> q0;

  /// Numeric values, requires q0.
  std::vector<double> values() const;
};

/// Unnormalized weights on the sector.  With q0, numeric values are attached,
/// divided by their sum when normalize is set.
SectorMeasure sector_measure(int L, Sector sector, std::optional<double> q0 = std::nullopt, bool normalize = true);

/// Per-configuration weight used by the detailed balance check.
using WeightFn = std::function<LaurentPoly(const Configuration&)>;

/// pi(eta) w(eta -> eta') = pi(eta') w(eta' -> eta) for every swap, one entry
/// per bond, plus H^rev = H.
RelationReport verify_detailed_balance(int L, const WeightFn& pi = measure_occupation);

/// Occupation, position and conjugate forms and diag(R^2) agree entry-wise.
RelationReport verify_measure_formulas(int L);

/// Sum of the weights over the sector.
LaurentPoly sector_partition(int L, Sector sector);
/// sector_partition against q_multinomial for every sector of L sites.
RelationReport partition_check(int L);

/// Numeric kernel dimension of the sector block of H at q0 (dense Gaussian
/// elimination with partial pivoting, relative tolerance tol).
int sector_kernel_dimension(int L, Sector sector, double q0, double tol = 1e-9);
/// Exact H|pi> = 0 on the sector and kernel dimension 1 at q0.
RelationReport kernel_check(int L, Sector sector, double q0);

/// One block of the reference tables: weight q^exponent for each listed
/// configuration.
struct AppendixSector {
  int L;
  Sector sector;
  std::vector<std::pair<int, std::vector<std::string>>> terms;
};
const std::vector<AppendixSector>& appendix_tables();

/// Piecewise closed-form exponent for N+M <= 4, std::nullopt when no case
/// applies.  The forms hold up to a per-sector constant.
std::optional<int> closed_form_exponent(const PositionRep& pos);

struct AnchorResult {
  int L;
  Sector sector;
  std::optional<int> anchor;  // measure exponent minus closed form, if constant
  bool consistent = false;
};
/// Anchors of the closed forms for one lattice size, sectors with 1 <= N+M <= 4.
std::vector<AnchorResult> closed_form_anchors(int L);

/// Tables for L = 2, 3, 4 exactly, closed forms up to a per-sector monomial
/// for L = 2..max_L.
RelationReport appendix_check(int max_L = 8);

std::string measure_to_json(const SectorMeasure& m, int indent = 2);
std::string measure_to_csv(const SectorMeasure& m);

}  // namespace asep2

#endif  // ASEP2_MEASURE_HPP
