// Tensor representations of U_q[gl(3)] on (C^3)^{(x)L}, the diagonal
// similarity R linking the exclusion process to the Perk-Schultz chain, the
// conjugated symmetry generators Y, and exact checks of the algebra and
// commutation identities.
#ifndef ASEP2_SYMMETRY_HPP
#define ASEP2_SYMMETRY_HPP

#include <array>

#include "asep2/config.hpp"
#include "asep2/operators.hpp"
#include "asep2/report.hpp"

namespace asep2 {

enum class Sign { Plus, Minus };

inline int sign_value(Sign s) { return s == Sign::Plus ? 1 : -1; }
const char* sign_suffix(Sign s);

/// Cartan matrix of sl(3).
struct CartanData {
  std::array<std::array<int, 2>, 2> A{{{2, -1}, {-1, 2}}};
  int operator()(int i, int j) const { return A[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }
};

/// Generators of the tensor representation, indices 1-based as in X_1, X_2,
/// H_1, H_2 and L_1, L_2, L_3.
struct Gl3Reps {
  int L;
  SparseQMatrix x1_plus, x1_minus, x2_plus, x2_minus;
  SparseQMatrix h1, h2;  // N - V and V - M
  SparseQMatrix l1, l2, l3;  // q^{-N/2}, q^{-V/2}, q^{-M/2}

  const SparseQMatrix& X(int i, Sign s) const;
  SparseQMatrix& X(int i, Sign s);
  const SparseQMatrix& H(int i) const { return i == 1 ? h1 : h2; }
  const SparseQMatrix& Lj(int j) const { return j == 1 ? l1 : (j == 2 ? l2 : l3); }
};

/// The four matrices Y_1^+-, Y_2^+-.
struct YGenerators {
  SparseQMatrix y1_plus, y1_minus, y2_plus, y2_minus;
  const SparseQMatrix& Y(int i, Sign s) const;
};

/// X_i^{+-}(k): the coproduct-dressed single-site generator on site k.
SparseQMatrix rep_local_X(int i, Sign s, int k, int L);
/// Sum over sites plus the Cartan and L_j diagonals.
Gl3Reps rep_global(int L);
/// q^{1/2} X_1 X_2 - q^{-1/2} X_2 X_1 for the given sign.
SparseQMatrix rep_X3(const Gl3Reps& gens, Sign s);

/// The integer diagonal U of the similarity transform, assembled from
/// embedded projectors.
SparseQMatrix build_U(int L);
/// R = q^{U/2}, diagonal with monomial entries t^{U(eta)}.
SparseQMatrix build_R(int L);

/// Y = R X R^-1 by diagonal conjugation.
YGenerators transform_Y(const Gl3Reps& gens, const SparseQMatrix& r);
/// Closed form of R X_i^{+-}(r) R^-1, e.g. q^{sum_{k<r} v_k - sum_{k>r} v_k} a_r^+.
SparseQMatrix local_Y_closed_form(int i, Sign s, int r, int L);

/// Which configuration the global counts in the entry-wise formulas for Y
/// refer to: the column (source) or the row (target).
enum class CountReading { Source, Target };

/// Y_i^{+-} assembled entry by entry from the particle-count exponents, e.g.
/// (Y_1^+(k))_{eta' eta} = q^{2 V_k - V} v_k delta(eta', eta^{k-}).
YGenerators entrywise_Y(int L, CountReading reading);

/// Compares entrywise_Y under both readings against transform_Y.
RelationReport compare_entrywise_Y(int L);

/// gl(3) relations: commuting L_j, L_i X_j L_i^-1 weights, [X_i^+, X_j^-],
/// and cubic Serre.
RelationReport verify_gl3(const Gl3Reps& gens);

/// sl(3) relations in Cartan form, the X_3 quadratic relations, and the
/// local nilpotency and ordering relations of the coproduct pieces.
RelationReport verify_sl3(const Gl3Reps& gens);

/// Operands of the symmetry checks.  Built once, optionally perturbed for
/// negative controls, then verified.
struct SymmetryContext {
  int L;
  SparseQMatrix H;
  SparseQMatrix G;
  std::vector<SparseQMatrix> g_bonds;  // g_{k,k+1}, k = 1..L-1
  Gl3Reps gens;
  SparseQMatrix R;
};
SymmetryContext make_symmetry_context(int L);

/// [H, Y_i] = [H, L_j] = 0 with Y = R X R^-1, per-bond [g, X_i] = [g, H_i] = 0.
RelationReport verify_symmetry(const SymmetryContext& ctx);
/// G = R^-1 H R and H^T = R^-2 H R^2.
RelationReport verify_similarity(const SymmetryContext& ctx);

/// <s_00| (X_1^-)^N (X_2^+)^M = [N]! [M]! <s_NM| q^{U/2}, and the closed
/// shifted-coordinate exponent of R on the sector.
RelationReport lowering_construction_check(int L, Sector sector);

/// Conjugation by p^{a_l}, p^{b_l}, p^{a_l b_m} (p = q and q^2), conjugation
/// of the local creation/annihilation/exchange operators by R, and the
/// bond-pair rescalings R a_k a_{k+1} R^-1 = q^{-+1} a_k a_{k+1} and so on.
RelationReport verify_transformation_lemmas(int L);

}  // namespace asep2

#endif  // ASEP2_SYMMETRY_HPP
