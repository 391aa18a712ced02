// Transition matrix of the two-species exclusion process with reflecting
// boundaries, the symmetric Perk-Schultz chain, and jump enumeration.
//
// Sign convention: H(target, source) = -rate(source -> target) off the
// diagonal, H(source, source) = total exit rate.  Probabilities evolve as
// exp(-H t), so column sums of H vanish.
#ifndef ASEP2_GENERATOR_HPP
#define ASEP2_GENERATOR_HPP

#include <vector>

#include "asep2/config.hpp"
#include "asep2/laurent.hpp"
#include "asep2/operators.hpp"

namespace asep2 {

struct ProcessParams {
  int L = 1;
  Rational w = 1;  // time scale, must be positive
};

struct Jump {
  Configuration target;
  LaurentPoly rate;
};
using JumpList = std::vector<Jump>;

struct NumericJump {
  Configuration target;
  double rate = 0;
};

/// The 9x9 two-site matrix with w factored out.
SparseQMatrix local_hopping_matrix();

/// h_{k,k+1} assembled from embedded single-site operators.
SparseQMatrix hopping_embedded(int k, const ProcessParams& params);

/// H = sum_k h_{k,k+1}.
SparseQMatrix generator(const ProcessParams& params);

/// g_{k,k+1} with every off-diagonal entry replaced by -w.
SparseQMatrix perk_schultz_bond(int k, const ProcessParams& params);
SparseQMatrix perk_schultz(const ProcessParams& params);

/// Moves A0->0A, 0B->B0, AB->BA at w q and their reverses at w/q, one per
/// bond with unequal neighbours, in bond order.
JumpList jumps(const Configuration& c, const Rational& w = 1);
std::vector<NumericJump> numeric_jumps(const Configuration& c, double q0, double w = 1.0);

/// pi H^T pi^-1 for pi diagonal with monomial entries.
SparseQMatrix reversed_generator(const SparseQMatrix& h, const SparseQMatrix& pi_diag);

}  // namespace asep2

#endif  // ASEP2_GENERATOR_HPP
