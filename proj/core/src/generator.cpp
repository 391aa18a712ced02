#include "asep2/generator.hpp"

#include <stdexcept>

namespace asep2 {

namespace {

void check_params(const ProcessParams& params) {
  if (params.L < 1) throw std::invalid_argument("lattice size must be >= 1");
  if (params.w <= 0) throw std::invalid_argument("rate scale w must be positive");
}

SparseQMatrix pair(const SiteOperator& u, const SiteOperator& v, int k, int L) {
  return embed(u, k, L) * embed(v, k + 1, L);
}

struct BondTerms {
  SparseQMatrix diag_forward;   // multiplied by w q
  SparseQMatrix diag_backward;  // multiplied by w / q
  SparseQMatrix hop_forward;    // A0->0A, 0B->B0, AB->BA
  SparseQMatrix hop_backward;
};

BondTerms bond_terms(int k, int L) {
  if (k < 1 || k >= L) throw std::out_of_range("bond index out of range");
  const SiteOps& o = site_ops();
  return {
      pair(o.a_hat, o.v_hat, k, L) + pair(o.v_hat, o.b_hat, k, L) + pair(o.a_hat, o.b_hat, k, L),
      pair(o.v_hat, o.a_hat, k, L) + pair(o.b_hat, o.v_hat, k, L) + pair(o.b_hat, o.a_hat, k, L),
      pair(o.a_minus, o.a_plus, k, L) + pair(o.b_plus, o.b_minus, k, L) + pair(o.c_minus, o.c_plus, k, L),
      pair(o.a_plus, o.a_minus, k, L) + pair(o.b_minus, o.b_plus, k, L) + pair(o.c_plus, o.c_minus, k, L),
  };
}

}  // namespace

SparseQMatrix local_hopping_matrix() {
  // Rows and columns in basis order AA, A0, AB, 0A, 00, 0B, BA, B0, BB.
  const LaurentPoly q = LaurentPoly::q_power(1);
  const LaurentPoly qi = LaurentPoly::q_power(-1);
  SparseQMatrix h(9);
  h.set(1, 1, q);
  h.set(1, 3, -qi);
  h.set(2, 2, q);
  h.set(2, 6, -qi);
  h.set(3, 1, -q);
  h.set(3, 3, qi);
  h.set(5, 5, q);
  h.set(5, 7, -qi);
  h.set(6, 2, -q);
  h.set(6, 6, qi);
  h.set(7, 5, -q);
  h.set(7, 7, qi);
  return h;
}

SparseQMatrix hopping_embedded(int k, const ProcessParams& params) {
  check_params(params);
  const BondTerms t = bond_terms(k, params.L);
  const LaurentPoly wq = LaurentPoly::monomial(params.w, 2);
  const LaurentPoly wqi = LaurentPoly::monomial(params.w, -2);
  return (t.diag_forward - t.hop_forward).scaled(wq) + (t.diag_backward - t.hop_backward).scaled(wqi);
}

SparseQMatrix generator(const ProcessParams& params) {
  check_params(params);
  SparseQMatrix h(basis_dimension(params.L));
  for (int k = 1; k < params.L; ++k) h += hopping_embedded(k, params);
  return h;
}

SparseQMatrix perk_schultz_bond(int k, const ProcessParams& params) {
  check_params(params);
  const BondTerms t = bond_terms(k, params.L);
  const LaurentPoly wq = LaurentPoly::monomial(params.w, 2);
  const LaurentPoly wqi = LaurentPoly::monomial(params.w, -2);
  const LaurentPoly w = LaurentPoly(params.w);
  return t.diag_forward.scaled(wq) + t.diag_backward.scaled(wqi) - (t.hop_forward + t.hop_backward).scaled(w);
}

SparseQMatrix perk_schultz(const ProcessParams& params) {
  check_params(params);
  SparseQMatrix g(basis_dimension(params.L));
  for (int k = 1; k < params.L; ++k) g += perk_schultz_bond(k, params);
  return g;
}

namespace {

// +1 for a move at rate w q, -1 for w/q, 0 when the neighbours are equal.
int bias(SiteState left, SiteState right) {
  if (left == right) return 0;
  return code(right) > code(left) ? +1 : -1;
}

}  // namespace

JumpList jumps(const Configuration& c, const Rational& w) {
  JumpList out;
  for (int k = 1; k < c.size(); ++k) {
    const int b = bias(c.at(k), c.at(k + 1));
    if (b == 0) continue;
    out.push_back({c.swap(k), LaurentPoly::monomial(w, 2 * b)});
  }
  return out;
}

std::vector<NumericJump> numeric_jumps(const Configuration& c, double q0, double w) {
  if (!(q0 > 0) || !(w > 0)) throw std::invalid_argument("q0 and w must be positive");
  std::vector<NumericJump> out;
  for (int k = 1; k < c.size(); ++k) {
    const int b = bias(c.at(k), c.at(k + 1));
    if (b == 0) continue;
    out.push_back({c.swap(k), b > 0 ? w * q0 : w / q0});
  }
  return out;
}

SparseQMatrix reversed_generator(const SparseQMatrix& h, const SparseQMatrix& pi_diag) {
  return conjugate_by_diagonal(pi_diag, h.transpose());
}

}  // namespace asep2
