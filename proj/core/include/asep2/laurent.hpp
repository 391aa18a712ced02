// Exact arithmetic in the Laurent polynomial ring Q[t, 1/t] with t = q^(1/2).
#ifndef ASEP2_LAURENT_HPP
#define ASEP2_LAURENT_HPP

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace asep2 {

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;

/// An element of Q[t, 1/t].  Exponents are stored in half-steps of q, i.e.
/// the term (k, c) means c * t^k = c * q^(k/2).
///
/// The term list is sorted by exponent and never holds a zero coefficient, so
/// structural equality is ring equality.
class LaurentPoly {
 public:
  using Term = std::pair<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& constant);  // NOLINT: implicit by intent
  LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}  // NOLINT
  LaurentPoly(int constant) : LaurentPoly(Rational(constant)) {}   // NOLINT

  /// c * t^half_exponent; the zero polynomial when c == 0.
  static LaurentPoly monomial(const Rational& coeff, int half_exponent);
  /// q^k = t^(2k).
  static LaurentPoly q_power(int k) { return monomial(1, 2 * k); }
  /// q^(k/2) = t^k.
  static LaurentPoly t_power(int k) { return monomial(1, k); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Coefficient of t^k (zero if absent).
  Rational coefficient(int half_exponent) const;
  /// Smallest / largest half-exponent.  Precondition: !is_zero().
  int min_half_exponent() const { return terms_.front().first; }
  int max_half_exponent() const { return terms_.back().first; }

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Multiplies by c * t^k without a general product.
  LaurentPoly times_monomial(const Rational& c, int half_exponent) const;
  /// Inverse of a monomial.  Throws std::domain_error otherwise.
  LaurentPoly monomial_inverse() const;
  /// The image under t -> 1/t (equivalently q -> 1/q).
  LaurentPoly invert_variable() const;
  /// The image under t -> 1, i.e. the sum of coefficients.
  Rational at_one() const;

  /// Canonical rendering, e.g. "1*q^-1 - 2*q^(1/2) + 1*q^1"; "0" for zero.
  std::string to_string() const;

 private:
  void add_scaled(const LaurentPoly& rhs, int sign);

  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Symmetric q-number [n]_q = sum_{k=0}^{n-1} q^(2k-n+1); [-n]_q = -[n]_q.
LaurentPoly q_number(int n);

/// [n]_q! for n >= 0.  Throws std::invalid_argument for n < 0.
LaurentPoly q_factorial(int n);

/// Gaussian binomial C_L(N) = [L]!/([N]![L-N]!), built by q-Pascal recursion.
LaurentPoly q_binomial(int L, int N);

/// C_L(N, M) = C_L(N) * C_{L-N}(M).  Throws std::invalid_argument unless
/// 0 <= N, 0 <= M and N + M <= L.
LaurentPoly q_multinomial(int L, int N, int M);

/// Numeric value at q = q0 > 0 in double precision.  Throws
/// std::invalid_argument for q0 <= 0.
double evaluate(const LaurentPoly& p, double q0);

}  // namespace asep2

#endif  // ASEP2_LAURENT_HPP
