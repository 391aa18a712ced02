// Hand-rolled random generators for property tests.
#ifndef ASEP2_TESTS_GENERATORS_HPP
#define ASEP2_TESTS_GENERATORS_HPP

#include <random>
#include <vector>

#include "asep2/config.hpp"
#include "asep2/laurent.hpp"

namespace asep2::testgen {

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Up to max_terms terms, half-exponents in [-lo_hi, lo_hi], small rational
/// coefficients (zero coefficients are allowed and must vanish).
inline LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 5, int lo_hi = 20) {
  LaurentPoly p;
  const int n = uniform_int(rng, 0, max_terms);
  for (int i = 0; i < n; ++i) {
    const Rational c(uniform_int(rng, -6, 6), uniform_int(rng, 1, 4));
    p += LaurentPoly::monomial(c, uniform_int(rng, -lo_hi, lo_hi));
  }
  return p;
}

inline Configuration random_config(std::mt19937_64& rng, int L) {
  std::vector<SiteState> s;
  for (int k = 0; k < L; ++k) s.push_back(static_cast<SiteState>(uniform_int(rng, 0, 2)));
  return Configuration(std::move(s));
}

}  // namespace asep2::testgen

#endif  // ASEP2_TESTS_GENERATORS_HPP
