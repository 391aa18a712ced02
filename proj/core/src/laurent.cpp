#include "asep2/laurent.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

namespace asep2 {

LaurentPoly::LaurentPoly(const Rational& constant) {
  Rational c = constant;
  c.canonicalize();  // mpq_class(num, den) is not reduced
  if (c != 0) terms_.emplace_back(0, std::move(c));
}

LaurentPoly LaurentPoly::monomial(const Rational& coeff, int half_exponent) {
  LaurentPoly p;
  Rational c = coeff;
  c.canonicalize();
  if (c != 0) p.terms_.emplace_back(half_exponent, std::move(c));
  return p;
}

Rational LaurentPoly::coefficient(int half_exponent) const {
  for (const auto& [k, c] : terms_) {
    if (k == half_exponent) return c;
    if (k > half_exponent) break;
  }
  return 0;
}

void LaurentPoly::add_scaled(const LaurentPoly& rhs, int sign) {
  if (rhs.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.emplace_back(b->first, sign > 0 ? b->second : Rational(-b->second));
      ++b;
    } else {
      Rational c = sign > 0 ? Rational(a->second + b->second) : Rational(a->second - b->second);
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  add_scaled(rhs, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  add_scaled(rhs, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_monomial()) return b.times_monomial(a.terms_[0].second, a.terms_[0].first);
  if (b.is_monomial()) return a.times_monomial(b.terms_[0].second, b.terms_[0].first);
  // Terms are sorted, so the product exponents lie in [lo, lo + span].
  const int lo = a.terms_.front().first + b.terms_.front().first;
  const auto span = static_cast<std::size_t>(a.terms_.back().first + b.terms_.back().first - lo);
  if (span > 4 * a.terms_.size() * b.terms_.size() + 64) {
    std::map<int, Rational> sparse;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) sparse[ka + kb] += ca * cb;
    LaurentPoly out;
    for (auto& [k, c] : sparse)
      if (c != 0) out.terms_.emplace_back(k, std::move(c));
    return out;
  }
  std::vector<Rational> acc(span + 1);
  std::vector<char> touched(span + 1, 0);
  Rational prod;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      const auto slot = static_cast<std::size_t>(ka + kb - lo);
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      acc[slot] += prod;
      touched[slot] = 1;
    }
  }
  LaurentPoly out;
  for (std::size_t i = 0; i <= span; ++i) {
    if (touched[i] && acc[i] != 0) out.terms_.emplace_back(lo + static_cast<int>(i), std::move(acc[i]));
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out = a;
  for (auto& term : out.terms_) term.second = -term.second;
  return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

LaurentPoly LaurentPoly::times_monomial(const Rational& coeff, int half_exponent) const {
  LaurentPoly out;
  Rational c = coeff;
  c.canonicalize();
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& [k, v] : terms_) out.terms_.emplace_back(k + half_exponent, v * c);
  return out;
}

LaurentPoly LaurentPoly::monomial_inverse() const {
  if (!is_monomial()) throw std::domain_error("only monomials are invertible in Q[t, 1/t]");
  return monomial(Rational(1) / terms_[0].second, -terms_[0].first);
}

LaurentPoly LaurentPoly::invert_variable() const {
  LaurentPoly out;
  out.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) out.terms_.emplace_back(-it->first, it->second);
  return out;
}

Rational LaurentPoly::at_one() const {
  Rational s = 0;
  for (const auto& term : terms_) s += term.second;
  return s;
}

namespace {

std::string render_power(int half_exponent) {
  if (half_exponent % 2 == 0) return "q^" + std::to_string(half_exponent / 2);
  return "q^(" + std::to_string(half_exponent) + "/2)";
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (first) {
      os << c.get_str();
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ") << Rational(abs(c)).get_str();
    }
    os << '*' << render_power(k);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly q_number(int n) {
  if (n < 0) return -q_number(-n);
  LaurentPoly out;
  for (int k = 0; k < n; ++k) out += LaurentPoly::q_power(2 * k - n + 1);
  return out;
}

LaurentPoly q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
  LaurentPoly out = 1;
  for (int k = 2; k <= n; ++k) out *= q_number(k);
  return out;
}

LaurentPoly q_binomial(int L, int N) {
  if (L < 0 || N < 0 || N > L) throw std::invalid_argument("q_binomial: need 0 <= N <= L");
  // Row-by-row q-Pascal: C_n(k) = q^{-k} C_{n-1}(k) + q^{n-k} C_{n-1}(k-1).
  std::vector<LaurentPoly> row{LaurentPoly(1)};
  for (int n = 1; n <= L; ++n) {
    std::vector<LaurentPoly> next(n + 1);
    for (int k = 0; k <= n; ++k) {
      if (k < n) next[k] += row[k].times_monomial(1, -2 * k);
      if (k > 0) next[k] += row[k - 1].times_monomial(1, 2 * (n - k));
    }
    row = std::move(next);
  }
  return row[N];
}

LaurentPoly q_multinomial(int L, int N, int M) {
  if (N < 0 || M < 0 || N + M > L) throw std::invalid_argument("q_multinomial: need 0 <= N, M and N + M <= L");
  return q_binomial(L, N) * q_binomial(L - N, M);
}

double evaluate(const LaurentPoly& p, double q0) {
  if (!(q0 > 0)) throw std::invalid_argument("evaluate: q0 must be positive");
  double sum = 0;
  for (const auto& [k, c] : p.terms()) sum += c.get_d() * std::pow(q0, 0.5 * k);
  return sum;
}

}  // namespace asep2
