#include "asep2/operators.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace asep2 {

SiteOperator SiteOperator::unit(SiteState row, SiteState col) {
  SiteOperator u;
  u.m[code(row)][code(col)] = 1;
  return u;
}

SiteOperator SiteOperator::identity() {
  SiteOperator u;
  for (int i = 0; i < 3; ++i) u.m[i][i] = 1;
  return u;
}

SiteOperator operator+(const SiteOperator& a, const SiteOperator& b) {
  SiteOperator out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.m[i][j] = a.m[i][j] + b.m[i][j];
  return out;
}

SiteOperator operator-(const SiteOperator& a, const SiteOperator& b) {
  SiteOperator out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.m[i][j] = a.m[i][j] - b.m[i][j];
  return out;
}

SiteOperator operator*(const SiteOperator& a, const SiteOperator& b) {
  SiteOperator out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out.m[i][j] += a.m[i][k] * b.m[k][j];
  return out;
}

bool SiteOperator::is_zero() const {
  for (const auto& r : m)
    for (const auto& v : r)
      if (!v.is_zero()) return false;
  return true;
}

const SiteOps& site_ops() {
  static const SiteOps ops = [] {
    using S = SiteState;
    SiteOps o;
    o.a_plus = SiteOperator::unit(S::A, S::E);
    o.b_plus = SiteOperator::unit(S::B, S::E);
    o.c_plus = SiteOperator::unit(S::A, S::B);
    o.a_minus = SiteOperator::unit(S::E, S::A);
    o.b_minus = SiteOperator::unit(S::E, S::B);
    o.c_minus = SiteOperator::unit(S::B, S::A);
    o.a_hat = SiteOperator::unit(S::A, S::A);
    o.v_hat = SiteOperator::unit(S::E, S::E);
    o.b_hat = SiteOperator::unit(S::B, S::B);
    o.one = SiteOperator::identity();
    return o;
  }();
  return ops;
}

namespace {

std::uint32_t checked_dim(std::uint64_t dim) {
  if (dim == 0 || dim > std::numeric_limits<std::uint32_t>::max()) throw std::invalid_argument("bad dimension");
  return static_cast<std::uint32_t>(dim);
}

}  // namespace

SparseQMatrix::SparseQMatrix(std::uint64_t dim) : dim_(checked_dim(dim)), rows_(dim_) {}

SparseQMatrix SparseQMatrix::identity(std::uint64_t dim) {
  SparseQMatrix out(dim);
  for (std::uint32_t i = 0; i < out.dim_; ++i) out.rows_[i].emplace(i, LaurentPoly(1));
  return out;
}

SparseQMatrix SparseQMatrix::diagonal(const std::vector<LaurentPoly>& entries) {
  SparseQMatrix out(entries.size());
  for (std::uint32_t i = 0; i < out.dim_; ++i)
    if (!entries[i].is_zero()) out.rows_[i].emplace(i, entries[i]);
  return out;
}

std::size_t SparseQMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

void SparseQMatrix::check_index(std::uint32_t r, std::uint32_t c) const {
  if (r >= dim_ || c >= dim_) throw std::out_of_range("matrix index out of range");
}

void SparseQMatrix::check_same_dim(const SparseQMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw std::invalid_argument("matrix dimension mismatch");
}

LaurentPoly SparseQMatrix::get(std::uint32_t r, std::uint32_t c) const {
  check_index(r, c);
  auto it = rows_[r].find(c);
  return it == rows_[r].end() ? LaurentPoly() : it->second;
}

void SparseQMatrix::set(std::uint32_t r, std::uint32_t c, LaurentPoly v) {
  check_index(r, c);
  if (v.is_zero()) {
    rows_[r].erase(c);
  } else {
    rows_[r][c] = std::move(v);
  }
}

void SparseQMatrix::add_to(std::uint32_t r, std::uint32_t c, const LaurentPoly& v) {
  check_index(r, c);
  if (v.is_zero()) return;
  auto [it, inserted] = rows_[r].try_emplace(c, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) rows_[r].erase(it);
  }
}

bool SparseQMatrix::is_diagonal() const {
  for (std::uint32_t r = 0; r < dim_; ++r)
    for (const auto& entry : rows_[r])
      if (entry.first != r) return false;
  return true;
}

SparseQMatrix& SparseQMatrix::operator+=(const SparseQMatrix& rhs) {
  check_same_dim(rhs);
  rhs.for_each([this](std::uint32_t r, std::uint32_t c, const LaurentPoly& v) { add_to(r, c, v); });
  return *this;
}

SparseQMatrix& SparseQMatrix::operator-=(const SparseQMatrix& rhs) {
  check_same_dim(rhs);
  rhs.for_each([this](std::uint32_t r, std::uint32_t c, const LaurentPoly& v) { add_to(r, c, -v); });
  return *this;
}

SparseQMatrix operator*(const SparseQMatrix& a, const SparseQMatrix& b) {
  a.check_same_dim(b);
  SparseQMatrix out(a.dim_);
  for (std::uint32_t r = 0; r < a.dim_; ++r) {
    auto& acc = out.rows_[r];
    for (const auto& [k, av] : a.rows_[r]) {
      for (const auto& [c, bv] : b.rows_[k]) {
        auto [it, inserted] = acc.try_emplace(c, av * bv);
        if (!inserted) it->second += av * bv;
      }
    }
    std::erase_if(acc, [](const auto& e) { return e.second.is_zero(); });
  }
  return out;
}

bool operator==(const SparseQMatrix& a, const SparseQMatrix& b) { return a.dim_ == b.dim_ && a.rows_ == b.rows_; }

SparseQMatrix SparseQMatrix::scaled(const LaurentPoly& s) const {
  return map_entries([&s](const LaurentPoly& v) { return v * s; });
}

SparseQMatrix SparseQMatrix::transpose() const {
  SparseQMatrix out(dim_);
  for_each([&out](std::uint32_t r, std::uint32_t c, const LaurentPoly& v) { out.rows_[c].emplace(r, v); });
  return out;
}

SparseQMatrix SparseQMatrix::map_entries(const std::function<LaurentPoly(const LaurentPoly&)>& f) const {
  SparseQMatrix out(dim_);
  for_each([&](std::uint32_t r, std::uint32_t c, const LaurentPoly& v) {
    LaurentPoly w = f(v);
    if (!w.is_zero()) out.rows_[r].emplace(c, std::move(w));
  });
  return out;
}

SparseQMatrix commutator(const SparseQMatrix& a, const SparseQMatrix& b) { return a * b - b * a; }

std::optional<EntryDiff> first_difference(const SparseQMatrix& a, const SparseQMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
  for (std::uint32_t r = 0; r < a.dim(); ++r) {
    const auto& ra = a.row(r);
    const auto& rb = b.row(r);
    if (ra == rb) continue;
    auto ia = ra.begin();
    auto ib = rb.begin();
    while (ia != ra.end() || ib != rb.end()) {
      if (ib == rb.end() || (ia != ra.end() && ia->first < ib->first)) return EntryDiff{r, ia->first, ia->second, {}};
      if (ia == ra.end() || ib->first < ia->first) return EntryDiff{r, ib->first, {}, ib->second};
      if (ia->second != ib->second) return EntryDiff{r, ia->first, ia->second, ib->second};
      ++ia;
      ++ib;
    }
  }
  return std::nullopt;
}

namespace {

std::vector<LaurentPoly> monomial_diagonal(const SparseQMatrix& d) {
  if (!d.is_diagonal()) throw std::invalid_argument("expected a diagonal matrix");
  std::vector<LaurentPoly> diag(d.dim());
  for (std::uint32_t i = 0; i < d.dim(); ++i) {
    diag[i] = d.get(i, i);
    if (!diag[i].is_monomial()) throw std::invalid_argument("diagonal entry is not an invertible monomial");
  }
  return diag;
}

}  // namespace

SparseQMatrix conjugate_by_diagonal(const SparseQMatrix& d, const SparseQMatrix& a) {
  if (d.dim() != a.dim()) throw std::invalid_argument("matrix dimension mismatch");
  const std::vector<LaurentPoly> diag = monomial_diagonal(d);
  SparseQMatrix out(a.dim());
  a.for_each([&](std::uint32_t r, std::uint32_t c, const LaurentPoly& v) {
    const auto& [kr, cr] = diag[r].terms()[0];
    const auto& [kc, cc] = diag[c].terms()[0];
    out.set(r, c, v.times_monomial(cr / cc, kr - kc));
  });
  return out;
}

SparseQMatrix diagonal_inverse(const SparseQMatrix& d) {
  std::vector<LaurentPoly> diag = monomial_diagonal(d);
  for (auto& v : diag) v = v.monomial_inverse();
  return SparseQMatrix::diagonal(diag);
}

SparseQMatrix embed(const SiteOperator& u, int k, int L) {
  const std::uint64_t dim = basis_dimension(L);
  if (k < 1 || k > L) throw std::out_of_range("site index out of range");
  std::uint64_t stride = 1;
  for (int j = k; j < L; ++j) stride *= 3;
  SparseQMatrix out(dim);
  for (std::uint64_t col = 0; col < dim; ++col) {
    const int d = static_cast<int>((col / stride) % 3);
    for (int r = 0; r < 3; ++r) {
      const LaurentPoly& v = u.m[r][d];
      if (v.is_zero()) continue;
      const std::uint64_t row = col + stride * static_cast<std::uint64_t>(r) - stride * static_cast<std::uint64_t>(d);
      out.set(static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(col), v);
    }
  }
  return out;
}

QVector::QVector(std::uint64_t dim) : dim_(checked_dim(dim)) {}

LaurentPoly QVector::get(std::uint32_t i) const {
  if (i >= dim_) throw std::out_of_range("vector index out of range");
  auto it = entries_.find(i);
  return it == entries_.end() ? LaurentPoly() : it->second;
}

void QVector::set(std::uint32_t i, LaurentPoly v) {
  if (i >= dim_) throw std::out_of_range("vector index out of range");
  if (v.is_zero()) {
    entries_.erase(i);
  } else {
    entries_[i] = std::move(v);
  }
}

void QVector::add_to(std::uint32_t i, const LaurentPoly& v) {
  if (i >= dim_) throw std::out_of_range("vector index out of range");
  if (v.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(i, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

QVector QVector::scaled(const LaurentPoly& s) const {
  QVector out(dim_);
  for (const auto& [i, v] : entries_) out.set(i, v * s);
  return out;
}

QVector row_times(const QVector& v, const SparseQMatrix& a) {
  if (v.dim() != a.dim()) throw std::invalid_argument("dimension mismatch");
  QVector out(a.dim());
  for (const auto& [r, x] : v.entries())
    for (const auto& [c, y] : a.row(r)) out.add_to(c, x * y);
  return out;
}

QVector apply(const SparseQMatrix& a, const QVector& v) {
  if (v.dim() != a.dim()) throw std::invalid_argument("dimension mismatch");
  QVector out(a.dim());
  for (std::uint32_t r = 0; r < a.dim(); ++r) {
    LaurentPoly acc;
    for (const auto& [c, y] : a.row(r)) {
      auto it = v.entries().find(c);
      if (it != v.entries().end()) acc += y * it->second;
    }
    out.set(r, std::move(acc));
  }
  return out;
}

LaurentPoly inner(const QVector& w, const QVector& v) {
  if (w.dim() != v.dim()) throw std::invalid_argument("dimension mismatch");
  LaurentPoly acc;
  for (const auto& [i, x] : w.entries()) {
    auto it = v.entries().find(i);
    if (it != v.entries().end()) acc += x * it->second;
  }
  return acc;
}

QVector basis_vector(const Configuration& c) {
  QVector v(basis_dimension(c.size()));
  v.set(static_cast<std::uint32_t>(c.offset()), 1);
  return v;
}

QVector summation_vector(int L) {
  QVector v(basis_dimension(L));
  for (std::uint32_t i = 0; i < v.dim(); ++i) v.set(i, 1);
  return v;
}

QVector sector_summation_vector(int L, Sector sector) {
  QVector v(basis_dimension(L));
  for (const auto& c : enumerate_sector(L, sector)) v.set(static_cast<std::uint32_t>(c.offset()), 1);
  return v;
}

QVector product_vector(const std::vector<std::array<LaurentPoly, 3>>& factors) {
  const int L = static_cast<int>(factors.size());
  QVector v(basis_dimension(L));
  for (std::uint32_t i = 0; i < v.dim(); ++i) {
    const Configuration c = Configuration::decode(i + 1, L);
    LaurentPoly x = 1;
    for (int k = 0; k < L && !x.is_zero(); ++k) x *= factors[static_cast<std::size_t>(k)][code(c.sites()[static_cast<std::size_t>(k)])];
    v.set(i, std::move(x));
  }
  return v;
}

SparseQMatrix diagonal_lift(const std::function<LaurentPoly(const Configuration&)>& f, int L) {
  const std::uint64_t dim = basis_dimension(L);
  std::vector<LaurentPoly> diag(dim);
  for (std::uint64_t i = 0; i < dim; ++i) diag[i] = f(Configuration::decode(i + 1, L));
  return SparseQMatrix::diagonal(diag);
}

std::string dump(const SparseQMatrix& a) {
  std::ostringstream os;
  a.for_each([&os](std::uint32_t r, std::uint32_t c, const LaurentPoly& v) {
    os << (r + 1) << ' ' << (c + 1) << ' ' << v.to_string() << '\n';
  });
  return os.str();
}

}  // namespace asep2
