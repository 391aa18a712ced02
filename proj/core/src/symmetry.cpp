#include "asep2/symmetry.hpp"

#include <functional>
#include <stdexcept>
#include <string>

#include "asep2/generator.hpp"

namespace asep2 {

namespace {

using ExponentFn = std::function<int(const Configuration&)>;

int a_at(const Configuration& c, int k) { return c.sites()[static_cast<std::size_t>(k - 1)] == SiteState::A; }
int v_at(const Configuration& c, int k) { return c.sites()[static_cast<std::size_t>(k - 1)] == SiteState::E; }
int b_at(const Configuration& c, int k) { return c.sites()[static_cast<std::size_t>(k - 1)] == SiteState::B; }

/// diag(t^{f(eta)}).
SparseQMatrix t_diag(int L, const ExponentFn& f) {
  return diagonal_lift([&f](const Configuration& c) { return LaurentPoly::t_power(f(c)); }, L);
}

/// diag(f(eta)) with integer entries.
SparseQMatrix int_diag(int L, const ExponentFn& f) {
  return diagonal_lift([&f](const Configuration& c) { return LaurentPoly(f(c)); }, L);
}

/// sum_{j<k} f(j) and sum_{j>k} f(j).
template <typename F>
std::pair<int, int> split_sums(const Configuration& c, int k, F f) {
  int left = 0, right = 0;
  for (int j = 1; j <= c.size(); ++j) {
    if (j < k) left += f(c, j);
    if (j > k) right += f(c, j);
  }
  return {left, right};
}

const SiteOperator& creation_part(int i, Sign s) {
  const SiteOps& o = site_ops();
  if (i == 1) return s == Sign::Plus ? o.a_plus : o.a_minus;
  return s == Sign::Plus ? o.b_minus : o.b_plus;
}

void check_generator_index(int i) {
  if (i != 1 && i != 2) throw std::invalid_argument("generator index must be 1 or 2");
}

std::string gen_name(const char* base, int i, Sign s) { return std::string(base) + std::to_string(i) + sign_suffix(s); }

/// Collapses many instances of one identity into a single report entry that
/// keeps the first failure.
class FamilyCheck {
 public:
  FamilyCheck(std::string name, int L) : result_{std::move(name), L, true, std::nullopt, {}} {}

  void check(const SparseQMatrix& lhs, const SparseQMatrix& rhs, const std::string& instance) {
    ++instances_;
    if (!result_.holds) return;
    if (auto diff = first_difference(lhs, rhs)) {
      result_.holds = false;
      result_.first_mismatch = std::move(diff);
      result_.detail = "first failing instance: " + instance;
    }
  }

  RelationResult result() {
    if (result_.holds) result_.detail = std::to_string(instances_) + " instances";
    return result_;
  }

 private:
  RelationResult result_;
  int instances_ = 0;
};

}  // namespace

const char* sign_suffix(Sign s) { return s == Sign::Plus ? "+" : "-"; }

const SparseQMatrix& Gl3Reps::X(int i, Sign s) const {
  check_generator_index(i);
  if (i == 1) return s == Sign::Plus ? x1_plus : x1_minus;
  return s == Sign::Plus ? x2_plus : x2_minus;
}

SparseQMatrix& Gl3Reps::X(int i, Sign s) {
  return const_cast<SparseQMatrix&>(static_cast<const Gl3Reps&>(*this).X(i, s));
}

const SparseQMatrix& YGenerators::Y(int i, Sign s) const {
  check_generator_index(i);
  if (i == 1) return s == Sign::Plus ? y1_plus : y1_minus;
  return s == Sign::Plus ? y2_plus : y2_minus;
}

SparseQMatrix rep_local_X(int i, Sign s, int k, int L) {
  check_generator_index(i);
  if (k < 1 || k > L) throw std::out_of_range("site index out of range");
  // Cartan weight of a site: a - v for H_1, v - b for H_2.
  auto weight = [i](const Configuration& c, int j) { return i == 1 ? a_at(c, j) - v_at(c, j) : v_at(c, j) - b_at(c, j); };
  const SparseQMatrix dressing = t_diag(L, [&](const Configuration& c) {
    const auto [left, right] = split_sums(c, k, weight);
    return -left + right;
  });
  return dressing * embed(creation_part(i, s), k, L);
}

Gl3Reps rep_global(int L) {
  const std::uint64_t dim = basis_dimension(L);
  Gl3Reps g{L,
            SparseQMatrix(dim), SparseQMatrix(dim), SparseQMatrix(dim), SparseQMatrix(dim),
            int_diag(L, [](const Configuration& c) { return c.counts().N - c.counts().V; }),
            int_diag(L, [](const Configuration& c) { return c.counts().V - c.counts().M; }),
            t_diag(L, [](const Configuration& c) { return -c.counts().N; }),
            t_diag(L, [](const Configuration& c) { return -c.counts().V; }),
            t_diag(L, [](const Configuration& c) { return -c.counts().M; })};
  for (int k = 1; k <= L; ++k) {
    g.x1_plus += rep_local_X(1, Sign::Plus, k, L);
    g.x1_minus += rep_local_X(1, Sign::Minus, k, L);
    g.x2_plus += rep_local_X(2, Sign::Plus, k, L);
    g.x2_minus += rep_local_X(2, Sign::Minus, k, L);
  }
  return g;
}

SparseQMatrix rep_X3(const Gl3Reps& gens, Sign s) {
  const SparseQMatrix& x1 = gens.X(1, s);
  const SparseQMatrix& x2 = gens.X(2, s);
  return (x1 * x2).scaled(LaurentPoly::t_power(1)) - (x2 * x1).scaled(LaurentPoly::t_power(-1));
}

SparseQMatrix build_U(int L) {
  const SiteOps& o = site_ops();
  SparseQMatrix u(basis_dimension(L));
  for (int k = 1; k <= L; ++k) {
    u += (embed(o.a_hat, k, L) - embed(o.b_hat, k, L)).scaled(LaurentPoly(2 * k - L - 1));
  }
  for (int k = 1; k < L; ++k) {
    for (int l = 1; l <= k; ++l) {
      u += embed(o.a_hat, l, L) * embed(o.b_hat, k + 1, L);
      u -= embed(o.b_hat, l, L) * embed(o.a_hat, k + 1, L);
    }
  }
  return u;
}

SparseQMatrix build_R(int L) {
  const SparseQMatrix u = build_U(L);
  std::vector<LaurentPoly> diag(u.dim());
  for (std::uint32_t i = 0; i < u.dim(); ++i) {
    const LaurentPoly e = u.get(i, i);
    if (!e.is_zero() && (!e.is_monomial() || e.min_half_exponent() != 0 || !e.terms()[0].second.get_den().fits_sint_p()))
      throw std::logic_error("U must have integer diagonal entries");
    diag[i] = LaurentPoly::t_power(e.is_zero() ? 0 : static_cast<int>(e.terms()[0].second.get_num().get_si()));
  }
  return SparseQMatrix::diagonal(diag);
}

YGenerators transform_Y(const Gl3Reps& gens, const SparseQMatrix& r) {
  return {conjugate_by_diagonal(r, gens.x1_plus), conjugate_by_diagonal(r, gens.x1_minus),
          conjugate_by_diagonal(r, gens.x2_plus), conjugate_by_diagonal(r, gens.x2_minus)};
}

SparseQMatrix local_Y_closed_form(int i, Sign s, int r, int L) {
  check_generator_index(i);
  if (r < 1 || r > L) throw std::out_of_range("site index out of range");
  // Counted species: v for Y_1^+ and Y_2^-, a for Y_1^-, b for Y_2^+.
  std::function<int(const Configuration&, int)> count;
  if ((i == 1 && s == Sign::Plus) || (i == 2 && s == Sign::Minus)) count = v_at;
  else if (i == 1) count = a_at;
  else count = b_at;
  const int orient = (s == Sign::Plus) ? 1 : -1;
  const SparseQMatrix dressing = t_diag(L, [&](const Configuration& c) {
    const auto [left, right] = split_sums(c, r, count);
    return 2 * orient * (left - right);
  });
  return dressing * embed(creation_part(i, s), r, L);
}

YGenerators entrywise_Y(int L, CountReading reading) {
  const std::uint64_t dim = basis_dimension(L);
  YGenerators y{SparseQMatrix(dim), SparseQMatrix(dim), SparseQMatrix(dim), SparseQMatrix(dim)};
  for (std::uint64_t idx = 1; idx <= dim; ++idx) {
    const Configuration eta = Configuration::decode(idx, L);
    const auto col = static_cast<std::uint32_t>(idx - 1);
    for (int k = 1; k <= L; ++k) {
      const Counts left = eta.left_counts(k);
      auto put = [&](SparseQMatrix& m, FlipDirection dir, const std::function<int(const Counts&, const Counts&)>& q_exp) {
        const Configuration target = eta.cyclic_flip(k, dir);
        const Counts global = reading == CountReading::Source ? eta.counts() : target.counts();
        m.add_to(static_cast<std::uint32_t>(target.offset()), col, LaurentPoly::q_power(q_exp(left, global)));
      };
      switch (eta.at(k)) {
        case SiteState::E:
          put(y.y1_plus, FlipDirection::Minus, [](const Counts& l, const Counts& g) { return 2 * l.V - g.V; });
          put(y.y2_minus, FlipDirection::Plus, [](const Counts& l, const Counts& g) { return -2 * l.V + g.V; });
          break;
        case SiteState::A:
          put(y.y1_minus, FlipDirection::Plus, [](const Counts& l, const Counts& g) { return -2 * l.N + g.N; });
          break;
        case SiteState::B:
          put(y.y2_plus, FlipDirection::Minus, [](const Counts& l, const Counts& g) { return 2 * l.M - g.M; });
          break;
      }
    }
  }
  return y;
}

RelationReport compare_entrywise_Y(int L) {
  const YGenerators conj = transform_Y(rep_global(L), build_R(L));
  RelationReport report;
  for (CountReading reading : {CountReading::Source, CountReading::Target}) {
    const YGenerators direct = entrywise_Y(L, reading);
    const char* tag = reading == CountReading::Source ? " (source counts)" : " (target counts)";
    for (int i : {1, 2})
      for (Sign s : {Sign::Plus, Sign::Minus})
        report.check("entrywise " + gen_name("Y", i, s) + tag + " = R " + gen_name("X", i, s) + " R^-1", L,
                     direct.Y(i, s), conj.Y(i, s));
  }
  return report;
}

RelationReport verify_gl3(const Gl3Reps& gens) {
  const int L = gens.L;
  RelationReport report;
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j)
      report.check_zero("[L" + std::to_string(i) + ", L" + std::to_string(j) + "] = 0", L,
                        commutator(gens.Lj(i), gens.Lj(j)));

  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 2; ++j) {
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        const int half = sign_value(s) * ((i == j + 1 ? 1 : 0) - (i == j ? 1 : 0));
        const SparseQMatrix& x = gens.X(j, s);
        report.check("L" + std::to_string(i) + " " + gen_name("X", j, s) + " = q^(" + std::to_string(half) + "/2) " +
                         gen_name("X", j, s) + " L" + std::to_string(i),
                     L, gens.Lj(i) * x, (x * gens.Lj(i)).scaled(LaurentPoly::t_power(half)));
      }
    }
  }

  const LaurentPoly q_minus_qinv = LaurentPoly::q_power(1) - LaurentPoly::q_power(-1);
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      const SparseQMatrix lhs = commutator(gens.X(i, Sign::Plus), gens.X(j, Sign::Minus)).scaled(q_minus_qinv);
      SparseQMatrix rhs(lhs.dim());
      if (i == j) {
        const SparseQMatrix k = gens.Lj(i + 1) * diagonal_inverse(gens.Lj(i));
        const SparseQMatrix k2 = k * k;
        rhs = k2 - diagonal_inverse(k2);
      }
      report.check("(q - q^-1) [X" + std::to_string(i) + "+, X" + std::to_string(j) +
                       "-] = delta_ij ((L_{i+1} L_i^-1)^2 - (L_{i+1} L_i^-1)^-2)",
                   L, lhs, rhs);
    }
  }

  const LaurentPoly q2 = q_number(2);
  for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}}) {
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const SparseQMatrix& xi = gens.X(i, s);
      const SparseQMatrix& xj = gens.X(j, s);
      const SparseQMatrix xi2 = xi * xi;
      const SparseQMatrix serre = xi2 * xj - (xi * xj * xi).scaled(q2) + xj * xi2;
      report.check_zero("cubic Serre (" + gen_name("X", i, s) + ")^2 " + gen_name("X", j, s), L, serre);
    }
  }
  return report;
}

RelationReport verify_sl3(const Gl3Reps& gens) {
  const int L = gens.L;
  const CartanData cartan;
  RelationReport report;
  report.check_zero("[H1, H2] = 0", L, commutator(gens.h1, gens.h2));

  auto q_pow_diag = [](const SparseQMatrix& h, int scale) {
    // diag(t^{scale * h}) for an integer diagonal h.
    std::vector<LaurentPoly> d(h.dim());
    for (std::uint32_t r = 0; r < h.dim(); ++r) {
      const Rational v = h.get(r, r).at_one();
      d[r] = LaurentPoly::t_power(scale * static_cast<int>(v.get_num().get_si()));
    }
    return SparseQMatrix::diagonal(d);
  };

  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        const SparseQMatrix& x = gens.X(j, s);
        const int weight = sign_value(s) * cartan(i, j);
        const std::string xn = gen_name("X", j, s);
        report.check("[H" + std::to_string(i) + ", " + xn + "] = " + std::to_string(weight) + " " + xn, L,
                     commutator(gens.H(i), x), x.scaled(LaurentPoly(weight)));
        report.check("q^H" + std::to_string(i) + " " + xn + " q^-H" + std::to_string(i) + " = q^" +
                         std::to_string(weight) + " " + xn,
                     L, q_pow_diag(gens.H(i), 2) * x * q_pow_diag(gens.H(i), -2),
                     x.scaled(LaurentPoly::q_power(weight)));
      }
    }
  }

  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      SparseQMatrix rhs(gens.h1.dim());
      if (i == j) {
        std::vector<LaurentPoly> d(rhs.dim());
        for (std::uint32_t r = 0; r < rhs.dim(); ++r)
          d[r] = q_number(static_cast<int>(gens.H(i).get(r, r).at_one().get_num().get_si()));
        rhs = SparseQMatrix::diagonal(d);
      }
      report.check("[X" + std::to_string(i) + "+, X" + std::to_string(j) + "-] = delta_ij [H_i]_q", L,
                   commutator(gens.X(i, Sign::Plus), gens.X(j, Sign::Minus)), rhs);
    }
  }

  const LaurentPoly th = LaurentPoly::t_power(1);
  const LaurentPoly thi = LaurentPoly::t_power(-1);
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    const SparseQMatrix x3 = rep_X3(gens, s);
    const SparseQMatrix& x1 = gens.X(1, s);
    const SparseQMatrix& x2 = gens.X(2, s);
    const std::string sx = sign_suffix(s);
    report.check_zero("q^-1/2 X1" + sx + " X3" + sx + " - q^1/2 X3" + sx + " X1" + sx + " = 0", L,
                      (x1 * x3).scaled(thi) - (x3 * x1).scaled(th));
    report.check_zero("q^1/2 X2" + sx + " X3" + sx + " - q^-1/2 X3" + sx + " X2" + sx + " = 0", L,
                      (x2 * x3).scaled(th) - (x3 * x2).scaled(thi));
    for (int i = 1; i <= 2; ++i)
      report.check("[H" + std::to_string(i) + ", X3" + sx + "] = " + sx + "X3" + sx, L, commutator(gens.H(i), x3),
                   x3.scaled(LaurentPoly(sign_value(s))));
  }

  // Relations among the single-site pieces X_i(k).
  for (int i = 1; i <= 2; ++i) {
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      FamilyCheck nil("(" + gen_name("X", i, s) + "(k))^2 = 0", L);
      FamilyCheck order(gen_name("X", i, s) + "(k) " + gen_name("X", i, s) + "(l) = q^" +
                            std::to_string(2 * sign_value(s)) + " " + gen_name("X", i, s) + "(l) " +
                            gen_name("X", i, s) + "(k), k < l",
                        L);
      FamilyCheck cross(gen_name("X", i, s) + "(k) " + gen_name("X", 3 - i, s == Sign::Plus ? Sign::Minus : Sign::Plus) +
                            "(k) = 0",
                        L);
      std::vector<SparseQMatrix> local;
      for (int k = 1; k <= L; ++k) local.push_back(rep_local_X(i, s, k, L));
      const SparseQMatrix zero(gens.h1.dim());
      for (int k = 1; k <= L; ++k) {
        const auto& xk = local[static_cast<std::size_t>(k - 1)];
        nil.check(xk * xk, zero, "k=" + std::to_string(k));
        cross.check(xk * rep_local_X(3 - i, s == Sign::Plus ? Sign::Minus : Sign::Plus, k, L), zero,
                    "k=" + std::to_string(k));
        for (int l = k + 1; l <= L; ++l) {
          const auto& xl = local[static_cast<std::size_t>(l - 1)];
          order.check(xk * xl, (xl * xk).scaled(LaurentPoly::q_power(2 * sign_value(s))),
                      "k=" + std::to_string(k) + ", l=" + std::to_string(l));
        }
      }
      report.add(nil.result());
      report.add(cross.result());
      if (L >= 2) report.add(order.result());
    }
  }
  return report;
}

SymmetryContext make_symmetry_context(int L) {
  const ProcessParams params{L, 1};
  std::vector<SparseQMatrix> bonds;
  for (int k = 1; k < L; ++k) bonds.push_back(perk_schultz_bond(k, params));
  return {L, generator(params), perk_schultz(params), std::move(bonds), rep_global(L), build_R(L)};
}

RelationReport verify_symmetry(const SymmetryContext& ctx) {
  const int L = ctx.L;
  RelationReport report;
  const YGenerators y = transform_Y(ctx.gens, ctx.R);
  for (int i = 1; i <= 2; ++i)
    for (Sign s : {Sign::Plus, Sign::Minus})
      report.check_zero("[H, " + gen_name("Y", i, s) + "] = 0", L, commutator(ctx.H, y.Y(i, s)));
  for (int j = 1; j <= 3; ++j)
    report.check_zero("[H, L" + std::to_string(j) + "] = 0", L, commutator(ctx.H, ctx.gens.Lj(j)));

  for (std::size_t b = 0; b < ctx.g_bonds.size(); ++b) {
    const std::string bond = "g_{" + std::to_string(b + 1) + "," + std::to_string(b + 2) + "}";
    for (int i = 1; i <= 2; ++i)
      for (Sign s : {Sign::Plus, Sign::Minus})
        report.check_zero("[" + bond + ", " + gen_name("X", i, s) + "] = 0", L,
                          commutator(ctx.g_bonds[b], ctx.gens.X(i, s)));
    for (int i = 1; i <= 2; ++i)
      report.check_zero("[" + bond + ", H" + std::to_string(i) + "] = 0", L, commutator(ctx.g_bonds[b], ctx.gens.H(i)));
  }
  for (int i = 1; i <= 2; ++i)
    for (Sign s : {Sign::Plus, Sign::Minus})
      report.check_zero("[G, " + gen_name("X", i, s) + "] = 0", L, commutator(ctx.G, ctx.gens.X(i, s)));
  return report;
}

RelationReport verify_similarity(const SymmetryContext& ctx) {
  RelationReport report;
  const SparseQMatrix r_inv = diagonal_inverse(ctx.R);
  report.check("G = R^-1 H R", ctx.L, conjugate_by_diagonal(r_inv, ctx.H), ctx.G);
  const SparseQMatrix r2 = ctx.R * ctx.R;
  report.check("H^T = R^-2 H R^2", ctx.L, ctx.H.transpose(), conjugate_by_diagonal(diagonal_inverse(r2), ctx.H));
  report.check("G = G^T", ctx.L, ctx.G, ctx.G.transpose());
  return report;
}

namespace {

void check_vector(RelationReport& report, const std::string& name, int L, const QVector& lhs, const QVector& rhs,
                  std::string detail = {}) {
  RelationResult r{name, L, true, std::nullopt, std::move(detail)};
  for (std::uint32_t i = 0; i < lhs.dim(); ++i) {
    LaurentPoly a = lhs.get(i), b = rhs.get(i);
    if (a != b) {
      r.holds = false;
      r.first_mismatch = EntryDiff{0, i, std::move(a), std::move(b)};
      break;
    }
  }
  report.add(std::move(r));
}

}  // namespace

RelationReport lowering_construction_check(int L, Sector sector) {
  if (!sector.valid_for(L)) throw std::invalid_argument("invalid sector");
  const Gl3Reps gens = rep_global(L);
  const SparseQMatrix r = build_R(L);
  const auto [N, M] = sector;

  QVector lhs = basis_vector(Configuration(L));
  for (int n = 0; n < N; ++n) lhs = row_times(lhs, gens.x1_minus);
  for (int m = 0; m < M; ++m) lhs = row_times(lhs, gens.x2_plus);

  const QVector rhs = row_times(sector_summation_vector(L, sector), r).scaled(q_factorial(N) * q_factorial(M));
  const std::string tag = "(N,M)=(" + std::to_string(N) + "," + std::to_string(M) + ")";
  RelationReport report;
  check_vector(report, "<s_00| (X1-)^N (X2+)^M = [N]! [M]! <s_NM| q^{U/2} " + tag, L, lhs, rhs);

  // R on the sector from shifted B coordinates y~ = y - N_y.
  QVector closed(r.dim());
  QVector diag_r(r.dim());
  for (const Configuration& c : enumerate_sector(L, sector)) {
    const PositionRep pos = c.to_positions();
    int twice = (M - N) * (L + 1) - M * N;
    for (int x : pos.x) twice += 2 * x;
    for (int y : pos.y) twice -= 2 * (y - c.left_counts(y).N);
    const auto i = static_cast<std::uint32_t>(c.offset());
    closed.set(i, LaurentPoly::t_power(twice));
    diag_r.set(i, r.get(i, i));
  }
  check_vector(report, "R on sector = q^{((M-N)(L+1)-MN)/2 + sum x - sum y~} " + tag, L, diag_r, closed);
  return report;
}

RelationReport verify_transformation_lemmas(int L) {
  if (L < 1) throw std::invalid_argument("lattice size must be >= 1");
  const SiteOps& o = site_ops();
  RelationReport report;

  auto op_a = [&](Sign s) -> const SiteOperator& { return s == Sign::Plus ? o.a_plus : o.a_minus; };
  auto op_b = [&](Sign s) -> const SiteOperator& { return s == Sign::Plus ? o.b_plus : o.b_minus; };
  auto op_c = [&](Sign s) -> const SiteOperator& { return s == Sign::Plus ? o.c_plus : o.c_minus; };

  // Conjugation by p^{D} for p = q^{p_exp}, D an integer diagonal.
  for (int p_exp : {1, 2}) {
    const std::string p = p_exp == 1 ? "q" : "q^2";
    auto conj = [&](const ExponentFn& d, const SparseQMatrix& a) {
      return t_diag(L, [&](const Configuration& c) { return 2 * p_exp * d(c); }) * a *
             t_diag(L, [&](const Configuration& c) { return -2 * p_exp * d(c); });
    };
    auto dressed = [&](const ExponentFn& d, const SparseQMatrix& a) {
      return t_diag(L, [&](const Configuration& c) { return 2 * p_exp * d(c); }) * a;
    };
    FamilyCheck f1a("p^{a_l} a_x p^{-a_l} = p^{+-delta_lx} a_x, p=" + p, L);
    FamilyCheck f1a2("p^{b_l} a_x p^{-b_l} = a_x, p=" + p, L);
    FamilyCheck f1b("p^{b_l} b_x p^{-b_l} = p^{+-delta_lx} b_x, p=" + p, L);
    FamilyCheck f1b2("p^{a_l} b_x p^{-a_l} = b_x, p=" + p, L);
    FamilyCheck f2a("p^{a_l b_m} a_x p^{-a_l b_m} = p^{+-delta_lx b_m} a_x, p=" + p, L);
    FamilyCheck f2b("p^{a_l b_m} b_x p^{-a_l b_m} = p^{+-delta_mx a_l} b_x, p=" + p, L);
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const int sg = sign_value(s);
      for (int x = 1; x <= L; ++x) {
        const SparseQMatrix ax = embed(op_a(s), x, L);
        const SparseQMatrix bx = embed(op_b(s), x, L);
        for (int l = 1; l <= L; ++l) {
          const std::string inst = std::string("sign ") + sign_suffix(s) + ", x=" + std::to_string(x) + ", l=" + std::to_string(l);
          const int dlx = l == x ? 1 : 0;
          const ExponentFn al = [l](const Configuration& c) { return a_at(c, l); };
          const ExponentFn bl = [l](const Configuration& c) { return b_at(c, l); };
          f1a.check(conj(al, ax), ax.scaled(LaurentPoly::q_power(p_exp * sg * dlx)), inst);
          f1a2.check(conj(bl, ax), ax, inst);
          f1b.check(conj(bl, bx), bx.scaled(LaurentPoly::q_power(p_exp * sg * dlx)), inst);
          f1b2.check(conj(al, bx), bx, inst);
          for (int m = 1; m <= L; ++m) {
            const std::string inst2 = inst + ", m=" + std::to_string(m);
            const int dmx = m == x ? 1 : 0;
            const ExponentFn albm = [l, m](const Configuration& c) { return a_at(c, l) * b_at(c, m); };
            f2a.check(conj(albm, ax), dressed([&](const Configuration& c) { return sg * dlx * b_at(c, m); }, ax), inst2);
            f2b.check(conj(albm, bx), dressed([&](const Configuration& c) { return sg * dmx * a_at(c, l); }, bx), inst2);
          }
        }
      }
    }
    for (FamilyCheck* f : {&f1a, &f1a2, &f1b, &f1b2, &f2a, &f2b}) report.add(f->result());
  }

  // Conjugation of local operators by R, via explicit matrix products.
  const SparseQMatrix r = build_R(L);
  const SparseQMatrix r_inv = diagonal_inverse(r);
  FamilyCheck la("R a_x R^-1 = q^{-+1/2 sum_{k<x}(b_k-1) +-1/2 sum_{k>x}(b_k-1)} a_x", L);
  FamilyCheck lb("R b_x R^-1 = q^{+-1/2 sum_{k<x}(a_k-1) -+1/2 sum_{k>x}(a_k-1)} b_x", L);
  FamilyCheck lc("R c_x R^-1 = q^{+-1/2 sum_{k<x}(v_k+1) -+1/2 sum_{k>x}(v_k+1)} c_x", L);
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    const int sg = sign_value(s);
    for (int x = 1; x <= L; ++x) {
      const std::string inst = std::string("sign ") + sign_suffix(s) + ", x=" + std::to_string(x);
      auto side = [x](const Configuration& c, auto f) { return split_sums(c, x, f); };
      const SparseQMatrix ax = embed(op_a(s), x, L);
      const SparseQMatrix bx = embed(op_b(s), x, L);
      const SparseQMatrix cx = embed(op_c(s), x, L);
      la.check(r * ax * r_inv, t_diag(L, [&](const Configuration& c) {
        const auto [lt, rt] = side(c, [](const Configuration& cc, int k) { return b_at(cc, k) - 1; });
        return -sg * lt + sg * rt;
      }) * ax, inst);
      lb.check(r * bx * r_inv, t_diag(L, [&](const Configuration& c) {
        const auto [lt, rt] = side(c, [](const Configuration& cc, int k) { return a_at(cc, k) - 1; });
        return sg * lt - sg * rt;
      }) * bx, inst);
      lc.check(r * cx * r_inv, t_diag(L, [&](const Configuration& c) {
        const auto [lt, rt] = side(c, [](const Configuration& cc, int k) { return v_at(cc, k) + 1; });
        return sg * lt - sg * rt;
      }) * cx, inst);
    }
  }
  report.add(la.result());
  report.add(lb.result());
  report.add(lc.result());

  if (L >= 2) {
    FamilyCheck pa("R a_k a_{k+1} R^-1 = q^{-+1} a_k a_{k+1}", L);
    FamilyCheck pb("R b_k b_{k+1} R^-1 = q^{+-1} b_k b_{k+1}", L);
    FamilyCheck pc("R c_k c_{k+1} R^-1 = q^{-+1} c_k c_{k+1}", L);
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const Sign t = s == Sign::Plus ? Sign::Minus : Sign::Plus;
      const int sg = sign_value(s);
      for (int k = 1; k < L; ++k) {
        const std::string inst = std::string("sign ") + sign_suffix(s) + ", k=" + std::to_string(k);
        const SparseQMatrix a2 = embed(op_a(s), k, L) * embed(op_a(t), k + 1, L);
        const SparseQMatrix b2 = embed(op_b(s), k, L) * embed(op_b(t), k + 1, L);
        const SparseQMatrix c2 = embed(op_c(s), k, L) * embed(op_c(t), k + 1, L);
        pa.check(r * a2 * r_inv, a2.scaled(LaurentPoly::q_power(-sg)), inst);
        pb.check(r * b2 * r_inv, b2.scaled(LaurentPoly::q_power(sg)), inst);
        pc.check(r * c2 * r_inv, c2.scaled(LaurentPoly::q_power(-sg)), inst);
      }
    }
    report.add(pa.result());
    report.add(pb.result());
    report.add(pc.result());
  }
  return report;
}

}  // namespace asep2
