#include <gtest/gtest.h>

#include "asep2/generator.hpp"
#include "asep2/measure.hpp"
#include "asep2/symmetry.hpp"

using namespace asep2;

namespace {

LaurentPoly t(int k) { return LaurentPoly::t_power(k); }
LaurentPoly q(int k) { return LaurentPoly::q_power(k); }
std::uint32_t off(const char* s) { return static_cast<std::uint32_t>(Configuration::parse(s).offset()); }

void expect_all_hold(const RelationReport& r) {
  for (const auto& res : r.results()) EXPECT_TRUE(res.holds) << res.relation << " L=" << res.L << " " << res.detail;
}

bool mentions_failure(const RelationReport& r, const std::string& fragment) {
  for (const auto& name : r.failed_relations())
    if (name.find(fragment) != std::string::npos) return true;
  return false;
}

// X_1^+ assembled entry by entry: an A created on empty site k with weight
// q^{(-sum_{j<k}(a_j-v_j) + sum_{j>k}(a_j-v_j))/2}.
SparseQMatrix x1_plus_entrywise(int L) {
  SparseQMatrix m(basis_dimension(L));
  for (std::uint64_t i = 1; i <= basis_dimension(L); ++i) {
    const Configuration c = Configuration::decode(i, L);
    for (int k = 1; k <= L; ++k) {
      if (c.at(k) != SiteState::E) continue;
      int e = 0;
      for (int j = 1; j <= L; ++j) {
        const int wgt = c.occupations(j).a - c.occupations(j).v;
        if (j < k) e -= wgt;
        if (j > k) e += wgt;
      }
      m.add_to(static_cast<std::uint32_t>(c.cyclic_flip(k, FlipDirection::Minus).offset()),
               static_cast<std::uint32_t>(c.offset()), t(e));
    }
  }
  return m;
}

// Exponent of R straight from the double-sum definition.
int u_exponent(const Configuration& c) {
  const int L = c.size();
  int u = 0;
  for (int k = 1; k <= L; ++k) u += (2 * k - L - 1) * (c.occupations(k).a - c.occupations(k).b);
  for (int k = 1; k < L; ++k)
    for (int l = 1; l <= k; ++l)
      u += c.occupations(l).a * c.occupations(k + 1).b - c.occupations(l).b * c.occupations(k + 1).a;
  return u;
}

}  // namespace

TEST(LocalX, FundamentalRepresentation) {
  const SiteOps& o = site_ops();
  EXPECT_EQ(rep_local_X(1, Sign::Plus, 1, 1), embed(o.a_plus, 1, 1));
  EXPECT_EQ(rep_local_X(1, Sign::Minus, 1, 1), embed(o.a_minus, 1, 1));
  EXPECT_EQ(rep_local_X(2, Sign::Plus, 1, 1), embed(o.b_minus, 1, 1));
  EXPECT_EQ(rep_local_X(2, Sign::Minus, 1, 1), embed(o.b_plus, 1, 1));
  EXPECT_THROW(rep_local_X(3, Sign::Plus, 1, 1), std::invalid_argument);
  EXPECT_THROW(rep_local_X(1, Sign::Plus, 2, 1), std::out_of_range);
}

TEST(LocalX, NilpotentAndOrdered) {
  const SparseQMatrix x1 = rep_local_X(1, Sign::Plus, 1, 2);
  const SparseQMatrix x2 = rep_local_X(1, Sign::Plus, 2, 2);
  EXPECT_TRUE((x1 * x1).is_zero());
  EXPECT_TRUE((x2 * x2).is_zero());
  EXPECT_EQ(x1 * x2, (x2 * x1).scaled(q(2)));
  EXPECT_FALSE((x1 * x2).is_zero());
}

TEST(GlobalReps, EntrywiseOracle) {
  for (int L = 1; L <= 4; ++L) EXPECT_EQ(rep_global(L).x1_plus, x1_plus_entrywise(L));
}

TEST(GlobalReps, Diagonals) {
  const Gl3Reps g = rep_global(3);
  const auto i = off("A0B");
  EXPECT_EQ(g.l1.get(i, i), t(-1));
  EXPECT_EQ(g.l2.get(i, i), t(-1));
  EXPECT_EQ(g.l3.get(i, i), t(-1));
  EXPECT_EQ(g.h1.get(i, i), LaurentPoly());
  const auto j = off("AA0");
  EXPECT_EQ(g.h1.get(j, j), LaurentPoly(1));
  EXPECT_EQ(g.h2.get(j, j), LaurentPoly(1));
  EXPECT_EQ(g.l1.get(j, j), q(-1));
  const SiteOps& o = site_ops();
  EXPECT_EQ(g.h1 + g.h2, embed(o.a_hat, 1, 3) + embed(o.a_hat, 2, 3) + embed(o.a_hat, 3, 3) - embed(o.b_hat, 1, 3) -
                             embed(o.b_hat, 2, 3) - embed(o.b_hat, 3, 3));
}

TEST(X3, FundamentalRepresentation) {
  const SiteOps& o = site_ops();
  const Gl3Reps g = rep_global(1);
  EXPECT_EQ(rep_X3(g, Sign::Plus), embed(o.c_plus, 1, 1).scaled(t(1)));
  EXPECT_EQ(rep_X3(g, Sign::Minus), embed(o.c_minus, 1, 1).scaled(-t(-1)));
}

TEST(X3, Relations) {
  const Gl3Reps g = rep_global(2);
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    const SparseQMatrix x3 = rep_X3(g, s);
    EXPECT_TRUE(((g.X(1, s) * x3).scaled(t(-1)) - (x3 * g.X(1, s)).scaled(t(1))).is_zero());
    EXPECT_TRUE(((g.X(2, s) * x3).scaled(t(1)) - (x3 * g.X(2, s)).scaled(t(-1))).is_zero());
    for (int i = 1; i <= 2; ++i) EXPECT_EQ(commutator(g.H(i), x3), x3.scaled(LaurentPoly(sign_value(s))));
  }
}

TEST(QuantumAlgebra, RelationsHoldUpToFourSites) {
  for (int L = 1; L <= 4; ++L) {
    const Gl3Reps g = rep_global(L);
    const RelationReport gl = verify_gl3(g);
    const RelationReport sl = verify_sl3(g);
    EXPECT_TRUE(gl.all_hold()) << L;
    EXPECT_TRUE(sl.all_hold()) << L;
    expect_all_hold(gl);
    expect_all_hold(sl);
  }
}

TEST(QuantumAlgebra, CommutatorIsQNumberOfCartan) {
  const Gl3Reps g = rep_global(2);
  std::vector<LaurentPoly> d(9);
  for (std::uint32_t r = 0; r < 9; ++r) d[r] = q_number(static_cast<int>(g.h1.get(r, r).at_one().get_num().get_si()));
  EXPECT_EQ(commutator(g.x1_plus, g.x1_minus), SparseQMatrix::diagonal(d));
}

TEST(QuantumAlgebra, CorruptedGeneratorIsFlagged) {
  Gl3Reps g = rep_global(2);
  const auto [r, c] = [&] {
    std::pair<std::uint32_t, std::uint32_t> first{0, 0};
    bool found = false;
    g.x1_plus.for_each([&](std::uint32_t rr, std::uint32_t cc, const LaurentPoly&) {
      if (!found) first = {rr, cc}, found = true;
    });
    return first;
  }();
  g.x1_plus.set(r, c, g.x1_plus.get(r, c) * LaurentPoly(2));
  const RelationReport rep = verify_gl3(g);
  EXPECT_FALSE(rep.all_hold());
  EXPECT_TRUE(mentions_failure(rep, "[X1+, X1-]"));
  const RelationResult* res = rep.find(rep.failed_relations().front());
  ASSERT_NE(res, nullptr);
  EXPECT_TRUE(res->first_mismatch.has_value());
}

TEST(RMatrix, Examples) {
  const SparseQMatrix r = build_R(2);
  EXPECT_EQ(r.get(off("A0"), off("A0")), t(-1));
  EXPECT_EQ(r.get(off("00"), off("00")), LaurentPoly(1));
  EXPECT_EQ((r * r).get(off("AB"), off("AB")), q(-1));
  EXPECT_TRUE(r.is_diagonal());
}

TEST(RMatrixProperty, DirectExponentAndMeasure) {
  for (int L = 1; L <= 6; ++L) {
    const SparseQMatrix r = build_R(L);
    for (std::uint64_t i = 1; i <= basis_dimension(L); ++i) {
      const Configuration c = Configuration::decode(i, L);
      const auto k = static_cast<std::uint32_t>(i - 1);
      EXPECT_EQ(r.get(k, k), t(u_exponent(c)));
      EXPECT_EQ(r.get(k, k).at_one(), 1);
      EXPECT_EQ(r.get(k, k) * r.get(k, k), measure_occupation(c));
    }
  }
}

TEST(TransformY, Examples) {
  const SiteOps& o = site_ops();
  const YGenerators y1 = transform_Y(rep_global(1), build_R(1));
  EXPECT_EQ(y1.y1_plus, embed(o.a_plus, 1, 1));

  const SymmetryContext ctx = make_symmetry_context(2);
  const YGenerators y = transform_Y(ctx.gens, ctx.R);
  EXPECT_TRUE(commutator(ctx.H, y.y1_plus).is_zero());
}

TEST(TransformY, LocalClosedFormsMatchConjugation) {
  for (int L = 1; L <= 4; ++L) {
    const SparseQMatrix r = build_R(L);
    const YGenerators y = transform_Y(rep_global(L), r);
    for (int i = 1; i <= 2; ++i) {
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        SparseQMatrix sum(basis_dimension(L));
        for (int site = 1; site <= L; ++site) {
          const SparseQMatrix local = local_Y_closed_form(i, s, site, L);
          EXPECT_EQ(local, conjugate_by_diagonal(r, rep_local_X(i, s, site, L))) << i << sign_suffix(s) << site;
          sum += local;
        }
        EXPECT_EQ(sum, y.Y(i, s));
      }
    }
  }
}

TEST(EntrywiseY, TargetReadingMatchesConjugation) {
  for (int L = 1; L <= 4; ++L) {
    const RelationReport rep = compare_entrywise_Y(L);
    for (const auto& r : rep.results()) {
      if (r.relation.find("(target counts)") != std::string::npos) {
        EXPECT_TRUE(r.holds) << r.relation;
      }
    }
  }
}

TEST(EntrywiseY, SourceReadingDiffers) {
  // With counts taken at the source configuration every entry of Y_1^+ is off
  // by q^{-1}: the created A removes one vacancy from the global count.
  const RelationReport rep = compare_entrywise_Y(3);
  EXPECT_TRUE(mentions_failure(rep, "entrywise Y1+ (source counts)"));
  EXPECT_TRUE(mentions_failure(rep, "entrywise Y2- (source counts)"));
  const YGenerators src = entrywise_Y(3, CountReading::Source);
  const YGenerators tgt = entrywise_Y(3, CountReading::Target);
  EXPECT_EQ(src.y1_plus.nnz(), tgt.y1_plus.nnz());
  src.y1_plus.for_each([&](std::uint32_t r, std::uint32_t c, const LaurentPoly& v) {
    EXPECT_EQ(v, tgt.y1_plus.get(r, c) * q(-1));
  });
}

TEST(Symmetry, HoldsUpToFourSites) {
  for (int L = 1; L <= 4; ++L) {
    const SymmetryContext ctx = make_symmetry_context(L);
    const RelationReport sym = verify_symmetry(ctx);
    const RelationReport sim = verify_similarity(ctx);
    expect_all_hold(sym);
    expect_all_hold(sim);
    if (L >= 2) ASSERT_NE(sym.find("[g_{1,2}, X1+] = 0"), nullptr);
  }
}

TEST(Symmetry, CorruptedRateIsFlagged) {
  SymmetryContext ctx = make_symmetry_context(3);
  const auto i = off("A00"), j = off("0A0");
  ctx.H.set(j, i, ctx.H.get(j, i) * LaurentPoly(2));
  const RelationReport sim = verify_similarity(ctx);
  EXPECT_TRUE(mentions_failure(sim, "G = R^-1 H R"));
  EXPECT_FALSE(verify_symmetry(ctx).all_hold());
}

TEST(Similarity, ClassicalLimit) {
  for (int L = 1; L <= 4; ++L) {
    const SymmetryContext ctx = make_symmetry_context(L);
    for (std::uint32_t i = 0; i < ctx.R.dim(); ++i) EXPECT_EQ(ctx.R.get(i, i).at_one(), 1);
    auto at_one = [](const SparseQMatrix& m) { return m.map_entries([](const LaurentPoly& p) { return LaurentPoly(p.at_one()); }); };
    EXPECT_EQ(at_one(ctx.G), at_one(ctx.H));
  }
}

TEST(Lowering, Examples) {
  const Gl3Reps g = rep_global(2);
  const QVector v = row_times(basis_vector(Configuration(2)), g.x1_minus);
  EXPECT_EQ(v.entries().size(), 2u);
  EXPECT_EQ(v.get(off("A0")), t(-1));
  EXPECT_EQ(v.get(off("0A")), t(1));
  for (int L = 1; L <= 4; ++L) {
    const RelationReport empty = lowering_construction_check(L, {0, 0});
    expect_all_hold(empty);
  }
  expect_all_hold(lowering_construction_check(3, {1, 1}));
  EXPECT_THROW(lowering_construction_check(2, {2, 1}), std::invalid_argument);
}

TEST(Lowering, AllSectorsUpToFourSites) {
  for (int L = 1; L <= 4; ++L)
    for (int n = 0; n <= L; ++n)
      for (int m = 0; n + m <= L; ++m) expect_all_hold(lowering_construction_check(L, {n, m}));
}

TEST(ConjugationIdentities, HoldUpToFourSites) {
  for (int L = 1; L <= 4; ++L) expect_all_hold(verify_transformation_lemmas(L));
}

TEST(ConjugationIdentities, SingleSiteExample) {
  // q^{a_1} a_1^+ q^{-a_1} = q a_1^+ at L = 1, written out with 3x3 matrices.
  const SiteOps& o = site_ops();
  const SparseQMatrix p = SparseQMatrix::diagonal({q(1), LaurentPoly(1), LaurentPoly(1)});
  const SparseQMatrix p_inv = SparseQMatrix::diagonal({q(-1), LaurentPoly(1), LaurentPoly(1)});
  const SparseQMatrix a = embed(o.a_plus, 1, 1);
  EXPECT_EQ(p * a * p_inv, a.scaled(q(1)));
}

TEST(ConjugationIdentities, BondPairExample) {
  // q^{a_1 b_2} a_1^+ q^{-a_1 b_2} = q^{b_2} a_1^+ at L = 2.
  const SiteOps& o = site_ops();
  const auto d = [](int sgn) {
    return diagonal_lift([sgn](const Configuration& c) { return q(sgn * c.occupations(1).a * c.occupations(2).b); }, 2);
  };
  const SparseQMatrix a = embed(o.a_plus, 1, 2);
  const SparseQMatrix qb2 = diagonal_lift([](const Configuration& c) { return q(c.occupations(2).b); }, 2);
  EXPECT_EQ(d(1) * a * d(-1), qb2 * a);
}
