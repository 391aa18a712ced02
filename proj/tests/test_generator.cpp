#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "asep2/generator.hpp"
#include "asep2/measure.hpp"

using namespace asep2;

namespace {

LaurentPoly q(int k) { return LaurentPoly::q_power(k); }
std::uint32_t off(const char* s) { return static_cast<std::uint32_t>(Configuration::parse(s).offset()); }

// Transition matrix from the move table, entry by entry.
SparseQMatrix generator_from_moves(int L, const Rational& w) {
  SparseQMatrix h(basis_dimension(L));
  for (std::uint64_t i = 1; i <= basis_dimension(L); ++i) {
    const Configuration c = Configuration::decode(i, L);
    for (int k = 1; k < L; ++k) {
      const char a = to_char(c.at(k)), b = to_char(c.at(k + 1));
      const std::string pair{a, b};
      int e;
      if (pair == "A0" || pair == "0B" || pair == "AB") e = 1;
      else if (pair == "0A" || pair == "B0" || pair == "BA") e = -1;
      else continue;
      const LaurentPoly rate = LaurentPoly(w) * q(e);
      h.add_to(static_cast<std::uint32_t>(c.swap(k).offset()), static_cast<std::uint32_t>(c.offset()), -rate);
      h.add_to(static_cast<std::uint32_t>(c.offset()), static_cast<std::uint32_t>(c.offset()), rate);
    }
  }
  return h;
}

}  // namespace

TEST(LocalHopping, MatchesDisplayedMatrix) {
  const SparseQMatrix h = local_hopping_matrix();
  EXPECT_EQ(h.get(off("A0"), off("A0")), q(1));
  EXPECT_EQ(h.get(off("0A"), off("A0")), -q(1));
  EXPECT_EQ(h.nnz(), 12u);
  const QVector colsum = row_times(summation_vector(2), h);
  EXPECT_TRUE(colsum.is_zero());
  EXPECT_EQ(hopping_embedded(1, {2, 1}), h);
}

TEST(Generator, Examples) {
  EXPECT_TRUE(generator({1, 1}).is_zero());
  EXPECT_EQ(generator({2, 1}), local_hopping_matrix());
  EXPECT_TRUE(row_times(summation_vector(3), generator({3, 1})).is_zero());
  EXPECT_THROW(generator({0, 1}), std::invalid_argument);
  EXPECT_THROW(generator({2, 0}), std::invalid_argument);
  EXPECT_THROW(hopping_embedded(2, {2, 1}), std::out_of_range);
}

TEST(Generator, HoppingActsLocally) {
  const SparseQMatrix h = hopping_embedded(1, {3, 1});
  EXPECT_TRUE(apply(h, basis_vector(Configuration::parse("AAA"))).is_zero());
  const QVector out = apply(hopping_embedded(2, {3, 1}), basis_vector(Configuration::parse("0A0")));
  EXPECT_EQ(out.entries().size(), 2u);
  EXPECT_EQ(out.get(off("0A0")), q(1));
  EXPECT_EQ(out.get(off("00A")), -q(1));
}

TEST(GeneratorProperty, MatchesMoveTable) {
  for (int L = 1; L <= 5; ++L) {
    EXPECT_EQ(generator({L, 1}), generator_from_moves(L, 1));
    EXPECT_EQ(generator({L, Rational(3, 2)}), generator_from_moves(L, Rational(3, 2)));
  }
}

TEST(GeneratorProperty, ConservationAndStructure) {
  for (int L = 1; L <= 5; ++L) {
    const SparseQMatrix h = generator({L, 1});
    EXPECT_TRUE(row_times(summation_vector(L), h).is_zero());
    h.for_each([&](std::uint32_t r, std::uint32_t c, const LaurentPoly& v) {
      const Configuration to = Configuration::decode(r + 1, L);
      const Configuration from = Configuration::decode(c + 1, L);
      EXPECT_EQ(to.sector(), from.sector());
      if (r != c) {
        EXPECT_TRUE(v == -q(1) || v == -q(-1)) << v.to_string();
      }
    });
  }
  EXPECT_TRUE(row_times(summation_vector(6), generator({6, 1})).is_zero());
}

TEST(PerkSchultz, Examples) {
  for (int L = 2; L <= 5; ++L) {
    const SparseQMatrix h = generator({L, 1});
    const SparseQMatrix g = perk_schultz({L, 1});
    EXPECT_EQ(g, g.transpose());
    for (std::uint32_t i = 0; i < g.dim(); ++i) EXPECT_EQ(g.get(i, i), h.get(i, i));
    auto at_one = [](const SparseQMatrix& m) { return m.map_entries([](const LaurentPoly& p) { return LaurentPoly(p.at_one()); }); };
    EXPECT_EQ(at_one(g), at_one(h));
    g.for_each([](std::uint32_t r, std::uint32_t c, const LaurentPoly& v) {
      if (r != c) EXPECT_EQ(v, LaurentPoly(-1));
    });
  }
}

TEST(Jumps, Examples) {
  const JumpList a0 = jumps(Configuration::parse("A0"));
  ASSERT_EQ(a0.size(), 1u);
  EXPECT_EQ(a0[0].target, Configuration::parse("0A"));
  EXPECT_EQ(a0[0].rate, q(1));
  EXPECT_TRUE(jumps(Configuration::parse("AA")).empty());
  const JumpList a0b = jumps(Configuration::parse("A0B"));
  ASSERT_EQ(a0b.size(), 2u);
  EXPECT_EQ(a0b[0].target, Configuration::parse("0AB"));
  EXPECT_EQ(a0b[0].rate, q(1));
  EXPECT_EQ(a0b[1].target, Configuration::parse("AB0"));
  // 0B -> B0 is a forward move of the table.
  EXPECT_EQ(a0b[1].rate, q(1));
  EXPECT_THROW(numeric_jumps(Configuration::parse("A0"), 0.0), std::invalid_argument);
}

TEST(JumpsProperty, AgreeWithGeneratorColumns) {
  for (int L = 1; L <= 4; ++L) {
    for (double q0 : {0.5, 1.0, 2.0}) {
      const double w = 1.5;
      const SparseQMatrix h = generator({L, Rational(3, 2)});
      for (std::uint64_t i = 1; i <= basis_dimension(L); ++i) {
        const Configuration c = Configuration::decode(i, L);
        double total = 0;
        for (const NumericJump& j : numeric_jumps(c, q0, w)) {
          total += j.rate;
          const double entry = evaluate(h.get(static_cast<std::uint32_t>(j.target.offset()), static_cast<std::uint32_t>(c.offset())), q0);
          EXPECT_NEAR(entry, -j.rate, 1e-12);
        }
        EXPECT_NEAR(total, evaluate(h.get(static_cast<std::uint32_t>(c.offset()), static_cast<std::uint32_t>(c.offset())), q0), 1e-12);
      }
    }
  }
}

TEST(ReversedGenerator, Examples) {
  const SparseQMatrix h = generator({2, 1});
  const SparseQMatrix pi = diagonal_lift(measure_occupation, 2);
  EXPECT_EQ(reversed_generator(h, pi), h);
  EXPECT_EQ(reversed_generator(h, SparseQMatrix::identity(9)), h.transpose());
  auto at_one = [](const SparseQMatrix& m) { return m.map_entries([](const LaurentPoly& p) { return LaurentPoly(p.at_one()); }); };
  EXPECT_EQ(at_one(reversed_generator(h, SparseQMatrix::identity(9))), at_one(h));
  SparseQMatrix singular = SparseQMatrix::identity(9);
  singular.set(0, 0, LaurentPoly());
  EXPECT_THROW(reversed_generator(h, singular), std::invalid_argument);
}
