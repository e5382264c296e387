#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "fibrekit/error.hpp"
#include "fibrekit/rational_linalg.hpp"
#include "fibrekit/twist_length.hpp"
#include "oracles.hpp"

namespace fibrekit {
namespace {

RatVector q(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Rank by searching for the largest nonvanishing minor (Leibniz).
std::size_t rank_by_minors(const std::vector<IntVector>& rows, std::size_t cols) {
  std::size_t best = 0;
  const std::size_t m = rows.size();
  for (std::size_t r = 1; r <= std::min(m, cols); ++r) {
    bool found = false;
    std::vector<bool> row_pick(m, false), col_pick(cols, false);
    std::fill(row_pick.end() - static_cast<long>(r), row_pick.end(), true);
    do {
      std::fill(col_pick.begin(), col_pick.end(), false);
      std::fill(col_pick.end() - static_cast<long>(r), col_pick.end(), true);
      do {
        IntMatrix minor(r, r);
        std::size_t ii = 0;
        for (std::size_t i = 0; i < m; ++i) {
          if (!row_pick[i]) continue;
          std::size_t jj = 0;
          for (std::size_t j = 0; j < cols; ++j)
            if (col_pick[j]) minor(ii, jj++) = rows[i][j];
          ++ii;
        }
        found = oracle::det_leibniz(minor) != 0;
      } while (!found && std::next_permutation(col_pick.begin(), col_pick.end()));
    } while (!found && std::next_permutation(row_pick.begin(), row_pick.end()));
    if (found) best = r;
  }
  return best;
}

TEST(RowReduce, LowestColumnPivotsAndRank) {
  const auto form = row_reduce({q({0, 2, 4}), q({0, 1, 2}), q({1, 0, 1})}, 3);
  EXPECT_EQ(form.rank(), 2u);
  EXPECT_EQ(form.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(nullspace({q({0, 2, 4}), q({0, 1, 2}), q({1, 0, 1})}, 3), (std::vector<RatVector>{q({-1, -2, 1})}));
  EXPECT_EQ(nullspace({}, 2), (std::vector<RatVector>{q({1, 0}), q({0, 1})}));
}

TEST(OrthogonalComplement, TorusInstances) {
  const SurfaceSignature s(1, 1);
  const auto a1 = HomologyClass::a(s, 1);
  const auto b1 = HomologyClass::b(s, 1);
  EXPECT_EQ(orthogonal_complement(s, {}).size(), 2u);
  const std::vector<HomologyClass> only_a{a1};
  EXPECT_EQ(orthogonal_complement(s, only_a), (std::vector<RatVector>{q({1, 0})}));
  const std::vector<HomologyClass> both{a1, b1};
  EXPECT_TRUE(orthogonal_complement(s, both).empty());
  const std::vector<HomologyClass> mixed{a1, HomologyClass::a(SurfaceSignature(2, 1), 1)};
  EXPECT_THROW(orthogonal_complement(s, mixed), PreconditionError);
}

TEST(OrthogonalComplement, AgreesWithEnumerationOracle) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const int g = 1 + trial % 2;
    const SurfaceSignature s(g, 1 + trial % 3);
    const std::size_t n = s.rank();
    std::vector<HomologyClass> classes;
    for (int i = 0; i < trial % 4; ++i) classes.push_back(oracle::random_class(s, rng, -2, 2, true));
    const auto basis = orthogonal_complement(s, classes);

    std::vector<IntVector> rows;
    for (const auto& c : classes) {
      IntVector functional(n);
      for (std::size_t j = 0; j < n; ++j) {
        IntVector e(n, Integer(0));
        e[j] = 1;
        functional[j] = oracle::pairing(g, e, c.coords());
      }
      rows.push_back(functional);
    }
    // dim V^perp + rank = b1
    EXPECT_EQ(basis.size() + rank_by_minors(rows, n), n);

    // Echelon structure: each basis vector ends at its free column with a 1,
    // every other basis vector vanishes there, and free columns increase.
    std::vector<std::size_t> free_cols;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      std::size_t f = n;
      while (f > 0 && basis[b][f - 1] == 0) --f;
      ASSERT_GT(f, 0u);
      --f;
      EXPECT_EQ(basis[b][f], 1);
      for (std::size_t o = 0; o < basis.size(); ++o)
        if (o != b) EXPECT_EQ(basis[o][f], 0);
      if (!free_cols.empty()) EXPECT_GT(f, free_cols.back());
      free_cols.push_back(f);
    }
    // Every orthogonal lattice vector in a small box is in the span.
    std::vector<int> x(n, -2);
    std::function<void(std::size_t)> visit = [&](std::size_t at) {
      if (at == n) {
        IntVector v(x.begin(), x.end());
        for (const auto& c : classes)
          if (oracle::pairing(g, v, c.coords()) != 0) return;
        RatVector combo(n, Rational(0));
        for (std::size_t b = 0; b < basis.size(); ++b)
          for (std::size_t j = 0; j < n; ++j) combo[j] += Rational(v[free_cols[b]]) * basis[b][j];
        EXPECT_EQ(combo, to_rational(v));
        return;
      }
      for (int value = -2; value <= 2; ++value) {
        x[at] = value;
        visit(at + 1);
      }
    };
    if (n <= 4) visit(0);
  }
}

TEST(Obstruction, Instances) {
  const SurfaceSignature torus(1, 1);
  const std::vector<HomologyClass> only_a{HomologyClass::a(torus, 1)};
  const auto cert = knot_monodromy_obstruction(1, only_a);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->witness_class(), HomologyClass::a(torus, 1));
  EXPECT_TRUE(certificate_is_consistent(*cert));

  const SurfaceSignature g2(2, 1);
  const std::vector<HomologyClass> three{HomologyClass::a(g2, 1), HomologyClass::b(g2, 1), HomologyClass::a(g2, 2)};
  const auto cert2 = knot_monodromy_obstruction(2, three);
  ASSERT_TRUE(cert2.has_value());
  EXPECT_EQ(cert2->witness_class(), HomologyClass::a(g2, 2));

  const std::vector<HomologyClass> full{HomologyClass::a(torus, 1), HomologyClass::b(torus, 1)};
  EXPECT_FALSE(knot_monodromy_obstruction(1, full).has_value());
}

TEST(Obstruction, RepeatedAndNegatedCurvesCountOnce) {
  const SurfaceSignature torus(1, 1);
  const auto a1 = HomologyClass::a(torus, 1);
  const std::vector<HomologyClass> repeated{a1, -a1, a1};
  const auto cert = knot_monodromy_obstruction(1, repeated);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->classes.size(), 1u);
  EXPECT_TRUE(cert->covers(-a1));
}

TEST(Obstruction, WitnessIsPrimitiveIntegerVector) {
  const SurfaceSignature g2(2, 1);
  const std::vector<HomologyClass> classes{HomologyClass(g2, {2, 0, 0, 4}), HomologyClass(g2, {0, 3, 3, 0})};
  const auto cert = knot_monodromy_obstruction(2, classes);
  ASSERT_TRUE(cert.has_value());
  EXPECT_TRUE(certificate_is_consistent(*cert));
  Integer content = 0;
  for (const auto& x : cert->witness) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
  EXPECT_EQ(content, 1);
}

TEST(Obstruction, Preconditions) {
  const SurfaceSignature pants(0, 3);
  const std::vector<HomologyClass> on_pants{HomologyClass::d(pants, 1)};
  EXPECT_THROW(knot_monodromy_obstruction(1, on_pants), PreconditionError);
  const SurfaceSignature two_boundaries(1, 2);
  const std::vector<HomologyClass> on_annulus_torus{HomologyClass::a(two_boundaries, 1)};
  EXPECT_THROW(knot_monodromy_obstruction(1, on_annulus_torus), PreconditionError);
  EXPECT_THROW(knot_monodromy_obstruction(0, {}), PreconditionError);
}

TEST(VerifyCertificate, Instances) {
  const SurfaceSignature torus(1, 1);
  const auto a1 = HomologyClass::a(torus, 1);
  const std::vector<HomologyClass> only_a{a1};
  const auto cert = knot_monodromy_obstruction(1, only_a);
  EXPECT_TRUE(verify_certificate(*cert, TwistWord(torus, {{a1, 7}})));
  EXPECT_TRUE(verify_certificate(*cert, TwistWord(torus)));
  EXPECT_THROW(verify_certificate(*cert, TwistWord(torus, {{HomologyClass::b(torus, 1), 1}})), PreconditionError);

  const SurfaceSignature g2(2, 1);
  const auto b1 = HomologyClass::b(g2, 1);
  const auto a2 = HomologyClass::a(g2, 2);
  const std::vector<HomologyClass> three{HomologyClass::a(g2, 1), b1, a2};
  const auto cert2 = knot_monodromy_obstruction(2, three);
  EXPECT_TRUE(verify_certificate(*cert2, TwistWord(g2, {{HomologyClass::a(g2, 1), 1}, {b1, -2}, {a2, 3}})));
}

TEST(VerifyCertificate, RandomWordsOverFewCurves) {
  std::mt19937_64 rng(43);
  for (int g = 1; g <= 3; ++g) {
    const SurfaceSignature s(g, 1);
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<HomologyClass> classes;
      const int n = trial % (2 * g);
      for (int i = 0; i < n; ++i) classes.push_back(oracle::random_class(s, rng, -2, 2));
      const auto cert = knot_monodromy_obstruction(g, classes);
      ASSERT_TRUE(cert.has_value());
      ASSERT_TRUE(certificate_is_consistent(*cert));
      for (int w = 0; w < 100; ++w) {
        std::vector<TwistLetter> letters;
        if (!cert->classes.empty()) {
          const int len = static_cast<int>(rng() % 9);
          for (int i = 0; i < len; ++i) {
            letters.emplace_back(cert->classes[rng() % cert->classes.size()], oracle::random_exponent(rng, 5));
          }
        }
        const TwistWord word(s, std::move(letters));
        ASSERT_TRUE(verify_certificate(*cert, word));
        EXPECT_EQ((IntMatrix::identity(s.rank()) - word_action(word)).determinant(), 0);
      }
    }
  }
}

TEST(TwistLengthBound, Formula) {
  EXPECT_EQ(knot_twist_length_lower_bound(1), 2);
  EXPECT_EQ(knot_twist_length_lower_bound(2), 4);
  EXPECT_EQ(knot_twist_length_lower_bound(0), 0);
  EXPECT_THROW(knot_twist_length_lower_bound(-1), PreconditionError);
}

}  // namespace
}  // namespace fibrekit
