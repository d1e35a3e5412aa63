#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "monosol/io.hpp"
#include "monosol/schur.hpp"

using namespace monosol;

namespace {

std::int64_t brute_schur_mono(const Coloring& c) {
  std::int64_t s = 0;
  for (std::int64_t x = 1; x <= c.n(); ++x)
    for (std::int64_t y = 1; y <= c.n(); ++y)
      for (std::int64_t z = 1; z <= c.n(); ++z)
        if (x + y == z && c(x) == c(y) && c(y) == c(z)) ++s;
  return s;
}

SchurTuple published(int k) { return SchurTuple::from_integers(k, published_schur_tuples().at(k)); }

}  // namespace

TEST(Pattern, RecursiveStructure) {
  EXPECT_EQ(palindromic_pattern(1).word, (std::vector<int>{0}));
  EXPECT_EQ(palindromic_pattern(3).word, (std::vector<int>{0, 1, 0, 2, 0, 1, 0}));
  for (int k = 1; k <= 10; ++k) {
    auto w = palindromic_pattern(k).word;
    ASSERT_EQ(w.size(), (std::size_t{1} << k) - 1);
    for (std::size_t i = 0; i < w.size(); ++i) {
      EXPECT_EQ(w[i], w[w.size() - 1 - i]);
      EXPECT_EQ(w[i], nu2(i + 1));
    }
  }
  EXPECT_THROW(palindromic_pattern(0), InputError);
  EXPECT_THROW(palindromic_pattern(11), InputError);
}

TEST(Pk, SmallCasesMatchPublishedTuples) {
  for (int k = 2; k <= 4; ++k) {
    auto r = minimize_pk(k);
    EXPECT_EQ(r.tuple, published(k)) << k;
    EXPECT_EQ(r.value, Rational(1) / published(k).total());
  }
  EXPECT_THROW(minimize_pk(1), InputError);
  EXPECT_THROW(minimize_pk(3, 0), InputError);
}

TEST(Pk, OptimizerIsStationaryOnTheSimplex) {
  // p_k is quadratic, so central differences with step 1 give the exact gradient.
  for (int k = 2; k <= 6; ++k) {
    PkPolynomial p(k);
    auto r = minimize_pk(k, 7);
    Rational sum = 0;
    for (const auto& v : r.optimizer) sum += v;
    EXPECT_EQ(sum, 7);
    std::vector<Rational> grad;
    for (std::size_t i = 0; i < p.size(); ++i) {
      auto up = r.optimizer, down = r.optimizer;
      up[i] += 1;
      down[i] -= 1;
      grad.push_back((p.evaluate(up) - p.evaluate(down)) / 2);
    }
    for (const auto& g : grad) EXPECT_EQ(g, grad[0]) << k;
  }
}

TEST(Pk, RandomSimplexPointsNeverBeatTheMinimum) {
  std::mt19937_64 rng(61);
  for (int k = 2; k <= 5; ++k) {
    PkPolynomial p(k);
    auto r = minimize_pk(k);
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<Rational> x(p.size());
      Rational s = 0;
      for (auto& v : x) {
        v = static_cast<long>(1 + rng() % 1000);
        s += v;
      }
      for (auto& v : x) v /= s;
      ASSERT_GE(p.evaluate(x), r.value);
      // convexity along the segment to the optimizer
      std::vector<Rational> mid(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) mid[i] = (x[i] + r.optimizer[i]) / 2;
      ASSERT_LE(p.evaluate(mid), (p.evaluate(x) + r.value) / 2);
    }
  }
}

TEST(Pk, ScalesQuadratically) {
  auto one = minimize_pk(3, 1), ten = minimize_pk(3, 10);
  EXPECT_EQ(ten.value, one.value * 100);
  EXPECT_EQ(ten.tuple, one.tuple);
}

TEST(Conjecture, FirstEntriesAndFullAgreement) {
  for (int k = 2; k <= 8; ++k) {
    auto r = conjectured_tuple(k);
    EXPECT_TRUE(r.full_agreement) << k;
    EXPECT_EQ(r.tuple, published(k));
  }
  EXPECT_EQ(conjectured_tuple(3).tuple.entries().front(), 10);
  EXPECT_THROW(conjectured_tuple(9), InputError);
}

TEST(Coefficient, SmallTuples) {
  EXPECT_EQ(asymptotic_mono_coefficient(published(2)), Rational(1, 11));
  EXPECT_EQ(asymptotic_mono_coefficient(published(3)), Rational(1, 67));
  EXPECT_EQ(asymptotic_mono_coefficient(published(4)), Rational(1, 496));
  EXPECT_EQ(asymptotic_mono_coefficient(published(5), 5), Rational(1153, 4260096));
  EXPECT_EQ(Rational(1153, 4260096), rational(4128 + 22 * 22, 4128 * 4128));
  EXPECT_THROW(asymptotic_mono_coefficient(published(3), 4), InputError);
}

TEST(Coefficient, MonochromaticColoringGivesOneHalf) {
  EXPECT_EQ(asymptotic_mono_coefficient(SchurTuple::from_integers(1, {1})), Rational(1, 2));
}

TEST(Counting, MatchesTripleLoop) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 50; ++trial) {
    std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 60);
    int k = 1 + static_cast<int>(rng() % 5);
    std::vector<std::uint8_t> c(n);
    for (auto& v : c) v = static_cast<std::uint8_t>(rng() % k);
    Coloring col(k, c);
    EXPECT_EQ(count_mono_multicolor(col), brute_schur_mono(col));
    EXPECT_EQ(count_mono_multicolor(col, 3), brute_schur_mono(col));
  }
  EXPECT_EQ(count_mono_multicolor(Coloring::monochromatic(5)), 10);
}

TEST(Counting, ApproachesCoefficient) {
  for (int k = 2; k <= 4; ++k) {
    auto t = published(k);
    const std::int64_t n = 10 * to_int64(t.total().get_num());
    auto mu = count_mono_multicolor(schur_tuple_coloring(t, n), 4);
    Rational dev = abs(Rational(mu) - asymptotic_mono_coefficient(t) * n * n);
    EXPECT_LE(dev, Rational(3 * n)) << k;
  }
}

TEST(TupleFile, MatchesEmbeddedCopy) {
  auto file = tuples_from_json(read_json_file(data_dir() + "/schur_tuples.json"));
  EXPECT_EQ(file, published_schur_tuples());
}
