#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "monosol/coloring.hpp"
#include "monosol/equation.hpp"
#include "oracles.hpp"

using namespace monosol;

namespace {

std::string digits(const Coloring& c) {
  std::string s;
  for (auto v : c.colors()) s += char('0' + v);
  return s;
}

}  // namespace

TEST(BlockCodec, DecodesAppendixExample) {
  EXPECT_EQ(digits(decode_blocks("0^3(10)^2 1^2 0", 2)), "0001010110");
  EXPECT_EQ(digits(decode_blocks("0", 2)), "0");
  EXPECT_EQ(digits(decode_blocks("0^310101^20", 2)), "0001010110");
  EXPECT_EQ(digits(decode_blocks("1^{12}0", 2)), "1111111111110");
  EXPECT_EQ(digits(decode_blocks("(012)^{2}", 3)), "012012");
}

TEST(BlockCodec, EncodesMaximalRuns) {
  auto c = decode_blocks("0001010110", 2);
  EXPECT_EQ(encode_blocks(c), "0^310101^20");
  EXPECT_EQ(encode_blocks(Coloring::monochromatic(12)), "0^{12}");
}

TEST(BlockCodec, RejectsMalformed) {
  for (const char* bad : {"", "  ", "0^0", "(10", "()", "0^", "0^{}", "0^{3", "a", "2", "0^{0}", "(10){8}"})
    EXPECT_THROW(decode_blocks(bad, 2), InputError) << bad;
}

TEST(BlockCodec, RoundTripsRandomColorings) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100000; ++trial) {
    int k = 1 + static_cast<int>(rng() % 10);
    int n = 1 + static_cast<int>(rng() % 500);
    std::vector<std::uint8_t> col(n);
    // runs of random length give exponents on both sides of 10
    for (int i = 0; i < n;) {
      int len = 1 + static_cast<int>(rng() % 25);
      std::uint8_t v = static_cast<std::uint8_t>(rng() % k);
      for (int j = 0; j < len && i < n; ++j) col[i++] = v;
    }
    Coloring c(k, col);
    ASSERT_EQ(decode_blocks(encode_blocks(c), k), c);
  }
}

TEST(Generators, Multiples) {
  EXPECT_EQ(digits(multiples_coloring(3, 9)), "110110110");
  EXPECT_EQ(count_monochromatic(parse_equation("5x-5y=z"), multiples_coloring(5, 100)), 70);
  EXPECT_EQ(count_monochromatic(parse_equation("4x-4y=z"), multiples_coloring(4, 25)), 5);
  EXPECT_THROW(multiples_coloring(1, 9), InputError);
}

TEST(Generators, ResidueOddA) {
  auto c = residue_coloring_odd_a(3, 12);
  for (int i = 1; i <= 12; ++i) {
    int r = i % 3;
    int want = r == 1 ? 0 : r == 2 ? 1 : (i % 6 == 3 ? 0 : 1);
    EXPECT_EQ(c(i), want) << i;
  }
  EXPECT_THROW(residue_coloring_odd_a(4, 12), InputError);
  const LinearEquation x5z(1, 1, 5);
  const std::int64_t n = 2000;
  double density = double(count_monochromatic(x5z, residue_coloring_odd_a(5, n))) / double(n * n);
  EXPECT_NEAR(density, 1.0 / 100, 2.0 / n);
  const LinearEquation x3z(1, 1, 3);
  double d3 = double(count_monochromatic(x3z, residue_coloring_odd_a(3, n))) / double(n * n);
  EXPECT_NEAR(d3, 1.0 / 36, 2.0 / n);
}

TEST(Generators, TwoBlock) {
  auto c = two_block_coloring(6, 12960);
  EXPECT_EQ(encode_blocks(c), "0^{1008}1^{3311}0^{8641}");
  EXPECT_THROW(two_block_coloring(3, 2), InputError);
  const std::int64_t n = 4000;
  double d = double(count_monochromatic(LinearEquation(1, 1, 4), two_block_coloring(4, n))) / double(n * n);
  EXPECT_NEAR(d, 7.0 / 256, 3.0 / n);
}

TEST(Generators, AxbyBlocks) {
  EXPECT_EQ(encode_blocks(axby_block_coloring(2, 3, 100)), "0^{10}1^{40}0^{50}");
  EXPECT_EQ(encode_blocks(axby_block_coloring(2, 5, 200)), "0^{14}1^{86}0^{100}");
  EXPECT_THROW(axby_block_coloring(2, 4, 100), InputError);
  EXPECT_THROW(axby_block_coloring(3, 2, 100), InputError);
}

TEST(Generators, AxbyAgainstClosedForm) {
  // Direct count of the block coloring for 2x+3y=z against the lattice-point sum.
  auto c = axby_block_coloring(2, 3, 150);
  std::vector<std::uint8_t> col(c.colors().begin(), c.colors().end());
  const auto mu = count_monochromatic(LinearEquation(2, 3, 1), c);
  EXPECT_EQ(mu, oracle::monochromatic(2, 3, 1, col));
  std::int64_t sum = 0;
  for (std::int64_t z = 5; z <= 150 / 10; ++z) sum += oracle::lattice_count(2, 3, z);
  EXPECT_EQ(sum, 23);
  EXPECT_LE(mu, sum);
}

TEST(Generators, OutputsHaveLengthNAndValidColors) {
  for (std::int64_t n : {1, 7, 50, 333}) {
    for (const auto& c : {multiples_coloring(3, n), residue_coloring_odd_a(5, n), axby_block_coloring(2, 7, n)}) {
      EXPECT_EQ(c.n(), n);
      for (auto v : c.colors()) EXPECT_LT(v, c.k());
    }
  }
}

TEST(SchurTupleColoring, Examples) {
  auto chi2 = SchurTuple::from_integers(2, {4, 6, 1});
  EXPECT_EQ(encode_blocks(schur_tuple_coloring(chi2, 11)), "0^41^60");
  EXPECT_EQ(encode_blocks(schur_tuple_coloring(chi2, 12)), "0^41^60^2");
  auto chi3 = SchurTuple::from_integers(3, {10, 14, 2, 28, 1, 11, 1});
  EXPECT_EQ(encode_blocks(schur_tuple_coloring(chi3, 67)), "0^{10}1^{14}0^22^{28}01^{11}0");
  EXPECT_THROW(schur_tuple_coloring(chi3, 6), InputError);
  EXPECT_THROW(SchurTuple::from_integers(2, {4, 6}), InputError);
  EXPECT_THROW(SchurTuple::from_integers(2, {4, 0, 1}), InputError);
}

TEST(SchurTupleColoring, BlockLengthsWithinOneOfScaledEntries) {
  auto chi3 = SchurTuple::from_integers(3, {10, 14, 2, 28, 1, 11, 1});
  for (std::int64_t n : {7, 50, 100, 1001}) {
    auto c = schur_tuple_coloring(chi3, n);
    ASSERT_EQ(c.n(), n);
    // block boundaries sit at floor(n E_i / M); recover lengths by walking the pattern
    std::int64_t at = 0, prefix = 0;
    for (std::size_t i = 0; i < 7; ++i) {
      prefix += chi3.entries()[i].get_num().get_si();
      std::int64_t end = n * prefix / 67;
      double exact = double(n) * chi3.entries()[i].get_d() / 67.0;
      EXPECT_LT(std::abs(double(end - at) - exact), 1.0);
      for (std::int64_t v = at + 1; v <= end; ++v) EXPECT_EQ(c(v), nu2(i + 1));
      at = end;
    }
  }
}
