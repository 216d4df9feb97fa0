#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "spchol/etree.hpp"
#include "spchol/generate.hpp"
#include "spchol/matrix_market.hpp"
#include "spchol/ordering.hpp"
#include "spchol/permutation.hpp"
#include "spchol/reference_factor.hpp"
#include "test_support.hpp"

namespace spchol {
namespace {

using testing::fig1_matrix;

SymmetricSparseMatrix read_string(const std::string& text) {
  std::istringstream in(text);
  return read_matrix_market(in);
}

MatrixMarketError::Kind error_kind(const std::string& text, Int* line = nullptr) {
  try {
    read_string(text);
  } catch (const MatrixMarketError& e) {
    if (line) *line = e.line();
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return MatrixMarketError::Kind::kIo;
}

TEST(MatrixMarket, ReadsWorkedExample) {
  const auto a = read_matrix_market(std::string(SPCHOL_TEST_DATA) + "/fig1.mtx");
  EXPECT_EQ(a.size(), 9);
  // 18 strictly-lower entries plus 9 diagonals.
  EXPECT_EQ(a.nnz(), 27);
  EXPECT_EQ(a.pattern(), fig1_matrix().pattern());
  const std::vector<Int> col1(a.pattern().column(0).begin(), a.pattern().column(0).end());
  EXPECT_EQ(col1, (std::vector<Int>{0, 1, 4, 5, 8}));
  EXPECT_TRUE(a.inserted_diagonals().empty());
}

TEST(MatrixMarket, SingleEntry) {
  const auto a = read_string("%%MatrixMarket matrix coordinate real symmetric\n1 1 1\n1 1 4.0\n");
  EXPECT_EQ(a.size(), 1);
  ASSERT_EQ(a.values().size(), 1u);
  EXPECT_EQ(a.values()[0], 4.0);
}

TEST(MatrixMarket, MirrorsUpperTriangle) {
  const auto a = read_string(
      "%%MatrixMarket matrix coordinate real symmetric\n5 5 6\n1 1 1\n2 2 1\n3 3 1\n4 4 1\n"
      "5 5 1\n2 5 3.5\n");
  const auto col = a.pattern().column(1);
  ASSERT_EQ(col.size(), 2u);
  EXPECT_EQ(col[1], 4);
  EXPECT_EQ(a.column_values(1)[1], 3.5);
}

TEST(MatrixMarket, SumsDuplicatesAndInsertsDiagonal) {
  const auto a = read_string(
      "%%MatrixMarket matrix coordinate real symmetric\n3 3 4\n1 1 2\n2 1 1\n1 2 0.5\n3 3 1\n");
  EXPECT_EQ(a.column_values(0)[1], 1.5);
  ASSERT_EQ(a.inserted_diagonals(), (std::vector<Int>{1}));
  EXPECT_EQ(a.column_values(1)[0], 0.0);
}

TEST(MatrixMarket, PatternValuesAreDiagonallyDominant) {
  const auto a = read_string(
      "%%MatrixMarket matrix coordinate pattern symmetric\n3 3 3\n2 1\n3 1\n3 3\n");
  EXPECT_EQ(a.column_values(0)[0], 3.0);
  EXPECT_EQ(a.column_values(0)[1], -1.0);
  EXPECT_EQ(a.column_values(1)[0], 2.0);
  EXPECT_EQ(a.column_values(2)[0], 2.0);
}

TEST(MatrixMarket, KeepsExplicitZeros) {
  const auto a = read_string(
      "%%MatrixMarket matrix coordinate real symmetric\n2 2 3\n1 1 1\n2 1 0\n2 2 1\n");
  EXPECT_EQ(a.nnz(), 3);
}

TEST(MatrixMarket, DistinctErrors) {
  using K = MatrixMarketError::Kind;
  Int line = 0;
  EXPECT_EQ(error_kind("%%MatrixMarket matrix\n1 1 1\n", &line), K::kMalformedHeader);
  EXPECT_EQ(line, 1);
  EXPECT_EQ(error_kind("%%MatrixMarket matrix coordinate real general\n1 1 1\n1 1 1\n"),
            K::kNotSymmetric);
  EXPECT_EQ(error_kind("%%MatrixMarket matrix array real symmetric\n1 1\n1\n"),
            K::kUnsupportedFormat);
  EXPECT_EQ(error_kind("%%MatrixMarket matrix coordinate real symmetric\n2 2 2\n1 1 1\n3 1 1\n",
                       &line),
            K::kIndexOutOfRange);
  EXPECT_EQ(line, 4);
  EXPECT_EQ(error_kind("%%MatrixMarket matrix coordinate real symmetric\n2 2 2\n1 1 1\n2 x\n",
                       &line),
            K::kMalformedEntry);
  EXPECT_EQ(line, 4);
  EXPECT_THROW(read_matrix_market("/nonexistent/file.mtx"), MatrixMarketError);
}

TEST(MatrixMarket, RoundTripIsExact) {
  const auto a = generate_spd(40, 0.2, 3);
  std::stringstream buf;
  write_matrix_market(buf, a);
  EXPECT_EQ(read_matrix_market(buf), a);
}

TEST(Permutation, IdentityLeavesMatrixUnchanged) {
  const auto a = generate_spd(12, 0.3, 1);
  EXPECT_EQ(apply_symmetric_permutation(a, Permutation::identity(12)), a);
}

TEST(Permutation, WithinSupernodePermutationOfWorkedExample) {
  // Old 6 -> 5, 9 -> 6, 5 -> 7, 7 -> 8, 8 -> 9 (1-based).
  std::vector<Int> old_to_new{0, 1, 2, 3, 6, 4, 7, 8, 5};
  const auto p = Permutation::from_old_to_new(old_to_new);
  const auto a = fig1_matrix();
  const auto b = apply_symmetric_permutation(a, p);
  EXPECT_EQ(b.nnz(), a.nnz());
  // Old column 1 had rows {2,5,6,9}; now {2,7,5,6} -> {2,5,6,7}.
  const std::vector<Int> col1(b.pattern().column(0).begin(), b.pattern().column(0).end());
  EXPECT_EQ(col1, (std::vector<Int>{0, 1, 4, 5, 6}));
  // New column 5 holds old column 6's neighbours {1,5,7,9} -> {1,7,8,6}.
  const auto dense = to_dense(b);
  for (Int i : {0, 6, 7, 5}) EXPECT_NE(dense[i + 4 * 9], 0.0) << i;
}

TEST(Permutation, MatchesDenseOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = generate_spd(8, 0.4, trial);
    const auto p = Permutation::from_old_to_new(testing::random_permutation(8, rng));
    const auto b = apply_symmetric_permutation(a, p);
    const auto da = to_dense(a);
    const auto db = to_dense(b);
    for (Int j = 0; j < 8; ++j) {
      for (Int i = 0; i < 8; ++i) {
        EXPECT_EQ(db[p.new_index(i) + p.new_index(j) * 8], da[i + j * 8]);
      }
    }
    EXPECT_EQ(b.nnz(), a.nnz());
    EXPECT_EQ(apply_symmetric_permutation(b, p.inverse()), a);
  }
}

TEST(Permutation, Composition) {
  std::mt19937_64 rng(5);
  const auto p = Permutation::from_old_to_new(testing::random_permutation(10, rng));
  const auto q = Permutation::from_old_to_new(testing::random_permutation(10, rng));
  const auto a = generate_spd(10, 0.3, 2);
  EXPECT_EQ(apply_symmetric_permutation(apply_symmetric_permutation(a, p), q),
            apply_symmetric_permutation(a, p.then(q)));
  EXPECT_TRUE(p.then(p.inverse()).is_identity());
}

TEST(Permutation, Errors) {
  EXPECT_THROW(Permutation::from_old_to_new({0, 0}), std::invalid_argument);
  EXPECT_THROW(apply_symmetric_permutation(generate_spd(3, 1.0, 1), Permutation::identity(4)),
               std::invalid_argument);
}

TEST(Permutation, FileRoundTrip) {
  std::mt19937_64 rng(9);
  const auto p = Permutation::from_old_to_new(testing::random_permutation(15, rng));
  std::stringstream buf;
  write_permutation(buf, p);
  EXPECT_EQ(read_permutation(buf), p);
  std::istringstream bad("1\n1\n");
  EXPECT_THROW(read_permutation(bad), std::invalid_argument);
}

TEST(Generate, Degenerate) {
  const auto a = generate_spd(1, 1.0, 42);
  ASSERT_EQ(a.values().size(), 1u);
  EXPECT_GE(a.values()[0], 1.0);
}

TEST(Generate, Deterministic) {
  EXPECT_EQ(generate_spd(50, 0.1, 7), generate_spd(50, 0.1, 7));
  EXPECT_NE(generate_spd(50, 0.1, 7), generate_spd(50, 0.1, 8));
}

TEST(Generate, DiagonallyDominantAndSpd) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto a = generate_spd(50, 0.1, seed);
    const auto d = to_dense(a);
    for (Int i = 0; i < 50; ++i) {
      double row = 0.0;
      for (Int j = 0; j < 50; ++j) {
        if (j != i) row += std::abs(d[i + j * 50]);
      }
      EXPECT_DOUBLE_EQ(d[i + i * 50], 1.0 + row);
    }
    EXPECT_NO_THROW(dense_cholesky(a));
  }
}

TEST(Generate, GridLaplacian) {
  const auto a = grid_laplacian_2d(3, 4);
  EXPECT_EQ(a.size(), 12);
  // 12 diagonals + 3*3 horizontal + 2*4 vertical edges.
  EXPECT_EQ(a.nnz(), 12 + 9 + 8);
  EXPECT_NO_THROW(dense_cholesky(a));
}

Int fill_after(const SymmetricSparsePattern& a, const Permutation& p) {
  const auto b = apply_symmetric_permutation(a, p);
  return count_fill(b, symbolic_factorization(b, elimination_tree(b)));
}

TEST(MinimumDegree, DiagonalGivesIdentity) {
  const auto a = assemble_symmetric(6, std::vector<Triplet>{{0, 0, 1}, {1, 1, 1}, {2, 2, 1},
                                                            {3, 3, 1}, {4, 4, 1}, {5, 5, 1}});
  EXPECT_TRUE(minimum_degree_order(a.pattern()).is_identity());
}

TEST(MinimumDegree, StarIsFillFree) {
  // Center 0 joined to 1..4.
  const auto a = testing::from_pairs(5, {{1, 0}, {2, 0}, {3, 0}, {4, 0}});
  const auto p = minimum_degree_order(a.pattern());
  EXPECT_EQ(fill_after(a.pattern(), p), 0);
  // Leaves of degree 1 go before the center until the center's degree ties.
  EXPECT_EQ(p.old_index(0), 1);
  EXPECT_EQ(p.old_index(1), 2);
  EXPECT_EQ(p.old_index(2), 3);

  // Every order that puts the center before two or more leaves creates fill.
  std::vector<Int> perm{0, 1, 2, 3, 4};
  do {
    const auto q = Permutation::from_new_to_old(perm);
    const Int center_pos = q.new_index(0);
    EXPECT_EQ(fill_after(a.pattern(), q) == 0, center_pos >= 3);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(MinimumDegree, TridiagonalHasNoFill) {
  const auto a = testing::from_pairs(6, {{1, 0}, {2, 1}, {3, 2}, {4, 3}, {5, 4}});
  EXPECT_EQ(fill_after(a.pattern(), minimum_degree_order(a.pattern())), 0);
}

TEST(MinimumDegree, ReducesFillOnGrid) {
  const auto a = grid_laplacian_2d(12, 12);
  EXPECT_LT(fill_after(a.pattern(), minimum_degree_order(a.pattern())),
            fill_after(a.pattern(), Permutation::identity(a.size())));
}

TEST(SparseMatrix, RejectsBadPattern) {
  EXPECT_THROW(SymmetricSparsePattern(2, {0, 1, 2}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(SymmetricSparsePattern(2, {0, 2, 3}, {0, 0, 1}), std::invalid_argument);
}

TEST(SparseMatrix, MultiplyUsesBothTriangles) {
  const auto a = assemble_symmetric(2, std::vector<Triplet>{{0, 0, 4}, {1, 0, 2}, {1, 1, 5}});
  const std::vector<double> x{1, 1};
  EXPECT_EQ(a.multiply(x), (std::vector<double>{6, 7}));
}

}  // namespace
}  // namespace spchol
