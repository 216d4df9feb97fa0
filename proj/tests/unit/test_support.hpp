#ifndef SPCHOL_TEST_SUPPORT_HPP_
#define SPCHOL_TEST_SUPPORT_HPP_

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "spchol/analysis.hpp"
#include "spchol/etree.hpp"
#include "spchol/sparse_matrix.hpp"

namespace spchol::testing {

// Lower-triangle off-diagonal entries of the 9x9 worked example, 0-based.
inline std::vector<std::pair<Int, Int>> fig1_entries() {
  return {{1, 0}, {4, 0}, {5, 0}, {8, 0}, {4, 1}, {8, 1}, {3, 2}, {4, 2}, {6, 2},
          {7, 2}, {4, 3}, {7, 3}, {5, 4}, {7, 4}, {6, 5}, {8, 5}, {7, 6}, {8, 7}};
}

inline SymmetricSparseMatrix fig1_matrix(double off = 1.0, double diag = 10.0) {
  std::vector<Triplet> t;
  for (Int j = 0; j < 9; ++j) t.push_back({j, j, diag});
  for (auto [i, j] : fig1_entries()) t.push_back({i, j, off});
  return assemble_symmetric(9, t);
}

inline SymmetricSparseMatrix from_pairs(Int n, const std::vector<std::pair<Int, Int>>& pairs,
                                        double off = -1.0) {
  std::vector<Triplet> t;
  std::vector<double> degree(n, 0.0);
  for (auto [i, j] : pairs) {
    t.push_back({i, j, off});
    degree[i] += 1;
    degree[j] += 1;
  }
  for (Int j = 0; j < n; ++j) t.push_back({j, j, degree[j] + 1.0});
  return assemble_symmetric(n, t);
}

inline AnalysisOptions plain_options() {
  AnalysisOptions o;
  o.merge = false;
  o.sibling_order = false;
  o.partition_refinement = false;
  return o;
}

// glbind lists by eliminating a dense boolean copy.
inline IndexLists brute_force_glbind(const SymmetricSparsePattern& a) {
  const Int n = a.size();
  std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
  for (Int j = 0; j < n; ++j) {
    for (Int i : a.column(j)) m[i][j] = m[j][i] = 1;
  }
  IndexLists out(n);
  for (Int k = 0; k < n; ++k) {
    std::vector<Int> rows;
    for (Int i = k; i < n; ++i) {
      if (m[i][k]) rows.push_back(i);
    }
    for (Int x : rows) {
      for (Int y : rows) m[x][y] = 1;
    }
    out[k] = rows;
  }
  return out;
}

inline std::vector<Int> random_permutation(Int n, std::mt19937_64& rng) {
  std::vector<Int> p(n);
  for (Int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace spchol::testing

#endif  // SPCHOL_TEST_SUPPORT_HPP_
