#include "spchol/permutation.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace spchol {

namespace {

std::vector<Int> invert(const std::vector<Int>& map) {
  const Int n = static_cast<Int>(map.size());
  std::vector<Int> inverse(n, kNone);
  for (Int i = 0; i < n; ++i) {
    const Int target = map[i];
    if (target < 0 || target >= n || inverse[target] != kNone) {
      throw std::invalid_argument("permutation: not a bijection at index " +
                                  std::to_string(i + 1));
    }
    inverse[target] = i;
  }
  return inverse;
}

}  // namespace

Permutation Permutation::identity(Int n) {
  Permutation p;
  p.perm_.resize(n);
  std::iota(p.perm_.begin(), p.perm_.end(), Int{0});
  p.inverse_ = p.perm_;
  return p;
}

Permutation Permutation::from_old_to_new(std::vector<Int> old_to_new) {
  Permutation p;
  p.inverse_ = invert(old_to_new);
  p.perm_ = std::move(old_to_new);
  return p;
}

Permutation Permutation::from_new_to_old(std::vector<Int> new_to_old) {
  Permutation p;
  p.perm_ = invert(new_to_old);
  p.inverse_ = std::move(new_to_old);
  return p;
}

bool Permutation::is_identity() const {
  for (Int i = 0; i < size(); ++i) {
    if (perm_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.perm_ = inverse_;
  p.inverse_ = perm_;
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) {
    throw std::invalid_argument("permutation: composing different sizes");
  }
  std::vector<Int> composed(size());
  for (Int i = 0; i < size(); ++i) composed[i] = next.perm_[perm_[i]];
  return from_old_to_new(std::move(composed));
}

std::vector<double> Permutation::apply(std::span<const double> x_old) const {
  if (static_cast<Int>(x_old.size()) != size()) {
    throw std::invalid_argument("permutation: vector length mismatch");
  }
  std::vector<double> x_new(x_old.size());
  for (Int i = 0; i < size(); ++i) x_new[perm_[i]] = x_old[i];
  return x_new;
}

std::vector<double> Permutation::unapply(std::span<const double> x_new) const {
  if (static_cast<Int>(x_new.size()) != size()) {
    throw std::invalid_argument("permutation: vector length mismatch");
  }
  std::vector<double> x_old(x_new.size());
  for (Int i = 0; i < size(); ++i) x_old[i] = x_new[perm_[i]];
  return x_old;
}

namespace {

// Shared by the pattern and matrix overloads; `values` may be empty.
template <bool kWithValues>
void permute_lower(const SymmetricSparsePattern& a, std::span<const double> values,
                   const Permutation& p, std::vector<Int>& colptr,
                   std::vector<Int>& rowind, std::vector<double>& out_values) {
  const Int n = a.size();
  if (p.size() != n) {
    throw std::invalid_argument("apply_symmetric_permutation: dimension mismatch");
  }
  colptr.assign(n + 1, 0);
  const auto& cp = a.colptr();
  const auto& ri = a.rowind();
  for (Int j = 0; j < n; ++j) {
    for (Int q = cp[j]; q < cp[j + 1]; ++q) {
      const Int pi = p.new_index(ri[q]);
      const Int pj = p.new_index(j);
      ++colptr[std::min(pi, pj) + 1];
    }
  }
  for (Int j = 0; j < n; ++j) colptr[j + 1] += colptr[j];
  rowind.assign(ri.size(), 0);
  if constexpr (kWithValues) out_values.assign(ri.size(), 0.0);
  std::vector<Int> next(colptr.begin(), colptr.end() - 1);
  for (Int j = 0; j < n; ++j) {
    for (Int q = cp[j]; q < cp[j + 1]; ++q) {
      const Int pi = p.new_index(ri[q]);
      const Int pj = p.new_index(j);
      const Int col = std::min(pi, pj);
      const Int slot = next[col]++;
      rowind[slot] = std::max(pi, pj);
      if constexpr (kWithValues) out_values[slot] = values[q];
    }
  }
  // Re-sort each column by row index.
  std::vector<std::pair<Int, double>> scratch;
  for (Int j = 0; j < n; ++j) {
    scratch.clear();
    for (Int q = colptr[j]; q < colptr[j + 1]; ++q) {
      scratch.emplace_back(rowind[q], kWithValues ? out_values[q] : 0.0);
    }
    std::sort(scratch.begin(), scratch.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (Int q = colptr[j]; q < colptr[j + 1]; ++q) {
      rowind[q] = scratch[q - colptr[j]].first;
      if constexpr (kWithValues) out_values[q] = scratch[q - colptr[j]].second;
    }
  }
}

}  // namespace

SymmetricSparsePattern apply_symmetric_permutation(const SymmetricSparsePattern& a,
                                                   const Permutation& p) {
  std::vector<Int> colptr;
  std::vector<Int> rowind;
  std::vector<double> unused;
  permute_lower<false>(a, {}, p, colptr, rowind, unused);
  return SymmetricSparsePattern(a.size(), std::move(colptr), std::move(rowind));
}

SymmetricSparseMatrix apply_symmetric_permutation(const SymmetricSparseMatrix& a,
                                                  const Permutation& p) {
  std::vector<Int> colptr;
  std::vector<Int> rowind;
  std::vector<double> values;
  permute_lower<true>(a.pattern(), a.values(), p, colptr, rowind, values);
  std::vector<Int> inserted;
  for (Int j : a.inserted_diagonals()) inserted.push_back(p.new_index(j));
  std::sort(inserted.begin(), inserted.end());
  return SymmetricSparseMatrix(
      SymmetricSparsePattern(a.size(), std::move(colptr), std::move(rowind)),
      std::move(values), std::move(inserted));
}

Permutation read_permutation(std::istream& in) {
  std::vector<Int> old_to_new;
  std::string line;
  Int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream fields(line);
    Int value = 0;
    if (!(fields >> value)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw std::invalid_argument("permutation file: line " +
                                  std::to_string(line_number) +
                                  " is not an integer");
    }
    old_to_new.push_back(value - 1);
  }
  return Permutation::from_old_to_new(std::move(old_to_new));
}

Permutation read_permutation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open permutation file " + path);
  return read_permutation(in);
}

void write_permutation(std::ostream& out, const Permutation& p) {
  for (Int i = 0; i < p.size(); ++i) out << p.new_index(i) + 1 << '\n';
}

}  // namespace spchol
