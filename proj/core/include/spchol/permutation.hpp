#ifndef SPCHOL_PERMUTATION_HPP_
#define SPCHOL_PERMUTATION_HPP_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "spchol/sparse_matrix.hpp"

namespace spchol {

// A bijection on {0..n-1} stored in both directions. new_index(i) is the
// position that original index i moves to.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(Int n);
  // Throws std::invalid_argument unless `old_to_new` is a bijection.
  static Permutation from_old_to_new(std::vector<Int> old_to_new);
  static Permutation from_new_to_old(std::vector<Int> new_to_old);

  Int size() const noexcept { return static_cast<Int>(perm_.size()); }
  Int new_index(Int old) const { return perm_[old]; }
  Int old_index(Int fresh) const { return inverse_[fresh]; }
  const std::vector<Int>& old_to_new() const noexcept { return perm_; }
  const std::vector<Int>& new_to_old() const noexcept { return inverse_; }

  bool is_identity() const;
  Permutation inverse() const;
  // Applies *this first, then `next`.
  Permutation then(const Permutation& next) const;

  // x_new[new_index(i)] = x_old[i].
  std::vector<double> apply(std::span<const double> x_old) const;
  // x_old[i] = x_new[new_index(i)].
  std::vector<double> unapply(std::span<const double> x_new) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Int> perm_;
  std::vector<Int> inverse_;
};

// Returns P A P^T in lower-triangle form. Throws std::invalid_argument on a
// dimension mismatch.
SymmetricSparseMatrix apply_symmetric_permutation(const SymmetricSparseMatrix& a,
                                                  const Permutation& p);
SymmetricSparsePattern apply_symmetric_permutation(
    const SymmetricSparsePattern& a, const Permutation& p);

// Permutation files hold one 1-based integer per line; line i is the new
// position of original index i.
Permutation read_permutation(std::istream& in);
Permutation read_permutation_file(const std::string& path);
void write_permutation(std::ostream& out, const Permutation& p);

}  // namespace spchol

#endif  // SPCHOL_PERMUTATION_HPP_
