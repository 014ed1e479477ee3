#pragma once

#include <string>
#include <vector>

#include "rookposet/roots.hpp"

namespace rookposet {

// Dense n x n counting matrix R_D. For i > j, entry (i, j) is the number of
// roots of D lying weakly below row i and weakly left of column j; all other
// entries are zero. Indices are 1-based.
class RankMatrix {
 public:
  explicit RankMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n, 0) {}

  int n() const { return n_; }
  int operator()(int i, int j) const { return entries_[index(i, j)]; }
  int& operator()(int i, int j) { return entries_[index(i, j)]; }

  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const RankMatrix&, const RankMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
  }

  int n_;
  std::vector<int> entries_;
};

RankMatrix r_matrix(const RookPlacement& d);

// Entrywise a <= b. Throws MismatchError on different sizes.
bool dominated(const RankMatrix& a, const RankMatrix& b);

// The partial order on placements. Throws MismatchError unless both live in
// the same A_{n-1}.
bool leq_placement(const RookPlacement& a, const RookPlacement& b);

// Root order: a <= b iff b - a is a sum of positive roots, i.e. b lies weakly
// below and weakly left of a on the board.
inline bool root_leq(Root a, Root b) { return b.row >= a.row && b.col <= a.col; }
inline bool root_less(Root a, Root b) { return a != b && root_leq(a, b); }

// Roots of D that are minimal in the root order, in canonical order.
std::vector<Root> minimal_roots(const RookPlacement& d);

// A permutation of {1..n} in one-line notation.
class Permutation {
 public:
  static Permutation identity(int n);
  // Throws DomainError unless `images` is a bijection of {1..size}.
  static Permutation from_one_line(std::vector<int> images);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[k - 1]; }
  const std::vector<int>& one_line() const { return images_; }

  bool is_involution() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}

  std::vector<int> images_;
};

std::string to_string(const Permutation& w);

// w_D, the product of the transpositions (row, col) over the roots of D.
// Throws DomainError if D is not orthogonal.
Permutation involution_of(const RookPlacement& d);

// Number of pairs a < b with w(a) > w(b).
int inversion_length(const Permutation& w);

// Bruhat order via dominance of rank functions: u <= v iff for every i and j,
// #{k <= i : u(k) <= j} >= #{k <= i : v(k) <= j}. Throws MismatchError.
bool bruhat_leq(const Permutation& u, const Permutation& v);

}  // namespace rookposet
