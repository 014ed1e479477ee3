#include "rookposet/order.hpp"

#include <algorithm>

#include "rookposet/errors.hpp"

namespace rookposet {

std::vector<std::vector<int>> RankMatrix::rows() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) out[i - 1][j - 1] = (*this)(i, j);
  }
  return out;
}

RankMatrix r_matrix(const RookPlacement& d) {
  const int n = d.n();
  RankMatrix m(n);
  // Mark each root, then accumulate the quadrant sum "row >= i, col <= j".
  for (const Root& r : d.roots()) m(r.row, r.col) = 1;
  for (int i = n; i >= 1; --i) {
    for (int j = 1; j <= n; ++j) {
      int v = m(i, j);
      if (i < n) v += m(i + 1, j);
      if (j > 1) v += m(i, j - 1);
      if (i < n && j > 1) v -= m(i + 1, j - 1);
      m(i, j) = v;
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) m(i, j) = 0;
  }
  return m;
}

bool dominated(const RankMatrix& a, const RankMatrix& b) {
  if (a.n() != b.n()) {
    throw MismatchError("rank matrices of sizes " + std::to_string(a.n()) + " and " +
                        std::to_string(b.n()));
  }
  for (int i = 2; i <= a.n(); ++i) {
    for (int j = 1; j < i; ++j) {
      if (a(i, j) > b(i, j)) return false;
    }
  }
  return true;
}

bool leq_placement(const RookPlacement& a, const RookPlacement& b) {
  if (a.n() != b.n()) {
    throw MismatchError("placements live in n=" + std::to_string(a.n()) + " and n=" +
                        std::to_string(b.n()));
  }
  return dominated(r_matrix(a), r_matrix(b));
}

std::vector<Root> minimal_roots(const RookPlacement& d) {
  std::vector<Root> out;
  for (const Root& a : d.roots()) {
    const bool minimal = std::none_of(d.roots().begin(), d.roots().end(),
                                      [&](const Root& b) { return root_less(b, a); });
    if (minimal) out.push_back(a);
  }
  return out;
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  for (int k = 0; k < n; ++k) images[k] = k + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_line(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : images) {
    if (v < 1 || v > n || seen[v]) {
      throw DomainError("one-line notation is not a permutation of 1.." + std::to_string(n));
    }
    seen[v] = true;
  }
  return Permutation(std::move(images));
}

bool Permutation::is_involution() const {
  for (int k = 1; k <= n(); ++k) {
    if ((*this)((*this)(k)) != k) return false;
  }
  return true;
}

std::string to_string(const Permutation& w) {
  std::string out = "[";
  for (std::size_t k = 0; k < w.one_line().size(); ++k) {
    if (k) out += ',';
    out += std::to_string(w.one_line()[k]);
  }
  return out + "]";
}

Permutation involution_of(const RookPlacement& d) {
  if (!is_orthogonal(d)) {
    throw DomainError("w_D needs an orthogonal placement, got " + format_placement(d));
  }
  std::vector<int> images = Permutation::identity(d.n()).one_line();
  for (const Root& r : d.roots()) std::swap(images[r.row - 1], images[r.col - 1]);
  return Permutation::from_one_line(std::move(images));
}

int inversion_length(const Permutation& w) {
  int count = 0;
  for (int a = 1; a <= w.n(); ++a) {
    for (int b = a + 1; b <= w.n(); ++b) {
      if (w(a) > w(b)) ++count;
    }
  }
  return count;
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n()) {
    throw MismatchError("permutations of sizes " + std::to_string(u.n()) + " and " +
                        std::to_string(v.n()));
  }
  const int n = u.n();
  // count[j] = #{k <= i : w(k) <= j}, maintained as i advances.
  std::vector<int> cu(n + 1, 0), cv(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = u(i); j <= n; ++j) ++cu[j];
    for (int j = v(i); j <= n; ++j) ++cv[j];
    for (int j = 1; j <= n; ++j) {
      if (cu[j] < cv[j]) return false;
    }
  }
  return true;
}

}  // namespace rookposet
