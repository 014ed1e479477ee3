#pragma once

// Test-only reference implementations. Each one follows a definition directly
// and shares no code path with the library routine it checks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "rookposet/order.hpp"
#include "rookposet/roots.hpp"

namespace rookposet::oracle {

// Every subset of Phi+ whose roots pairwise have non-positive inner product,
// i.e. no two share a row or share a column. Orthogonal: inner product zero.
inline std::vector<std::vector<Root>> subset_filter(int n, Kind kind) {
  std::vector<Root> positive;
  for (int i = 2; i <= n; ++i) {
    for (int j = 1; j < i; ++j) positive.push_back(Root{i, j});
  }
  // <eps_c - eps_r, eps_c' - eps_r'>
  auto inner = [](Root x, Root y) {
    return (x.col == y.col) + (x.row == y.row) - (x.col == y.row) - (x.row == y.col);
  };
  std::vector<std::vector<Root>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << positive.size()); ++mask) {
    std::vector<Root> subset;
    for (std::size_t k = 0; k < positive.size(); ++k) {
      if ((mask >> k) & 1u) subset.push_back(positive[k]);
    }
    bool ok = true;
    for (std::size_t a = 0; a < subset.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < subset.size() && ok; ++b) {
        const int ip = inner(subset[a], subset[b]);
        ok = kind == Kind::general ? ip <= 0 : ip == 0;
      }
    }
    if (ok) out.push_back(subset);
  }
  return out;
}

// (R_D)_{i,j} straight from the counting definition.
inline int r_entry(const RookPlacement& d, int i, int j) {
  if (i <= j) return 0;
  int count = 0;
  for (const Root& r : d.roots()) {
    if (r.col <= j && r.row >= i) ++count;
  }
  return count;
}

inline bool leq(const RookPlacement& a, const RookPlacement& b) {
  for (int i = 1; i <= a.n(); ++i) {
    for (int j = 1; j <= a.n(); ++j) {
      if (r_entry(a, i, j) > r_entry(b, i, j)) return false;
    }
  }
  return true;
}

// Naive O(N^3) transitive reduction over an element list with oracle::leq.
struct NaiveHasse {
  std::vector<RookPlacement> elements;
  std::vector<std::vector<bool>> le;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  explicit NaiveHasse(std::vector<RookPlacement> els) : elements(std::move(els)) {
    const std::size_t size = elements.size();
    le.assign(size, std::vector<bool>(size));
    for (std::size_t x = 0; x < size; ++x) {
      for (std::size_t y = 0; y < size; ++y) le[x][y] = leq(elements[x], elements[y]);
    }
    for (std::size_t t = 0; t < size; ++t) {
      for (std::size_t d = 0; d < size; ++d) {
        if (t == d || !le[t][d]) continue;
        bool between = false;
        for (std::size_t s = 0; s < size && !between; ++s) {
          between = s != t && s != d && le[t][s] && le[s][d];
        }
        if (!between) edges.emplace_back(t, d);
      }
    }
  }

  std::vector<RookPlacement> covers_of(const RookPlacement& d) const {
    std::vector<RookPlacement> out;
    for (auto [lo, hi] : edges) {
      if (elements[hi] == d) out.push_back(elements[lo]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

inline std::vector<RookPlacement> all_placements(int n, Kind kind) {
  std::vector<RookPlacement> out;
  for (auto& roots : subset_filter(n, kind)) out.push_back(validate_placement(roots, n));
  std::sort(out.begin(), out.end());
  return out;
}

// Bruhat order on S_n as the reflexive-transitive closure of u -> u*t for
// transpositions t with l(u*t) > l(u). Keys are one-line vectors.
class BruhatClosure {
 public:
  explicit BruhatClosure(int n) {
    std::vector<int> w(n);
    for (int k = 0; k < n; ++k) w[k] = k + 1;
    do {
      perms_.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    for (std::size_t k = 0; k < perms_.size(); ++k) index_[perms_[k]] = k;
    const std::size_t size = perms_.size();
    reach_.assign(size, std::vector<bool>(size, false));
    for (std::size_t k = 0; k < size; ++k) {
      reach_[k][k] = true;
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          auto v = perms_[k];
          std::swap(v[a], v[b]);  // right multiplication by (a b)
          if (inversions(v) > inversions(perms_[k])) reach_[k][index_[v]] = true;
        }
      }
    }
    for (std::size_t m = 0; m < size; ++m) {
      for (std::size_t x = 0; x < size; ++x) {
        if (!reach_[x][m]) continue;
        for (std::size_t y = 0; y < size; ++y) {
          if (reach_[m][y]) reach_[x][y] = true;
        }
      }
    }
  }

  const std::vector<std::vector<int>>& permutations() const { return perms_; }
  bool leq(const std::vector<int>& u, const std::vector<int>& v) const {
    return reach_[index_.at(u)][index_.at(v)];
  }

  static int inversions(const std::vector<int>& w) {
    int count = 0;
    for (std::size_t a = 0; a < w.size(); ++a) {
      for (std::size_t b = a + 1; b < w.size(); ++b) count += w[a] > w[b];
    }
    return count;
  }

 private:
  std::vector<std::vector<int>> perms_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<std::vector<bool>> reach_;
};

// Lengths of all maximal chains (bottom-to-top paths of covers) in a naive
// Hasse diagram, by exhaustive depth-first enumeration.
inline std::set<int> maximal_chain_lengths(const NaiveHasse& h) {
  const std::size_t size = h.elements.size();
  std::vector<std::vector<std::size_t>> up(size);
  std::vector<bool> has_down(size, false);
  for (auto [lo, hi] : h.edges) {
    up[lo].push_back(hi);
    has_down[hi] = true;
  }
  std::set<int> lengths;
  std::vector<std::pair<std::size_t, int>> stack;
  for (std::size_t x = 0; x < size; ++x) {
    if (!has_down[x]) stack.emplace_back(x, 0);
  }
  while (!stack.empty()) {
    auto [x, len] = stack.back();
    stack.pop_back();
    if (up[x].empty()) lengths.insert(len);
    for (std::size_t y : up[x]) stack.emplace_back(y, len + 1);
  }
  return lengths;
}

}  // namespace rookposet::oracle
