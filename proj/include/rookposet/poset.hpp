#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rookposet/roots.hpp"

namespace rookposet {

// Square bit matrix over element indices; row x holds the set {y : x R y}.
class BitRelation {
 public:
  BitRelation() = default;
  explicit BitRelation(std::size_t size)
      : size_(size), words_((size + 63) / 64), bits_(size * words_, 0) {}

  std::size_t size() const { return size_; }
  bool test(std::size_t x, std::size_t y) const {
    return (bits_[x * words_ + y / 64] >> (y % 64)) & 1u;
  }
  void set(std::size_t x, std::size_t y) {
    bits_[x * words_ + y / 64] |= std::uint64_t{1} << (y % 64);
  }

 private:
  friend class Poset;

  std::uint64_t* row(std::size_t x) { return bits_.data() + x * words_; }
  const std::uint64_t* row(std::size_t x) const { return bits_.data() + x * words_; }

  std::size_t size_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

using HasseEdge = std::pair<std::size_t, std::size_t>;  // (lower, upper)

// R(n) or I(n) with the order materialized over element indices. Immutable
// after construction.
class Poset {
 public:
  // Enumerates the placements and compares every pair. Throws ResourceError
  // past `cap`.
  static Poset build(int n, Kind kind, std::size_t cap = kDefaultEnumerationCap);

  int n() const { return n_; }
  Kind kind() const { return kind_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<RookPlacement>& elements() const { return elements_; }
  const RookPlacement& element(std::size_t x) const { return elements_[x]; }

  std::optional<std::size_t> find(const RookPlacement& d) const;
  // Throws MembershipError.
  std::size_t index_of(const RookPlacement& d) const;

  bool leq(std::size_t x, std::size_t y) const { return below_or_equal_.test(y, x); }
  bool less(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }

  // Transitive reduction of the strict order, sorted by (upper, lower).
  const std::vector<HasseEdge>& hasse() const { return hasse_; }
  // Indices of the immediate predecessors of y, ascending.
  const std::vector<std::size_t>& lower_covers(std::size_t y) const { return lower_covers_[y]; }
  const std::vector<std::size_t>& upper_covers(std::size_t x) const { return upper_covers_[x]; }

 private:
  Poset() = default;

  int n_ = 1;
  Kind kind_ = Kind::general;
  std::vector<RookPlacement> elements_;
  BitRelation below_or_equal_;  // row y = {x : x <= y}
  std::vector<HasseEdge> hasse_;
  std::vector<std::vector<std::size_t>> lower_covers_;
  std::vector<std::vector<std::size_t>> upper_covers_;
};

// All T < D with nothing strictly between, read off the materialized relation
// alone. Throws MembershipError if D is not an element of p.
std::vector<RookPlacement> brute_force_covers(const Poset& p, const RookPlacement& d);

struct RankMismatch {
  std::size_t element;
  int hasse_rank;
  int formula_rank;
};

struct GradedReport {
  bool is_graded = false;
  std::optional<std::size_t> min_element;
  std::optional<std::size_t> max_element;
  std::vector<std::size_t> minimal_elements;
  std::vector<std::size_t> maximal_elements;
  // Hasse distance from the minimum; filled only when graded.
  std::vector<int> rank_of;
  int max_chain_length = 0;
  // On failure: two maximal chains of different lengths (when extrema are
  // unique), as element indices from bottom to top.
  std::vector<std::size_t> witness_short;
  std::vector<std::size_t> witness_long;
  std::string failure;

  // Comparison of rank_of against the closed-form rank of the poset kind.
  bool formula_checked = false;
  std::vector<RankMismatch> formula_mismatches;
};

// Unique extrema, then longest and shortest Hasse path from the minimum to
// every element. Graded iff the extrema are unique and both path lengths agree
// everywhere. When graded, ranks are compared with rank_general or
// rank_orthogonal (general posets need n >= 2).
GradedReport check_graded(const Poset& p);

struct DotOptions {
  bool annotate_rank = true;
  bool layer_by_rank = true;
  std::string graph_name = "poset";
};

// Graphviz digraph: one node per element labelled with its placement string,
// one edge per Hasse cover pointing from lower to upper element.
std::string export_dot(const Poset& p, const DotOptions& options = {});

}  // namespace rookposet
