#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rookposet {

// Largest supported ambient size. Row and column occupancy are kept as
// 64-bit masks indexed from 1.
inline constexpr int kMaxN = 63;

// The positive root eps_col - eps_row of A_{n-1}, written as the pair
// (row, col) with row > col >= 1. It sits at entry (row, col) of the
// strictly lower-triangular n x n chessboard.
struct Root {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Root&, const Root&) = default;
};

// Throws DomainError unless i > j >= 1.
Root make_root(int i, int j);

std::string to_string(Root r);

// A set of non-attacking roots in A_{n-1}: no two share a row, no two share a
// column. Roots are kept in ascending (row, col) order. Instances are only
// produced by validate_placement, so every RookPlacement is valid.
class RookPlacement {
 public:
  // The empty placement in A_0 (n = 1).
  RookPlacement() = default;

  int n() const { return n_; }
  std::span<const Root> roots() const { return roots_; }
  std::size_t size() const { return roots_.size(); }
  bool empty() const { return roots_.empty(); }

  bool row_occupied(int k) const { return (row_mask_ >> k) & 1u; }
  bool col_occupied(int k) const { return (col_mask_ >> k) & 1u; }
  // D meets R_k or C_k.
  bool index_used(int k) const { return ((row_mask_ | col_mask_) >> k) & 1u; }
  bool contains(Root r) const;

  std::uint64_t row_mask() const { return row_mask_; }
  std::uint64_t col_mask() const { return col_mask_; }

  // Same ambient size, roots lexicographic in canonical order.
  friend bool operator==(const RookPlacement&, const RookPlacement&) = default;
  friend std::strong_ordering operator<=>(const RookPlacement& a,
                                          const RookPlacement& b);

 private:
  friend RookPlacement validate_placement(std::vector<Root> roots, int n);

  int n_ = 1;
  std::vector<Root> roots_;
  std::uint64_t row_mask_ = 0;
  std::uint64_t col_mask_ = 0;
};

// Sorts the roots and checks them against n. Throws RangeError if n is outside
// 1..kMaxN or a root leaves the board, DomainError for a malformed root, and
// AttackError naming the clashing pair if two roots share a row or column.
// Duplicate roots count as attacking.
RookPlacement validate_placement(std::vector<Root> roots, int n);

// All 2|D| endpoint indices pairwise distinct, i.e. D lies in I(n).
bool is_orthogonal(const RookPlacement& d);

enum class Kind { general, orthogonal };

std::string_view to_string(Kind kind);
// Accepts "general" / "orthogonal" (also "R" / "I"). Throws ParseError.
Kind parse_kind(std::string_view text);

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

// Every placement of the requested kind exactly once, sorted ascending by the
// canonical root sequence (the empty placement first). Generated by
// backtracking over rows with a column-availability mask. Throws
// ResourceError once the count would exceed `cap`.
std::vector<RookPlacement> enumerate_placements(
    int n, Kind kind, std::size_t cap = kDefaultEnumerationCap);

// Text exchange format: "i,j" pairs separated by ';'. Whitespace is ignored,
// the empty string is the empty placement.
std::string format_placement(const RookPlacement& d);
std::vector<Root> parse_roots(std::string_view text);
RookPlacement parse_placement(std::string_view text, int n);

struct BoardStyle {
  bool unicode = false;  // U+2297 instead of 'X'
};

// n lines of n cells, one character cell per column, '.' for empty squares.
std::string render_board(const RookPlacement& d, BoardStyle style = {});
// Inverse of render_board; n is the number of lines.
RookPlacement parse_board(std::string_view board);

}  // namespace rookposet
