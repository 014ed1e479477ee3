#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rookposet/roots.hpp"

namespace rookposet {

// The move families that produce immediate predecessors.
//   remove            D \ {(i,j)}
//   slide_right       (i,j) -> (i,m)
//   slide_up          (i,j) -> (m,j)
//   cross_general     {(i,j),(a,b)} -> {(i,b),(a,j)}
//   cross_orthogonal  {(i,j),(a,b)} -> {(b,j),(a,i)}
//   split_general     (i,j) -> {(i,b),(a,j)}, a <= b
//   split_orthogonal  (i,j) -> {(i,b),(a,j)}, a < b
enum class MoveKind {
  remove,
  slide_right,
  slide_up,
  cross_general,
  cross_orthogonal,
  split_general,
  split_orthogonal,
};

std::string_view to_string(MoveKind kind);

struct CoverMove {
  MoveKind kind;
  std::vector<Root> source;  // roots taken out of D
  std::vector<Root> target;  // roots put in
  RookPlacement result;      // (D \ source) u target
};

std::string describe(const CoverMove& move);

// --- Predecessors in R(n) ---------------------------------------------------

// M_R(D): minimal roots (i,j) such that every row and every column strictly
// between j and i meets D.
std::vector<Root> removal_candidates_general(const RookPlacement& d);
std::vector<CoverMove> removal_moves_general(const RookPlacement& d);

// For (i,j) in D let m be the first column in (j,i) missing from D. The root
// slides to (i,m) when rows j+1..m all meet D and every root below (i,j) in
// the root order is also below (i,m).
std::vector<CoverMove> slide_right_general(const RookPlacement& d);

// For (i,j) in D let m be the last row in (j,i) missing from D. The root
// slides to (m,j) when columns m+1..i-1 all meet D and every root below (i,j)
// is also below (m,j).
std::vector<CoverMove> slide_up_general(const RookPlacement& d);

// Pairs (i,j) < (a,b) in D with no root of D strictly between them; the two
// rooks swap columns.
std::vector<CoverMove> cross_moves_general(const RookPlacement& d);

// (i,j) splits into (i,b) and (a,j) for i > b >= a > j where row a and
// column b are free, rows and columns strictly between a and b all meet D,
// row b and column a meet D when a != b, and every root below (i,j) but not
// below (a,j) is below (i,b).
std::vector<CoverMove> split_moves_general(const RookPlacement& d);

// Every move above, in family order.
std::vector<CoverMove> predecessor_moves_general(const RookPlacement& d);

// The immediate predecessors of D in R(n), deduplicated, sorted.
std::vector<RookPlacement> predecessors_general(const RookPlacement& d);

// --- Predecessors in I(n) ---------------------------------------------------
// All of these throw DomainError if D is not orthogonal.

// M_I(D): minimal roots (i,j) such that every index strictly between j and i
// is an endpoint of some root of D.
std::vector<Root> removal_candidates_orthogonal(const RookPlacement& d);
std::vector<CoverMove> removal_moves_orthogonal(const RookPlacement& d);

// m is the first (resp. last) index in (j,i) that is no endpoint of D.
std::vector<CoverMove> slide_right_orthogonal(const RookPlacement& d);
std::vector<CoverMove> slide_up_orthogonal(const RookPlacement& d);

// Interleaved pairs j < b < i < a with every index in (b,i) used and no root
// (p,q) with j < q < b < p < i or b < q < i < p < a.
std::vector<CoverMove> cross_moves_orthogonal(const RookPlacement& d);

// i > b > a > j with a and b unused, every index in (a,b) used, and the same
// implication on roots below (i,j) as the general split.
std::vector<CoverMove> split_moves_orthogonal(const RookPlacement& d);

// Orthogonal removals and slides, general and orthogonal crosses, orthogonal
// splits.
std::vector<CoverMove> predecessor_moves_orthogonal(const RookPlacement& d);
std::vector<RookPlacement> predecessors_orthogonal(const RookPlacement& d);

}  // namespace rookposet
