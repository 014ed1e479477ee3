#include "rookposet/cover_moves.hpp"

#include <algorithm>

#include "rookposet/errors.hpp"
#include "rookposet/order.hpp"

namespace rookposet {

namespace {

void require_orthogonal(const RookPlacement& d) {
  if (!is_orthogonal(d)) {
    throw DomainError("placement " + format_placement(d) + " is not orthogonal");
  }
}

bool rows_meet(const RookPlacement& d, int lo, int hi) {
  for (int k = lo; k <= hi; ++k) {
    if (!d.row_occupied(k)) return false;
  }
  return true;
}

bool cols_meet(const RookPlacement& d, int lo, int hi) {
  for (int k = lo; k <= hi; ++k) {
    if (!d.col_occupied(k)) return false;
  }
  return true;
}

bool indices_used(const RookPlacement& d, int lo, int hi) {
  for (int k = lo; k <= hi; ++k) {
    if (!d.index_used(k)) return false;
  }
  return true;
}

// No (p,q) in D with (p,q) < from and (p,q) not < to.
bool below_preserved(const RookPlacement& d, Root from, Root to) {
  return std::all_of(d.roots().begin(), d.roots().end(), [&](const Root& p) {
    return !root_less(p, from) || root_less(p, to);
  });
}

// (p,q) < (i,j) and (p,q) not < (a,j) imply (p,q) < (i,b).
bool split_implication(const RookPlacement& d, Root ij, Root aj, Root ib) {
  return std::all_of(d.roots().begin(), d.roots().end(), [&](const Root& p) {
    return !root_less(p, ij) || root_less(p, aj) || root_less(p, ib);
  });
}

CoverMove make_move(const RookPlacement& d, MoveKind kind, std::vector<Root> source,
                    std::vector<Root> target) {
  std::vector<Root> roots;
  for (const Root& r : d.roots()) {
    if (std::find(source.begin(), source.end(), r) == source.end()) roots.push_back(r);
  }
  roots.insert(roots.end(), target.begin(), target.end());
  RookPlacement result = validate_placement(std::move(roots), d.n());
  return CoverMove{kind, std::move(source), std::move(target), std::move(result)};
}

std::vector<CoverMove> removal_moves(const RookPlacement& d, const std::vector<Root>& roots) {
  std::vector<CoverMove> out;
  for (const Root& r : roots) out.push_back(make_move(d, MoveKind::remove, {r}, {}));
  return out;
}

std::vector<RookPlacement> distinct_results(const std::vector<CoverMove>& moves) {
  std::vector<RookPlacement> out;
  out.reserve(moves.size());
  for (const CoverMove& m : moves) out.push_back(m.result);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void append(std::vector<CoverMove>& into, std::vector<CoverMove> from) {
  into.insert(into.end(), std::make_move_iterator(from.begin()),
              std::make_move_iterator(from.end()));
}

}  // namespace

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::remove: return "remove";
    case MoveKind::slide_right: return "slide_right";
    case MoveKind::slide_up: return "slide_up";
    case MoveKind::cross_general: return "cross_general";
    case MoveKind::cross_orthogonal: return "cross_orthogonal";
    case MoveKind::split_general: return "split_general";
    case MoveKind::split_orthogonal: return "split_orthogonal";
  }
  return "unknown";
}

std::string describe(const CoverMove& move) {
  auto list = [](const std::vector<Root>& roots) {
    std::string s;
    for (const Root& r : roots) s += to_string(r);
    return s.empty() ? std::string("{}") : s;
  };
  return std::string(to_string(move.kind)) + " " + list(move.source) + " -> " +
         list(move.target);
}

// --- R(n) -------------------------------------------------------------------

std::vector<Root> removal_candidates_general(const RookPlacement& d) {
  std::vector<Root> out;
  for (const Root& r : minimal_roots(d)) {
    if (rows_meet(d, r.col + 1, r.row - 1) && cols_meet(d, r.col + 1, r.row - 1)) {
      out.push_back(r);
    }
  }
  return out;
}

std::vector<CoverMove> removal_moves_general(const RookPlacement& d) {
  return removal_moves(d, removal_candidates_general(d));
}

std::vector<CoverMove> slide_right_general(const RookPlacement& d) {
  std::vector<CoverMove> out;
  for (const Root& r : d.roots()) {
    int m = r.col + 1;
    while (m < r.row && d.col_occupied(m)) ++m;
    if (m >= r.row) continue;
    if (!rows_meet(d, r.col + 1, m)) continue;
    const Root to{r.row, m};
    if (!below_preserved(d, r, to)) continue;
    out.push_back(make_move(d, MoveKind::slide_right, {r}, {to}));
  }
  return out;
}

std::vector<CoverMove> slide_up_general(const RookPlacement& d) {
  std::vector<CoverMove> out;
  for (const Root& r : d.roots()) {
    int m = r.row - 1;
    while (m > r.col && d.row_occupied(m)) --m;
    if (m <= r.col) continue;
    if (!cols_meet(d, m, r.row - 1)) continue;
    const Root to{m, r.col};
    if (!below_preserved(d, r, to)) continue;
    out.push_back(make_move(d, MoveKind::slide_up, {r}, {to}));
  }
  return out;
}

std::vector<CoverMove> cross_moves_general(const RookPlacement& d) {
  std::vector<CoverMove> out;
  for (const Root& low : d.roots()) {
    for (const Root& high : d.roots()) {
      if (!root_less(low, high)) continue;
      const bool adjacent = std::none_of(d.roots().begin(), d.roots().end(), [&](const Root& p) {
        return root_less(low, p) && root_less(p, high);
      });
      if (!adjacent) continue;
      out.push_back(make_move(d, MoveKind::cross_general, {low, high},
                              {Root{low.row, high.col}, Root{high.row, low.col}}));
    }
  }
  return out;
}

std::vector<CoverMove> split_moves_general(const RookPlacement& d) {
  std::vector<CoverMove> out;
  for (const Root& r : d.roots()) {
    const int i = r.row;
    const int j = r.col;
    for (int a = j + 1; a < i; ++a) {
      if (d.row_occupied(a)) continue;
      for (int b = a; b < i; ++b) {
        if (d.col_occupied(b)) continue;
        if (!rows_meet(d, a + 1, b - 1) || !cols_meet(d, a + 1, b - 1)) continue;
        if (a != b && (!d.row_occupied(b) || !d.col_occupied(a))) continue;
        const Root ib{i, b};
        const Root aj{a, j};
        if (!split_implication(d, r, aj, ib)) continue;
        out.push_back(make_move(d, MoveKind::split_general, {r}, {ib, aj}));
      }
    }
  }
  return out;
}

std::vector<CoverMove> predecessor_moves_general(const RookPlacement& d) {
  std::vector<CoverMove> out = removal_moves_general(d);
  append(out, slide_right_general(d));
  append(out, slide_up_general(d));
  append(out, cross_moves_general(d));
  append(out, split_moves_general(d));
  return out;
}

std::vector<RookPlacement> predecessors_general(const RookPlacement& d) {
  return distinct_results(predecessor_moves_general(d));
}

// --- I(n) -------------------------------------------------------------------

std::vector<Root> removal_candidates_orthogonal(const RookPlacement& d) {
  require_orthogonal(d);
  std::vector<Root> out;
  for (const Root& r : minimal_roots(d)) {
    if (indices_used(d, r.col + 1, r.row - 1)) out.push_back(r);
  }
  return out;
}

std::vector<CoverMove> removal_moves_orthogonal(const RookPlacement& d) {
  return removal_moves(d, removal_candidates_orthogonal(d));
}

std::vector<CoverMove> slide_right_orthogonal(const RookPlacement& d) {
  require_orthogonal(d);
  std::vector<CoverMove> out;
  for (const Root& r : d.roots()) {
    int m = r.col + 1;
    while (m < r.row && d.index_used(m)) ++m;
    if (m >= r.row) continue;
    const Root to{r.row, m};
    if (!below_preserved(d, r, to)) continue;
    out.push_back(make_move(d, MoveKind::slide_right, {r}, {to}));
  }
  return out;
}

std::vector<CoverMove> slide_up_orthogonal(const RookPlacement& d) {
  require_orthogonal(d);
  std::vector<CoverMove> out;
  for (const Root& r : d.roots()) {
    int m = r.row - 1;
    while (m > r.col && d.index_used(m)) --m;
    if (m <= r.col) continue;
    const Root to{m, r.col};
    if (!below_preserved(d, r, to)) continue;
    out.push_back(make_move(d, MoveKind::slide_up, {r}, {to}));
  }
  return out;
}

std::vector<CoverMove> cross_moves_orthogonal(const RookPlacement& d) {
  require_orthogonal(d);
  std::vector<CoverMove> out;
  for (const Root& r : d.roots()) {
    const int i = r.row;
    const int j = r.col;
    for (const Root& s : d.roots()) {
      const int a = s.row;
      const int b = s.col;
      if (!(j < b && b < i && i < a)) continue;
      if (!indices_used(d, b + 1, i - 1)) continue;
      const bool blocked = std::any_of(d.roots().begin(), d.roots().end(), [&](const Root& p) {
        return (root_less(p, r) && !root_less(p, Root{b, j})) ||
               (root_less(p, s) && !root_less(p, Root{a, i}));
      });
      if (blocked) continue;
      out.push_back(make_move(d, MoveKind::cross_orthogonal, {r, s}, {Root{b, j}, Root{a, i}}));
    }
  }
  return out;
}

std::vector<CoverMove> split_moves_orthogonal(const RookPlacement& d) {
  require_orthogonal(d);
  std::vector<CoverMove> out;
  for (const Root& r : d.roots()) {
    const int i = r.row;
    const int j = r.col;
    for (int a = j + 1; a < i; ++a) {
      if (d.index_used(a)) continue;
      for (int b = a + 1; b < i; ++b) {
        if (d.index_used(b)) continue;
        if (!indices_used(d, a + 1, b - 1)) continue;
        const Root ib{i, b};
        const Root aj{a, j};
        if (!split_implication(d, r, aj, ib)) continue;
        out.push_back(make_move(d, MoveKind::split_orthogonal, {r}, {ib, aj}));
      }
    }
  }
  return out;
}

std::vector<CoverMove> predecessor_moves_orthogonal(const RookPlacement& d) {
  std::vector<CoverMove> out = removal_moves_orthogonal(d);
  append(out, slide_right_orthogonal(d));
  append(out, slide_up_orthogonal(d));
  append(out, cross_moves_general(d));
  append(out, cross_moves_orthogonal(d));
  append(out, split_moves_orthogonal(d));
  return out;
}

std::vector<RookPlacement> predecessors_orthogonal(const RookPlacement& d) {
  return distinct_results(predecessor_moves_orthogonal(d));
}

}  // namespace rookposet
