#include "rookposet/poset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "rookposet/errors.hpp"
#include "rookposet/kerov.hpp"
#include "rookposet/order.hpp"

namespace rookposet {

Poset Poset::build(int n, Kind kind, std::size_t cap) {
  Poset p;
  p.n_ = n;
  p.kind_ = kind;
  p.elements_ = enumerate_placements(n, kind, cap);
  const std::size_t size = p.elements_.size();

  std::vector<RankMatrix> matrices;
  matrices.reserve(size);
  for (const auto& d : p.elements_) matrices.push_back(r_matrix(d));

  p.below_or_equal_ = BitRelation(size);
  for (std::size_t y = 0; y < size; ++y) {
    for (std::size_t x = 0; x < size; ++x) {
      if (dominated(matrices[x], matrices[y])) p.below_or_equal_.set(y, x);
    }
  }

  // covers(y) = strict(y) minus the union of strict(x) over x in strict(y).
  const std::size_t words = p.below_or_equal_.words_;
  auto strict_word = [&](std::size_t x, std::size_t w) {
    std::uint64_t word = p.below_or_equal_.row(x)[w];
    if (w == x / 64) word &= ~(std::uint64_t{1} << (x % 64));
    return word;
  };
  p.lower_covers_.assign(size, {});
  p.upper_covers_.assign(size, {});
  std::vector<std::uint64_t> shadow(words);
  for (std::size_t y = 0; y < size; ++y) {
    std::fill(shadow.begin(), shadow.end(), 0);
    for (std::size_t x = 0; x < size; ++x) {
      if (!p.less(x, y)) continue;
      for (std::size_t w = 0; w < words; ++w) shadow[w] |= strict_word(x, w);
    }
    for (std::size_t x = 0; x < size; ++x) {
      if (p.less(x, y) && !((shadow[x / 64] >> (x % 64)) & 1u)) {
        p.lower_covers_[y].push_back(x);
        p.upper_covers_[x].push_back(y);
        p.hasse_.emplace_back(x, y);
      }
    }
  }
  return p;
}

std::optional<std::size_t> Poset::find(const RookPlacement& d) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), d);
  if (it == elements_.end() || *it != d) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t Poset::index_of(const RookPlacement& d) const {
  if (auto x = find(d)) return *x;
  throw MembershipError("placement " + format_placement(d) + " (n=" + std::to_string(d.n()) +
                        ") is not an element of the " + std::string(to_string(kind_)) +
                        " poset for n=" + std::to_string(n_));
}

std::vector<RookPlacement> brute_force_covers(const Poset& p, const RookPlacement& d) {
  std::vector<RookPlacement> out;
  for (std::size_t x : p.lower_covers(p.index_of(d))) out.push_back(p.element(x));
  return out;
}

namespace {

// Follows arbitrary upper covers until a maximal element is reached.
void extend_to_top(const Poset& p, std::vector<std::size_t>& chain) {
  while (!p.upper_covers(chain.back()).empty()) chain.push_back(p.upper_covers(chain.back()).front());
}

std::vector<std::size_t> unwind(const std::vector<std::size_t>& parent, std::size_t bottom,
                                std::size_t x) {
  std::vector<std::size_t> chain{x};
  while (chain.back() != bottom) chain.push_back(parent[chain.back()]);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace

GradedReport check_graded(const Poset& p) {
  GradedReport report;
  const std::size_t size = p.size();
  for (std::size_t x = 0; x < size; ++x) {
    if (p.lower_covers(x).empty()) report.minimal_elements.push_back(x);
    if (p.upper_covers(x).empty()) report.maximal_elements.push_back(x);
  }
  if (report.minimal_elements.size() != 1) {
    report.failure = std::to_string(report.minimal_elements.size()) + " minimal elements";
    return report;
  }
  if (report.maximal_elements.size() != 1) {
    report.failure = std::to_string(report.maximal_elements.size()) + " maximal elements";
    report.min_element = report.minimal_elements.front();
    return report;
  }
  const std::size_t bottom = report.minimal_elements.front();
  const std::size_t top = report.maximal_elements.front();
  report.min_element = bottom;
  report.max_element = top;

  // Along a strict relation x < y the down-set grows, so sorting by down-set
  // size gives a topological order of the Hasse DAG.
  std::vector<std::size_t> down_size(size, 0);
  for (std::size_t y = 0; y < size; ++y) {
    for (std::size_t x = 0; x < size; ++x) down_size[y] += p.leq(x, y) ? 1 : 0;
  }
  std::vector<std::size_t> order(size);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return down_size[a] < down_size[b]; });

  constexpr int kUnset = -1;
  std::vector<int> longest(size, kUnset), shortest(size, kUnset);
  std::vector<std::size_t> long_parent(size, bottom), short_parent(size, bottom);
  longest[bottom] = shortest[bottom] = 0;
  for (std::size_t y : order) {
    for (std::size_t x : p.lower_covers(y)) {
      if (longest[x] == kUnset) continue;
      if (longest[y] == kUnset || longest[x] + 1 > longest[y]) {
        longest[y] = longest[x] + 1;
        long_parent[y] = x;
      }
      if (shortest[y] == kUnset || shortest[x] + 1 < shortest[y]) {
        shortest[y] = shortest[x] + 1;
        short_parent[y] = x;
      }
    }
  }
  report.max_chain_length = longest[top];

  for (std::size_t x : order) {
    if (longest[x] == shortest[x]) continue;
    report.witness_short = unwind(short_parent, bottom, x);
    report.witness_long = unwind(long_parent, bottom, x);
    extend_to_top(p, report.witness_short);
    extend_to_top(p, report.witness_long);
    report.failure = "maximal chains of lengths " +
                     std::to_string(report.witness_short.size() - 1) + " and " +
                     std::to_string(report.witness_long.size() - 1);
    return report;
  }

  report.is_graded = true;
  report.rank_of = longest;

  if (p.kind() == Kind::orthogonal || p.n() >= 2) {
    report.formula_checked = true;
    for (std::size_t x = 0; x < size; ++x) {
      const RookPlacement& d = p.element(x);
      const int formula = p.kind() == Kind::general ? rank_general(d) : rank_orthogonal(d);
      if (formula != report.rank_of[x]) {
        report.formula_mismatches.push_back(RankMismatch{x, report.rank_of[x], formula});
      }
    }
  }
  return report;
}

std::string export_dot(const Poset& p, const DotOptions& options) {
  std::vector<int> ranks;
  if (options.annotate_rank || options.layer_by_rank) {
    GradedReport report = check_graded(p);
    if (report.is_graded) ranks = std::move(report.rank_of);
  }

  std::ostringstream out;
  out << "digraph \"" << options.graph_name << "\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t x = 0; x < p.size(); ++x) {
    std::string label = format_placement(p.element(x));
    if (label.empty()) label = "{}";
    if (options.annotate_rank && !ranks.empty()) {
      label += "\\nrank " + std::to_string(ranks[x]);
    }
    out << "  \"n" << x << "\" [label=\"" << label << "\"];\n";
  }
  if (options.layer_by_rank && !ranks.empty()) {
    const int top = *std::max_element(ranks.begin(), ranks.end());
    for (int r = 0; r <= top; ++r) {
      out << "  { rank=same;";
      for (std::size_t x = 0; x < p.size(); ++x) {
        if (ranks[x] == r) out << " \"n" << x << "\";";
      }
      out << " }\n";
    }
  }
  for (const auto& [lower, upper] : p.hasse()) {
    out << "  \"n" << lower << "\" -> \"n" << upper << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace rookposet
