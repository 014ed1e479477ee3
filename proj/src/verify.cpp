#include "rookposet/verify.hpp"

#include <algorithm>
#include <set>

#include "rookposet/cover_moves.hpp"
#include "rookposet/errors.hpp"
#include "rookposet/kerov.hpp"
#include "rookposet/order.hpp"
#include "rookposet/poset.hpp"

namespace rookposet {

namespace {

constexpr std::size_t kKeptFailures = 20;

std::string label(const RookPlacement& d) {
  const std::string text = format_placement(d);
  return "{" + text + "}";
}

std::string range_tag(std::string_view what, int n) {
  return std::string(what) + "(" + std::to_string(n) + ")";
}

}  // namespace

void SuiteReport::fail(std::string message) {
  ++failed;
  if (failures.size() < kKeptFailures) failures.push_back(std::move(message));
}

void SuiteReport::absorb(const SuiteReport& other) {
  checked += other.checked;
  for (const auto& f : other.failures) {
    if (failures.size() < kKeptFailures) failures.push_back(f);
  }
  failed += other.failed;
}

std::string describe(const CoverDiscrepancy& c) {
  std::string out = "n=" + std::to_string(c.d.n()) + " D=" + label(c.d) + " T=" + label(c.t) +
                    ": generator " + (c.generated ? "yes" : "no") + ", oracle " +
                    (c.oracle ? "yes" : "no");
  for (const auto& m : c.moves) out += "; via " + m;
  return out;
}

std::vector<CoverDiscrepancy> cover_discrepancies(int n, Kind kind) {
  const Poset p = Poset::build(n, kind);
  std::vector<CoverDiscrepancy> out;
  for (const RookPlacement& d : p.elements()) {
    const auto moves = kind == Kind::general ? predecessor_moves_general(d)
                                             : predecessor_moves_orthogonal(d);
    std::set<RookPlacement> generated;
    for (const auto& m : moves) generated.insert(m.result);
    const auto oracle = brute_force_covers(p, d);
    const std::set<RookPlacement> expected(oracle.begin(), oracle.end());
    for (const auto& t : generated) {
      if (expected.count(t)) continue;
      CoverDiscrepancy c{d, t, true, false, {}};
      for (const auto& m : moves) {
        if (m.result == t) c.moves.push_back(describe(m));
      }
      out.push_back(std::move(c));
    }
    for (const auto& t : expected) {
      if (!generated.count(t)) out.push_back(CoverDiscrepancy{d, t, false, true, {}});
    }
  }
  return out;
}

SuiteReport verify_covers(Kind kind, int min_n, int max_n) {
  SuiteReport report{kind == Kind::general ? "covers-general" : "covers-orthogonal", min_n,
                     max_n};
  for (int n = min_n; n <= max_n; ++n) {
    const Poset p = Poset::build(n, kind);
    report.checked += p.size();
    for (const auto& c : cover_discrepancies(n, kind)) report.fail(describe(c));
    // Soundness and closure per move.
    for (const RookPlacement& d : p.elements()) {
      const auto moves = kind == Kind::general ? predecessor_moves_general(d)
                                               : predecessor_moves_orthogonal(d);
      for (const auto& m : moves) {
        if (!leq_placement(m.result, d) || m.result == d) {
          report.fail("move " + describe(m) + " on " + label(d) + " does not go down");
        }
        if (kind == Kind::orthogonal && !is_orthogonal(m.result)) {
          report.fail("move " + describe(m) + " on " + label(d) + " leaves I(n)");
        }
      }
    }
  }
  return report;
}

SuiteReport verify_kerov(int min_n, int max_n) {
  SuiteReport report{"kerov", min_n, max_n};
  for (int n = std::max(min_n, 2); n <= max_n; ++n) {
    const auto elements = enumerate_placements(n, Kind::general);
    std::set<RookPlacement> images;
    std::vector<RookPlacement> image_of;
    std::vector<std::vector<RookPlacement>> general_preds, orthogonal_preds;
    for (const auto& d : elements) {
      const RookPlacement k = kerov_map(d);
      image_of.push_back(k);
      images.insert(k);
      ++report.checked;
      if (!is_orthogonal(k) || !has_kerov_shape(k) || k.n() != 2 * n - 2) {
        report.fail("K" + label(d) + "=" + label(k) + " lacks the even-row/odd-column shape");
      }
      if (rank_general(d) != rank_orthogonal(k)) {
        report.fail("rank_general" + label(d) + " differs from rank_orthogonal of its image");
      }
      general_preds.push_back(predecessors_general(d));
      orthogonal_preds.push_back(predecessors_orthogonal(k));
    }
    if (images.size() != elements.size()) {
      report.fail(range_tag("K not injective on R", n));
    }
    for (std::size_t a = 0; a < elements.size(); ++a) {
      for (std::size_t b = 0; b < elements.size(); ++b) {
        report.checked += 2;
        const bool order_src = leq_placement(elements[a], elements[b]);
        const bool order_img = leq_placement(image_of[a], image_of[b]);
        if (order_src != order_img) {
          report.fail("order: " + label(elements[a]) + " <= " + label(elements[b]) + " is " +
                      (order_src ? "true" : "false") + " but images disagree");
        }
        const bool cover_src = std::binary_search(general_preds[b].begin(),
                                                  general_preds[b].end(), elements[a]);
        const bool cover_img = std::binary_search(orthogonal_preds[b].begin(),
                                                  orthogonal_preds[b].end(), image_of[a]);
        if (cover_src != cover_img) {
          report.fail("cover: T=" + label(elements[a]) + " D=" + label(elements[b]) +
                      " is " + (cover_src ? "" : "not ") + "a cover but images disagree");
        }
      }
    }
  }
  return report;
}

SuiteReport verify_graded(Kind kind, int min_n, int max_n) {
  SuiteReport report{kind == Kind::general ? "graded-general" : "graded-orthogonal", min_n,
                     max_n};
  for (int n = min_n; n <= max_n; ++n) {
    const Poset p = Poset::build(n, kind);
    const GradedReport graded = check_graded(p);
    report.checked += p.size();
    if (!graded.is_graded) {
      report.fail(range_tag(kind == Kind::general ? "R" : "I", n) +
                  " not graded: " + graded.failure);
      continue;
    }
    if (!p.element(*graded.min_element).empty()) {
      report.fail(range_tag(kind == Kind::general ? "R" : "I", n) +
                  " minimum is not the empty placement");
    }
    // R(1) has no rank formula (the Kerov map needs n >= 2); its single
    // element has rank 0.
    if (!graded.formula_checked && graded.rank_of.front() != 0) {
      report.fail(range_tag("R", n) + " single element has nonzero rank");
    }
    for (const auto& m : graded.formula_mismatches) {
      report.fail(label(p.element(m.element)) + ": Hasse rank " + std::to_string(m.hasse_rank) +
                  " vs formula " + std::to_string(m.formula_rank));
    }
  }
  return report;
}

SuiteReport verify_bruhat(int min_n, int max_n) {
  SuiteReport report{"bruhat", min_n, max_n};
  for (int n = min_n; n <= max_n; ++n) {
    const auto elements = enumerate_placements(n, Kind::orthogonal);
    std::vector<Permutation> involutions;
    for (const auto& d : elements) {
      involutions.push_back(involution_of(d));
      if (!involutions.back().is_involution()) report.fail("w" + label(d) + " is not an involution");
      if (inversion_length(involutions.back()) % 2 != static_cast<int>(d.size() % 2)) {
        report.fail("l(w" + label(d) + ") and |D| differ in parity");
      }
    }
    for (std::size_t a = 0; a < elements.size(); ++a) {
      for (std::size_t b = 0; b < elements.size(); ++b) {
        ++report.checked;
        if (leq_placement(elements[a], elements[b]) != bruhat_leq(involutions[a], involutions[b])) {
          report.fail(label(elements[a]) + " vs " + label(elements[b]) +
                      ": placement order and Bruhat order disagree");
        }
      }
    }
  }
  return report;
}

std::size_t bell_number(int n) {
  // Bell triangle.
  std::vector<std::size_t> row{1};
  for (int k = 1; k <= n; ++k) {
    std::vector<std::size_t> next{row.back()};
    for (std::size_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

std::size_t involution_count(int n) {
  std::size_t prev = 1, cur = 1;  // a(0), a(1)
  if (n == 0) return prev;
  for (int k = 2; k <= n; ++k) {
    const std::size_t next = cur + static_cast<std::size_t>(k - 1) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

// Counts subsets of Phi+ with pairwise distinct rows and columns (and, for
// orthogonal ones, pairwise distinct endpoints) by trying all 2^|Phi+| masks.
std::size_t subset_filter_count(int n, Kind kind) {
  std::vector<Root> positive;
  for (int i = 2; i <= n; ++i) {
    for (int j = 1; j < i; ++j) positive.push_back(Root{i, j});
  }
  std::size_t count = 0;
  const std::uint64_t limit = std::uint64_t{1} << positive.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::uint64_t rows = 0, cols = 0;
    bool ok = true;
    for (std::size_t k = 0; k < positive.size() && ok; ++k) {
      if (!((mask >> k) & 1u)) continue;
      const std::uint64_t r = std::uint64_t{1} << positive[k].row;
      const std::uint64_t c = std::uint64_t{1} << positive[k].col;
      if ((rows & r) || (cols & c)) ok = false;
      if (kind == Kind::orthogonal && ((rows | cols) & (r | c))) ok = false;
      rows |= r;
      cols |= c;
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace

SuiteReport verify_counts(int min_n, int max_n, int subset_max_n) {
  SuiteReport report{"counts", min_n, max_n};
  for (int n = min_n; n <= max_n; ++n) {
    for (Kind kind : {Kind::general, Kind::orthogonal}) {
      const std::size_t got = enumerate_placements(n, kind).size();
      const std::size_t want = kind == Kind::general ? bell_number(n) : involution_count(n);
      ++report.checked;
      const std::string tag = range_tag(kind == Kind::general ? "R" : "I", n);
      if (got != want) {
        report.fail("|" + tag + "| = " + std::to_string(got) + ", expected " +
                    std::to_string(want));
      }
      if (n <= subset_max_n) {
        ++report.checked;
        const std::size_t filtered = subset_filter_count(n, kind);
        if (filtered != got) {
          report.fail("|" + tag + "| = " + std::to_string(got) + " but subset filter finds " +
                      std::to_string(filtered));
        }
      }
    }
  }
  return report;
}

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> kSuites{
      {"covers-general", 3, 6}, {"covers-orthogonal", 3, 7}, {"kerov", 3, 5},
      {"graded", 2, 6},         {"bruhat", 3, 6},            {"counts", 1, 7},
  };
  return kSuites;
}

std::optional<SuiteInfo> find_suite(std::string_view name) {
  for (const auto& s : suites()) {
    if (s.name == name) return s;
  }
  return std::nullopt;
}

SuiteReport run_suite(std::string_view name, std::optional<int> max_n) {
  const auto info = find_suite(name);
  if (!info) throw DomainError("unknown suite '" + std::string(name) + "'");
  const int lo = info->default_min_n;
  const int hi = max_n.value_or(info->default_max_n);
  if (name == "covers-general") return verify_covers(Kind::general, lo, hi);
  if (name == "covers-orthogonal") return verify_covers(Kind::orthogonal, lo, hi);
  if (name == "kerov") return verify_kerov(lo, hi);
  if (name == "bruhat") return verify_bruhat(lo, hi);
  if (name == "counts") return verify_counts(lo, hi);
  SuiteReport report{"graded", lo, hi};
  report.absorb(verify_graded(Kind::general, lo, hi));
  report.absorb(verify_graded(Kind::orthogonal, lo, hi + 1));
  return report;
}

}  // namespace rookposet
