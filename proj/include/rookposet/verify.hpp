#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rookposet/roots.hpp"

namespace rookposet {

// Outcome of one verification suite. `failures` keeps the first few
// structured messages; `failed` counts all of them.
struct SuiteReport {
  SuiteReport() = default;
  SuiteReport(std::string name_, int min_n_, int max_n_)
      : name(std::move(name_)), min_n(min_n_), max_n(max_n_) {}

  std::string name;
  int min_n = 0;
  int max_n = 0;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;

  bool passed() const { return failed == 0; }
  void fail(std::string message);
  void absorb(const SuiteReport& other);
};

// A placement where the move generator and the materialized relation disagree.
struct CoverDiscrepancy {
  RookPlacement d;
  RookPlacement t;
  bool generated = false;  // produced by the move families
  bool oracle = false;     // an immediate predecessor in the materialized poset
  std::vector<std::string> moves;  // moves that produced t, if any
};

std::string describe(const CoverDiscrepancy& c);

// Generator vs transitive reduction for every element of R(n) / I(n).
std::vector<CoverDiscrepancy> cover_discrepancies(int n, Kind kind);

SuiteReport verify_covers(Kind kind, int min_n, int max_n);
// Order and cover embedding over all pairs, image shape, injectivity, rank
// agreement between rank_general and rank_orthogonal of the image.
SuiteReport verify_kerov(int min_n, int max_n);
// check_graded plus the closed-form rank on every element.
SuiteReport verify_graded(Kind kind, int min_n, int max_n);
// D1 <= D2 iff w_{D1} <= w_{D2} in Bruhat order, all pairs of I(n).
SuiteReport verify_bruhat(int min_n, int max_n);
// |R(n)| and |I(n)| against Bell and involution numbers, and against a
// subset filter over all 2^|Phi+| subsets for n <= subset_max_n.
SuiteReport verify_counts(int min_n, int max_n, int subset_max_n = 5);

struct SuiteInfo {
  std::string_view name;
  int default_min_n;
  int default_max_n;
};

// covers-general, covers-orthogonal, kerov, graded, bruhat, counts.
const std::vector<SuiteInfo>& suites();
std::optional<SuiteInfo> find_suite(std::string_view name);

// Runs a named suite over its default range, or up to `max_n`. The graded
// suite covers R(n) and I(n) up to the R bound and one more for I.
SuiteReport run_suite(std::string_view name, std::optional<int> max_n = std::nullopt);

// Bell numbers and involution counts by recurrence.
std::size_t bell_number(int n);
std::size_t involution_count(int n);

}  // namespace rookposet
