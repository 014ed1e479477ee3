// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rookposet/cover_moves.hpp"
#include "rookposet/kerov.hpp"
#include "rookposet/order.hpp"
#include "rookposet/poset.hpp"
#include "rookposet/roots.hpp"

using namespace rookposet;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double time_limit_s;  // 0 = no limit
  std::function<Outcome()> body;
};

RookPlacement P(std::vector<Root> roots, int n) { return validate_placement(std::move(roots), n); }

std::string S(const RookPlacement& d) { return format_placement(d); }

bool has(const std::vector<RookPlacement>& set, const RookPlacement& d) {
  return std::find(set.begin(), set.end(), d) != set.end();
}

// Recursive-descent check of the Graphviz statement grammar used by
// export_dot: digraph ID { stmt* } with node, edge, attribute, ID=ID and
// anonymous subgraph statements. Counts edge statements.
class DotChecker {
 public:
  explicit DotChecker(const std::string& text) : text_(text) {}

  bool parse(std::size_t& edges, std::string& error) {
    try {
      expect_keyword("digraph");
      if (peek_id()) id();
      expect('{');
      stmt_list();
      expect('}');
      skip_ws();
      if (pos_ != text_.size()) throw std::string("trailing input");
      edges = edges_;
      return true;
    } catch (const std::string& e) {
      error = e + " at offset " + std::to_string(pos_);
      return false;
    }
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!at(c)) throw std::string("expected '") + c + "'";
    ++pos_;
  }
  bool at_arrow() {
    skip_ws();
    return text_.compare(pos_, 2, "->") == 0;
  }
  bool peek_id() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '"' || std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
           c == '.';
  }
  std::string id() {
    skip_ws();
    if (pos_ >= text_.size()) throw std::string("expected ID");
    std::string out;
    if (text_[pos_] == '"') {
      ++pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) out += text_[pos_++];
        out += text_[pos_++];
      }
      if (pos_ >= text_.size()) throw std::string("unterminated string");
      ++pos_;
      return out;
    }
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_' || text_[pos_] == '.' ||
                                   (text_[pos_] == '-' && text_.compare(pos_, 2, "->") != 0))) {
      out += text_[pos_++];
    }
    if (out.empty()) throw std::string("expected ID");
    return out;
  }
  void expect_keyword(const std::string& kw) {
    if (id() != kw) throw std::string("expected ") + kw;
  }
  void attr_list() {
    while (at('[')) {
      ++pos_;
      while (!at(']')) {
        id();
        expect('=');
        id();
        if (at(',') || at(';')) ++pos_;
      }
      expect(']');
    }
  }
  void stmt_list() {
    while (!at('}')) {
      stmt();
      if (at(';')) ++pos_;
    }
  }
  void stmt() {
    if (at('{')) {
      ++pos_;
      stmt_list();
      expect('}');
      return;
    }
    const std::string first = id();
    if (first == "node" || first == "edge" || first == "graph") {
      attr_list();
      return;
    }
    if (at('=')) {
      ++pos_;
      id();
      return;
    }
    if (at_arrow()) {
      while (at_arrow()) {
        pos_ += 2;
        id();
        ++edges_;
      }
    }
    attr_list();
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t edges_ = 0;
};

Outcome covers_exact(Kind kind, int lo, int hi) {
  std::size_t checked = 0, bad = 0;
  std::string first;
  for (int n = lo; n <= hi; ++n) {
    const Poset p = Poset::build(n, kind);
    for (const auto& d : p.elements()) {
      ++checked;
      const auto gen = kind == Kind::general ? predecessors_general(d) : predecessors_orthogonal(d);
      auto oracle = brute_force_covers(p, d);
      std::sort(oracle.begin(), oracle.end());
      if (gen != oracle) {
        if (!bad) first = "n=" + std::to_string(n) + " D={" + S(d) + "}";
        ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(checked) + " placements, " + std::to_string(bad) +
                        " discrepancies" + (bad ? ", first " + first : "")};
}

Outcome graded(Kind kind, int lo, int hi) {
  std::size_t checked = 0;
  for (int n = lo; n <= hi; ++n) {
    const Poset p = Poset::build(n, kind);
    const GradedReport r = check_graded(p);
    if (!r.is_graded) return {false, "n=" + std::to_string(n) + ": " + r.failure};
    for (std::size_t x = 0; x < p.size(); ++x) {
      ++checked;
      const auto& d = p.element(x);
      const int formula = kind == Kind::general ? rank_general(d) : rank_orthogonal(d);
      if (formula != r.rank_of[x]) {
        return {false, "n=" + std::to_string(n) + " D={" + S(d) + "} Hasse rank " +
                           std::to_string(r.rank_of[x]) + " vs " + std::to_string(formula)};
      }
    }
  }
  return {true, "all graded, " + std::to_string(checked) + " ranks equal the closed form"};
}

std::vector<Criterion> criteria() {
  std::vector<Criterion> out;

  out.push_back({"AC1", "cover generator exact on R(3..6)", 30.0,
                 [] { return covers_exact(Kind::general, 3, 6); }});

  out.push_back({"AC2", "cover generator exact on I(3..7)", 60.0,
                 [] { return covers_exact(Kind::orthogonal, 3, 7); }});

  out.push_back({"AC3", "Kerov map is an order embedding on R(3..5)", 10.0, [] {
                   std::size_t pairs = 0, bad = 0;
                   for (int n = 3; n <= 5; ++n) {
                     const auto all = enumerate_placements(n, Kind::general);
                     for (const auto& t : all) {
                       for (const auto& d : all) {
                         ++pairs;
                         if (leq_placement(t, d) != leq_placement(kerov_map(t), kerov_map(d))) ++bad;
                       }
                     }
                   }
                   return Outcome{bad == 0, std::to_string(pairs) + " pairs, " +
                                                std::to_string(bad) + " disagreements"};
                 }});

  out.push_back({"AC4", "Kerov map preserves covers on R(3..5)", 60.0, [] {
                   std::size_t pairs = 0, bad = 0;
                   for (int n = 3; n <= 5; ++n) {
                     const auto all = enumerate_placements(n, Kind::general);
                     for (const auto& d : all) {
                       const auto general = predecessors_general(d);
                       const auto image = predecessors_orthogonal(kerov_map(d));
                       for (const auto& t : all) {
                         ++pairs;
                         if (has(general, t) != has(image, kerov_map(t))) ++bad;
                       }
                     }
                   }
                   return Outcome{bad == 0, std::to_string(pairs) + " pairs, " +
                                                std::to_string(bad) + " disagreements"};
                 }});

  out.push_back({"AC5", "R(2..6) graded with rank (l(w_K(D))+|D|)/2", 0.0,
                 [] { return graded(Kind::general, 2, 6); }});

  out.push_back({"AC6", "I(2..7) graded with rank (l(w_D)+|D|)/2", 0.0,
                 [] { return graded(Kind::orthogonal, 2, 7); }});

  out.push_back({"AC7", "placement order equals Bruhat order on I(3..6)", 0.0, [] {
                   std::size_t pairs = 0, bad = 0;
                   for (int n = 3; n <= 6; ++n) {
                     const auto all = enumerate_placements(n, Kind::orthogonal);
                     for (const auto& a : all) {
                       for (const auto& b : all) {
                         ++pairs;
                         if (leq_placement(a, b) != bruhat_leq(involution_of(a), involution_of(b)))
                           ++bad;
                       }
                     }
                   }
                   return Outcome{bad == 0, std::to_string(pairs) + " pairs, " +
                                                std::to_string(bad) + " disagreements"};
                 }});

  out.push_back({"AC8", "enumeration counts, subset filter for n <= 5", 0.0, [] {
                   const std::size_t bell[] = {1, 2, 5, 15, 52, 203, 877};
                   const std::size_t inv[] = {1, 2, 4, 10, 26, 76, 232};
                   for (int n = 1; n <= 7; ++n) {
                     const auto r = enumerate_placements(n, Kind::general);
                     const auto i = enumerate_placements(n, Kind::orthogonal);
                     if (r.size() != bell[n - 1] || i.size() != inv[n - 1]) {
                       return Outcome{false, "count mismatch at n=" + std::to_string(n)};
                     }
                     if (n <= 5 && (r != oracle::all_placements(n, Kind::general) ||
                                    i != oracle::all_placements(n, Kind::orthogonal))) {
                       return Outcome{false, "subset filter disagrees at n=" + std::to_string(n)};
                     }
                   }
                   return Outcome{true, "R: 1,2,5,15,52,203,877  I: 1,2,4,10,26,76,232"};
                 }});

  out.push_back({"AC9", "worked examples reproduce exactly", 0.0, [] {
                   std::vector<std::string> failed;
                   auto check = [&](bool ok, const std::string& what) {
                     if (!ok) failed.push_back(what);
                   };
                   using Rows = std::vector<std::vector<int>>;
                   // Rank matrices and order.
                   const auto d1 = P({{2, 1}, {4, 2}}, 4);
                   const auto d2 = P({{3, 1}, {4, 2}}, 4);
                   check(r_matrix(d1).rows() == Rows{{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 1, 0}},
                         "R_D1");
                   check(r_matrix(d2).rows() == Rows{{0, 0, 0, 0}, {1, 0, 0, 0}, {1, 2, 0, 0}, {0, 1, 1, 0}},
                         "R_D2");
                   check(leq_placement(d1, d2), "D1 <= D2");
                   // Removal, slides and cross in R(8).
                   const auto d = P({{3, 1}, {6, 2}, {7, 3}, {5, 4}, {8, 5}}, 8);
                   check(removal_candidates_general(d) == std::vector<Root>{{5, 4}}, "M_R");
                   const auto right = slide_right_general(d);
                   check(std::any_of(right.begin(), right.end(),
                                     [](const CoverMove& m) { return m.source == std::vector<Root>{{8, 5}}; }),
                         "(8,5) in A_right");
                   const auto up = slide_up_general(d);
                   check(std::any_of(up.begin(), up.end(),
                                     [](const CoverMove& m) { return m.source == std::vector<Root>{{3, 1}}; }),
                         "(3,1) in A_up");
                   const auto cross = cross_moves_general(d);
                   check(std::any_of(cross.begin(), cross.end(),
                                     [](const CoverMove& m) {
                                       return m.source == std::vector<Root>{{5, 4}, {6, 2}};
                                     }),
                         "(6,2) in B_(5,4)");
                   const auto preds = predecessors_general(d);
                   for (const char* text : {"3,1;6,2;7,3;8,5", "3,1;5,2;6,4;7,3;8,5",
                                            "2,1;5,4;6,2;7,3;8,5", "3,1;5,4;6,2;7,3;8,6"}) {
                     check(has(preds, parse_placement(text, 8)), std::string("result ") + text);
                   }
                   // Split in R(6).
                   check(has(predecessors_general(P({{4, 1}, {6, 2}, {5, 4}}, 6)),
                             parse_placement("3,2;4,1;5,4;6,3", 6)),
                         "split (6,2) at (3,3)");
                   // Orthogonal cross and split in I(8).
                   check(has(predecessors_orthogonal(P({{5, 1}, {6, 2}, {8, 4}}, 8)),
                             parse_placement("4,2;5,1;8,6", 8)),
                         "orthogonal cross");
                   check(has(predecessors_orthogonal(P({{4, 1}, {8, 2}, {7, 6}}, 8)),
                             parse_placement("3,2;4,1;7,6;8,5", 8)),
                         "orthogonal split");
                   // Kerov image.
                   const auto k = kerov_map(P({{3, 1}, {6, 2}, {7, 3}, {5, 4}, {8, 6}}, 8));
                   check(S(k) == "4,1;8,7;10,3;12,5;14,11" && k.n() == 14, "K(D)");
                   check(to_string(involution_of(k)) == "[4,2,10,1,12,6,8,7,9,3,14,5,13,11]",
                         "w_K(D)");
                   std::string detail = failed.empty() ? "all fixtures match" : "mismatch:";
                   for (const auto& f : failed) detail += " " + f + ";";
                   return Outcome{failed.empty(), detail};
                 }});

  out.push_back({"AC10", "DOT export of R(4) and I(5) is a valid digraph with oracle edge counts",
                 0.0, [] {
                   // Hasse edge counts from the naive transitive reduction.
                   const std::pair<Poset, std::size_t> cases[] = {
                       {Poset::build(4, Kind::general), 24},
                       {Poset::build(5, Kind::orthogonal), 63},
                   };
                   std::string detail;
                   bool ok = true;
                   for (const auto& [p, expected] : cases) {
                     const std::string dot = export_dot(p);
                     std::size_t edges = 0;
                     std::string error;
                     const bool parsed = DotChecker(dot).parse(edges, error);
                     ok = ok && parsed && edges == expected;
                     detail += std::string(p.kind() == Kind::general ? "R" : "I") + "(" +
                               std::to_string(p.n()) + "): " +
                               (parsed ? std::to_string(edges) + "/" + std::to_string(expected) +
                                             " edges"
                                       : "parse error " + error) +
                               "  ";
                   }
                   return Outcome{ok, detail};
                 }});

  return out;
}

}  // namespace

int main() {
  int failures = 0;
  for (const auto& c : criteria()) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = c.body();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && seconds >= c.time_limit_s) {
      outcome.ok = false;
      outcome.detail += " (exceeded " + std::to_string(c.time_limit_s) + " s)";
    }
    if (!outcome.ok) ++failures;
    std::printf("[%s] %-5s %s: %s (%.3f s)\n", outcome.ok ? "PASS" : "FAIL", c.id.c_str(),
                c.title.c_str(), outcome.detail.c_str(), seconds);
  }
  std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
