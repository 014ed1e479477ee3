#include "rookposet/roots.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "rookposet/errors.hpp"

namespace rookposet {

namespace {

constexpr std::string_view kUnicodeRook = "⊗";

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

int parse_index(std::string_view token, std::string_view pair) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("bad index '" + std::string(token) + "' in pair '" +
                     std::string(pair) + "'");
  }
  return value;
}

}  // namespace

Root make_root(int i, int j) {
  if (j < 1 || i <= j) {
    throw DomainError("(" + std::to_string(i) + "," + std::to_string(j) +
                      ") is not a positive root: need i > j >= 1");
  }
  return Root{i, j};
}

std::string to_string(Root r) {
  return "(" + std::to_string(r.row) + "," + std::to_string(r.col) + ")";
}

bool RookPlacement::contains(Root r) const {
  return std::binary_search(roots_.begin(), roots_.end(), r);
}

std::strong_ordering operator<=>(const RookPlacement& a, const RookPlacement& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.roots_.begin(), a.roots_.end(),
                                                b.roots_.begin(), b.roots_.end());
}

RookPlacement validate_placement(std::vector<Root> roots, int n) {
  if (n < 1 || n > kMaxN) {
    throw RangeError("ambient n=" + std::to_string(n) + " outside 1.." +
                     std::to_string(kMaxN));
  }
  for (const Root& r : roots) {
    make_root(r.row, r.col);
    if (r.row > n) {
      throw RangeError("root " + to_string(r) + " exceeds n=" + std::to_string(n));
    }
  }
  std::sort(roots.begin(), roots.end());

  RookPlacement d;
  d.n_ = n;
  std::vector<const Root*> by_row(n + 1, nullptr);
  std::vector<const Root*> by_col(n + 1, nullptr);
  for (const Root& r : roots) {
    if (by_row[r.row]) {
      throw AttackError("roots " + to_string(*by_row[r.row]) + " and " + to_string(r) +
                        " share row " + std::to_string(r.row));
    }
    if (by_col[r.col]) {
      throw AttackError("roots " + to_string(*by_col[r.col]) + " and " + to_string(r) +
                        " share column " + std::to_string(r.col));
    }
    by_row[r.row] = &r;
    by_col[r.col] = &r;
    d.row_mask_ |= std::uint64_t{1} << r.row;
    d.col_mask_ |= std::uint64_t{1} << r.col;
  }
  d.roots_ = std::move(roots);
  return d;
}

bool is_orthogonal(const RookPlacement& d) {
  return (d.row_mask() & d.col_mask()) == 0;
}

std::string_view to_string(Kind kind) {
  return kind == Kind::general ? "general" : "orthogonal";
}

Kind parse_kind(std::string_view text) {
  if (text == "general" || text == "R") return Kind::general;
  if (text == "orthogonal" || text == "I") return Kind::orthogonal;
  throw ParseError("unknown kind '" + std::string(text) +
                   "': expected general or orthogonal");
}

namespace {

// Rows are decided from n down to 2; a row either stays empty or takes one
// free column below the diagonal. `used` holds occupied indices: columns only
// for general placements, rows and columns together for orthogonal ones.
struct Enumerator {
  int n;
  Kind kind;
  std::size_t cap;
  std::vector<Root> current;
  std::vector<RookPlacement> out;

  void emit() {
    if (out.size() == cap) {
      throw ResourceError("enumeration of n=" + std::to_string(n) + " exceeds cap of " +
                          std::to_string(cap) + " placements");
    }
    out.push_back(validate_placement(current, n));
  }

  void run(int row, std::uint64_t used) {
    if (row < 2) {
      emit();
      return;
    }
    run(row - 1, used);
    if (kind == Kind::orthogonal && ((used >> row) & 1u)) return;
    for (int col = 1; col < row; ++col) {
      if ((used >> col) & 1u) continue;
      std::uint64_t next = used | (std::uint64_t{1} << col);
      if (kind == Kind::orthogonal) next |= std::uint64_t{1} << row;
      current.push_back(Root{row, col});
      run(row - 1, next);
      current.pop_back();
    }
  }
};

}  // namespace

std::vector<RookPlacement> enumerate_placements(int n, Kind kind, std::size_t cap) {
  if (n < 1 || n > kMaxN) {
    throw RangeError("ambient n=" + std::to_string(n) + " outside 1.." +
                     std::to_string(kMaxN));
  }
  Enumerator e{n, kind, cap, {}, {}};
  e.run(n, 0);
  std::sort(e.out.begin(), e.out.end());
  return std::move(e.out);
}

std::string format_placement(const RookPlacement& d) {
  std::string out;
  for (const Root& r : d.roots()) {
    if (!out.empty()) out += ';';
    out += std::to_string(r.row);
    out += ',';
    out += std::to_string(r.col);
  }
  return out;
}

std::vector<Root> parse_roots(std::string_view text) {
  const std::string compact = strip_spaces(text);
  std::vector<Root> roots;
  if (compact.empty()) return roots;
  std::string_view rest = compact;
  while (true) {
    const auto semi = rest.find(';');
    const std::string_view pair = rest.substr(0, semi);
    const auto comma = pair.find(',');
    if (comma == std::string_view::npos || pair.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError("malformed pair '" + std::string(pair) + "': expected i,j");
    }
    const int i = parse_index(pair.substr(0, comma), pair);
    const int j = parse_index(pair.substr(comma + 1), pair);
    roots.push_back(make_root(i, j));
    if (semi == std::string_view::npos) break;
    rest.remove_prefix(semi + 1);
  }
  return roots;
}

RookPlacement parse_placement(std::string_view text, int n) {
  return validate_placement(parse_roots(text), n);
}

std::string render_board(const RookPlacement& d, BoardStyle style) {
  const int n = d.n();
  std::vector<int> col_in_row(n + 1, 0);
  for (const Root& r : d.roots()) col_in_row[r.row] = r.col;
  std::string out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (col_in_row[i] == j) {
        out += style.unicode ? kUnicodeRook : std::string_view("X");
      } else {
        out += '.';
      }
    }
    out += '\n';
  }
  return out;
}

RookPlacement parse_board(std::string_view board) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(board)};
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  const int n = static_cast<int>(lines.size());
  if (n == 0) throw ParseError("empty board");

  std::vector<Root> roots;
  for (int i = 1; i <= n; ++i) {
    std::string_view line = lines[i - 1];
    int j = 0;
    while (!line.empty()) {
      ++j;
      if (line.front() == '.') {
        line.remove_prefix(1);
      } else if (line.front() == 'X' || line.front() == 'x') {
        roots.push_back(make_root(i, j));
        line.remove_prefix(1);
      } else if (line.starts_with(kUnicodeRook)) {
        roots.push_back(make_root(i, j));
        line.remove_prefix(kUnicodeRook.size());
      } else {
        throw ParseError("unexpected board character in line " + std::to_string(i) +
                         ": '" + std::string(line.substr(0, 1)) + "'");
      }
    }
    if (j != n) {
      throw ParseError("board line " + std::to_string(i) + " has " + std::to_string(j) +
                       " cells, expected " + std::to_string(n));
    }
  }
  return validate_placement(std::move(roots), n);
}

}  // namespace rookposet
