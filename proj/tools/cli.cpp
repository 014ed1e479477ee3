#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>

#include "rookposet/cover_moves.hpp"
#include "rookposet/errors.hpp"
#include "rookposet/kerov.hpp"
#include "rookposet/order.hpp"
#include "rookposet/poset.hpp"
#include "rookposet/roots.hpp"
#include "rookposet/serialize.hpp"
#include "rookposet/verify.hpp"

namespace rookposet::cli {

namespace {

struct Options {
  int n = 0;
  std::string kind = "general";
  std::string a, b, d;
  std::string out;
  std::string format;
  std::string suite;
  std::optional<int> max_n;
  bool unicode = false;
};

void print_matrix(std::ostream& os, const RankMatrix& m) {
  for (const auto& row : m.rows()) {
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " " : "  ") << row[k];
    os << '\n';
  }
}

std::string shown(const RookPlacement& d) {
  const std::string text = format_placement(d);
  return text.empty() ? "{}" : text;
}

void require_format(const std::string& format, std::initializer_list<std::string_view> allowed) {
  for (auto f : allowed) {
    if (format == f) return;
  }
  throw ParseError("unsupported --format '" + format + "' for this command");
}

int cmd_enumerate(const Options& o, std::ostream& os) {
  const Kind kind = parse_kind(o.kind);
  const auto all = enumerate_placements(o.n, kind);
  if (o.format == "json") {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& d : all) list.push_back(to_json(d));
    os << list.dump(2) << '\n';
    return kExitOk;
  }
  require_format(o.format, {"text"});
  for (const auto& d : all) os << format_placement(d) << '\n';
  return kExitOk;
}

int cmd_compare(const Options& o, std::ostream& os) {
  const RookPlacement a = parse_placement(o.a, o.n);
  const RookPlacement b = parse_placement(o.b, o.n);
  const RankMatrix ra = r_matrix(a);
  const RankMatrix rb = r_matrix(b);
  const bool ab = dominated(ra, rb);
  const bool ba = dominated(rb, ra);
  const std::string relation = ab && ba ? "a = b" : ab ? "a ≤ b" : ba ? "a ≥ b"
                                                                   : "a and b are incomparable";
  if (o.format == "json") {
    os << nlohmann::json{{"relation", relation},
                         {"a", to_json(a)},
                         {"b", to_json(b)},
                         {"r_a", to_json(ra)},
                         {"r_b", to_json(rb)}}
              .dump(2)
       << '\n';
    return kExitOk;
  }
  require_format(o.format, {"text"});
  os << relation << '\n';
  os << "R_a:\n";
  print_matrix(os, ra);
  os << "R_b:\n";
  print_matrix(os, rb);
  return kExitOk;
}

int cmd_covers(const Options& o, std::ostream& os) {
  const Kind kind = parse_kind(o.kind);
  const RookPlacement d = parse_placement(o.d, o.n);
  const auto moves = kind == Kind::general ? predecessor_moves_general(d)
                                           : predecessor_moves_orthogonal(d);
  if (o.format == "json") {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& m : moves) list.push_back(to_json(m));
    const auto preds = kind == Kind::general ? predecessors_general(d) : predecessors_orthogonal(d);
    nlohmann::json results = nlohmann::json::array();
    for (const auto& t : preds) results.push_back(format_placement(t));
    os << nlohmann::json{{"placement", format_placement(d)},
                         {"kind", to_string(kind)},
                         {"moves", list},
                         {"predecessors", results}}
              .dump(2)
       << '\n';
    return kExitOk;
  }
  require_format(o.format, {"text"});
  for (const auto& m : moves) os << shown(m.result) << "\t" << describe(m) << '\n';
  return kExitOk;
}

int cmd_hasse(const Options& o, std::ostream& os) {
  const Poset p = Poset::build(o.n, parse_kind(o.kind));
  const std::string format = o.format == "text" ? "dot" : o.format;
  if (format == "json") {
    os << to_json(p).dump(2) << '\n';
    return kExitOk;
  }
  require_format(format, {"dot"});
  DotOptions options;
  options.graph_name = std::string(o.kind == "orthogonal" || o.kind == "I" ? "I" : "R") + "(" +
                       std::to_string(o.n) + ")";
  os << export_dot(p, options);
  return kExitOk;
}

int cmd_kerov(const Options& o, std::ostream& os) {
  const RookPlacement d = parse_placement(o.d, o.n);
  const RookPlacement k = kerov_map(d);
  const Permutation w = involution_of(k);
  if (o.format == "json") {
    os << nlohmann::json{{"image", to_json(k)}, {"involution", to_json(w)}}.dump(2) << '\n';
    return kExitOk;
  }
  require_format(o.format, {"text"});
  os << format_placement(k) << '\n' << to_string(w) << '\n';
  return kExitOk;
}

int cmd_rank(const Options& o, std::ostream& os) {
  const Kind kind = parse_kind(o.kind);
  const RookPlacement d = parse_placement(o.d, o.n);
  const int rank = kind == Kind::general ? rank_general(d) : rank_orthogonal(d);
  if (o.format == "json") {
    os << nlohmann::json{{"placement", to_json(d)}, {"kind", to_string(kind)}, {"rank", rank}}
              .dump(2)
       << '\n';
    return kExitOk;
  }
  require_format(o.format, {"text"});
  os << rank << '\n';
  return kExitOk;
}

int cmd_render(const Options& o, std::ostream& os) {
  require_format(o.format, {"text"});
  os << render_board(parse_placement(o.d, o.n), BoardStyle{o.unicode});
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& os, std::ostream& err) {
  const auto info = find_suite(o.suite);
  if (!info) {
    std::string names;
    for (const auto& s : suites()) names += (names.empty() ? "" : ", ") + std::string(s.name);
    throw ParseError("unknown suite '" + o.suite + "' (expected one of " + names + ")");
  }
  if (o.max_n && *o.max_n > info->default_max_n) {
    err << "warning: --max-n " << *o.max_n << " exceeds the default bound "
        << info->default_max_n << " for " << info->name << "; runtime grows quickly\n";
  }
  const SuiteReport report = run_suite(o.suite, o.max_n);
  if (o.format == "json") {
    os << nlohmann::json{{"suite", report.name},
                         {"min_n", report.min_n},
                         {"max_n", report.max_n},
                         {"checked", report.checked},
                         {"failed", report.failed},
                         {"failures", report.failures},
                         {"passed", report.passed()}}
              .dump(2)
       << '\n';
  } else {
    require_format(o.format, {"text"});
    for (const auto& f : report.failures) os << "FAIL " << f << '\n';
    os << (report.passed() ? "PASS " : "FAIL ") << report.name << " n=" << report.min_n << ".."
       << report.max_n << " checked=" << report.checked << " failed=" << report.failed << '\n';
  }
  return report.passed() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rook placements in A_{n-1}: order, covers, Kerov map, ranks"};
  app.name(args.empty() ? "rookposet" : args.front());
  app.require_subcommand(1, 1);

  Options o;
  auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "ambient size n (roots live in A_{n-1})")
        ->required()
        ->check(CLI::Range(1, kMaxN));
  };
  auto add_kind = [&](CLI::App* sub) {
    sub->add_option("--kind", o.kind, "general | orthogonal")->capture_default_str();
  };
  auto add_format = [&](CLI::App* sub, const std::string& fallback) {
    o.format = fallback;
    sub->add_option("--format", o.format, "text | json | dot");
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out, "write output to a file"); };

  auto* enumerate = app.add_subcommand("enumerate", "list every placement of R(n) or I(n)");
  add_n(enumerate);
  add_kind(enumerate);
  add_format(enumerate, "text");
  add_out(enumerate);

  auto* compare = app.add_subcommand("compare", "compare two placements");
  add_n(compare);
  compare->add_option("--a", o.a, "first placement, e.g. \"2,1;4,2\"")->required();
  compare->add_option("--b", o.b, "second placement")->required();
  add_format(compare, "text");
  add_out(compare);

  auto* covers = app.add_subcommand("covers", "immediate predecessors with their moves");
  add_n(covers);
  add_kind(covers);
  covers->add_option("--d", o.d, "placement")->required();
  add_format(covers, "text");
  add_out(covers);

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram as DOT or JSON");
  add_n(hasse);
  add_kind(hasse);
  add_format(hasse, "dot");
  add_out(hasse);

  auto* kerov = app.add_subcommand("kerov", "Kerov image K(D) and its involution");
  add_n(kerov);
  kerov->add_option("--d", o.d, "placement")->required();
  add_format(kerov, "text");
  add_out(kerov);

  auto* rank = app.add_subcommand("rank", "rank of a placement");
  add_n(rank);
  add_kind(rank);
  rank->add_option("--d", o.d, "placement")->required();
  add_format(rank, "text");
  add_out(rank);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite,
                     "covers-general | covers-orthogonal | kerov | graded | bruhat | counts")
      ->required();
  verify->add_option("--max-n", o.max_n, "upper bound on n")->check(CLI::Range(1, kMaxN));
  add_format(verify, "text");
  add_out(verify);

  auto* render = app.add_subcommand("render", "draw a placement on the chessboard");
  add_n(render);
  render->add_option("--d", o.d, "placement")->required();
  render->add_flag("--unicode", o.unicode, "draw rooks as U+2297");
  add_format(render, "text");
  add_out(render);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("rookposet");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) {
      err << "error: cannot open '" << o.out << "' for writing\n";
      return kExitUsage;
    }
  }
  std::ostream& os = o.out.empty() ? out : file;

  try {
    if (enumerate->parsed()) return cmd_enumerate(o, os);
    if (compare->parsed()) return cmd_compare(o, os);
    if (covers->parsed()) return cmd_covers(o, os);
    if (hasse->parsed()) return cmd_hasse(o, os);
    if (kerov->parsed()) return cmd_kerov(o, os);
    if (rank->parsed()) return cmd_rank(o, os);
    if (render->parsed()) return cmd_render(o, os);
    if (verify->parsed()) return cmd_verify(o, os, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rookposet::cli
