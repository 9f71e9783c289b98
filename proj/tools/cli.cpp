#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "chessspace/counting.hpp"
#include "chessspace/enumeration.hpp"
#include "chessspace/errors.hpp"
#include "chessspace/notation.hpp"
#include "chessspace/sampling.hpp"
#include "chessspace/symmetry.hpp"

namespace chessspace::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string set_text;
  std::string board_text = "8x8";
  std::string batch_file;
  bool json = false;

  // count
  bool stm_factor = false;
  // enumerate
  std::optional<std::uint64_t> limit;
  std::uint64_t budget = kDefaultEnumerationBudget;
  // legal-*, enumerate
  std::string stm_text;
  // legal-sample
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double confidence = kDefaultConfidence;
  unsigned threads = 0;
  // classes
  std::string group_text;
  // ratio
  std::string examined_text;
  int precision = kDefaultRatioPrecision;
};

/// One successful result: the JSON object plus any warnings for stderr.
struct Outcome {
  Json json;
  std::vector<std::string> warnings;
};

using Handler = std::function<Outcome(const std::string& set_text, const Options&)>;

std::optional<Color> parse_stm(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text == "w" || text == "white") return Color::White;
  if (text == "b" || text == "black") return Color::Black;
  throw std::invalid_argument("side to move must be 'w' or 'b', got '" + text + "'");
}

Color require_stm(const std::string& text) {
  auto stm = parse_stm(text);
  if (!stm) throw std::invalid_argument("--stm w|b is required");
  return *stm;
}

const char* stm_letter(Color c) { return c == Color::White ? "w" : "b"; }

BigCount parse_count(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw std::invalid_argument("expected a non-negative integer, got '" + text + "'");
  }
  return BigCount(text);
}

Outcome do_count(const std::string& set_text, const Options& opt) {
  const PieceSet set = parse_piece_set(set_text);
  const BoardSpec board = BoardSpec::parse(opt.board_text);
  BigCount count = multiset_placements(board, set);
  if (opt.stm_factor) count *= 2;
  Outcome o;
  o.json = {{"command", "count"},
            {"set", format_piece_set(set)},
            {"board", board.to_string()},
            {"squares", board.squares()},
            {"pieces", set.total_pieces()},
            {"side_to_move_factor", opt.stm_factor},
            {"count", count.str()}};
  if (set.total_pieces() > static_cast<unsigned>(board.squares())) {
    o.warnings.push_back(std::to_string(set.total_pieces()) + " pieces exceed " +
                         std::to_string(board.squares()) + " squares: 0 placements");
  }
  return o;
}

Outcome do_enumerate(const std::string& set_text, const Options& opt) {
  const PieceSet set = parse_piece_set(set_text);
  const BoardSpec board = BoardSpec::parse(opt.board_text);
  const auto stm = parse_stm(opt.stm_text);
  Json placements = Json::array();
  PlacementEnumerator walker(board, set, opt.budget);
  while ((!opt.limit || placements.size() < *opt.limit) && walker.next()) {
    placements.push_back(serialize_placement(walker.placement(stm)));
  }
  Outcome o;
  o.json = {{"command", "enumerate"},
            {"set", format_piece_set(set)},
            {"board", board.to_string()},
            {"side_to_move", stm ? Json(stm_letter(*stm)) : Json(nullptr)},
            {"limit", opt.limit ? Json(*opt.limit) : Json(nullptr)},
            {"count", placements.size()},
            {"placements", std::move(placements)}};
  return o;
}

Outcome do_legal_exact(const std::string& set_text, const Options& opt) {
  const PieceSet set = parse_piece_set(set_text);
  const Color stm = require_stm(opt.stm_text);
  const BoardSpec board = BoardSpec::standard();
  auto [legal, total] = count_legal_by_enumeration(board, set, stm, opt.budget);
  Outcome o;
  o.json = {{"command", "legal-exact"},
            {"set", format_piece_set(set)},
            {"board", board.to_string()},
            {"side_to_move", stm_letter(stm)},
            {"legal", legal.str()},
            {"total", total.str()},
            {"fraction", total == 0 ? std::string("0") : render_decimal(legal, total, kDefaultRatioPrecision)}};
  return o;
}

Outcome do_legal_sample(const std::string& set_text, const Options& opt) {
  const PieceSet set = parse_piece_set(set_text);
  const Color stm = require_stm(opt.stm_text);
  const BoardSpec board = BoardSpec::standard();
  const EstimateResult r =
      estimate_legal_fraction(board, set, opt.samples, opt.seed, opt.confidence, stm, opt.threads);
  Outcome o;
  o.json = {{"command", "legal-sample"},
            {"set", format_piece_set(set)},
            {"board", board.to_string()},
            {"side_to_move", stm_letter(stm)},
            {"samples", r.samples},
            {"legal_hits", r.legal_hits},
            {"point_estimate", r.point_estimate},
            {"ci_low", r.ci_low},
            {"ci_high", r.ci_high},
            {"confidence", r.confidence},
            {"interval", "wilson"},
            {"seed", r.seed},
            {"rng", std::string(kRngAlgorithm)},
            {"total_placements", r.total_placements.str()},
            {"estimated_legal_count", r.estimated_legal_count}};
  return o;
}

Outcome do_classes(const std::string& set_text, const Options& opt) {
  const PieceSet set = parse_piece_set(set_text);
  const BoardSpec board = BoardSpec::parse(opt.board_text);
  const GroupId group = opt.group_text.empty() ? default_group(board) : parse_group_id(opt.group_text);
  const BigCount classes = count_classes(board, set, group);
  Outcome o;
  o.json = {{"command", "classes"},
            {"set", format_piece_set(set)},
            {"board", board.to_string()},
            {"group", to_string(group)},
            {"group_order", board_symmetries(board, group).order()},
            {"classes", classes.str()},
            {"raw", multiset_placements(board, set).str()}};
  if (set.contains_role(Role::Pawn) && group != GroupId::Identity) {
    o.warnings.push_back(std::string("set contains pawns; group ") + to_string(group) +
                         " maps pawns onto squares they cannot reach in chess");
  }
  return o;
}

Outcome do_ratio(const std::string& set_text, const Options& opt) {
  const PieceSet set = parse_piece_set(set_text);
  const BoardSpec board = BoardSpec::parse(opt.board_text);
  const BigCount examined = parse_count(opt.examined_text);
  const Ratio ratio = effort_ratio(examined, multiset_placements(board, set), opt.precision);
  Outcome o;
  o.json = {{"command", "ratio"},
            {"set", format_piece_set(set)},
            {"board", board.to_string()},
            {"examined", ratio.numerator.str()},
            {"total", ratio.denominator.str()},
            {"precision", ratio.precision},
            {"fraction", ratio.rendered},
            {"percent", ratio.percent}};
  return o;
}

std::string scalar_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "-";
  return value.dump();
}

// Text for a single invocation: aligned "key  value" lines, except for the
// bare count and the one-placement-per-line enumeration.
void print_text(const Json& j, std::ostream& out) {
  const std::string command = j["command"];
  if (command == "count") {
    out << j["count"].get<std::string>() << '\n';
    return;
  }
  if (command == "enumerate") {
    for (const auto& p : j["placements"]) out << p.get<std::string>() << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& [key, value] : j.items()) {
    if (key != "command") width = std::max(width, key.size());
  }
  for (const auto& [key, value] : j.items()) {
    if (key == "command") continue;
    out << key << std::string(width - key.size() + 2, ' ') << scalar_text(value);
    if (command == "ratio" && key == "percent") out << '%';
    out << '\n';
  }
}

// Value columns for one batch line.
std::vector<std::string> batch_columns(const Json& j) {
  const std::string command = j["command"];
  std::vector<std::string> cols;
  for (const auto& [key, value] : j.items()) {
    if (key == "command") continue;
    if (value.is_array()) {
      std::string joined;
      for (const auto& p : value) joined += (joined.empty() ? "" : "; ") + p.get<std::string>();
      cols.push_back(joined);
    } else {
      cols.push_back(scalar_text(value));
    }
  }
  if (command == "count") return {cols[0], cols.back()};
  return cols;
}

struct Failure {
  int code;
  std::string message;
};

std::optional<Failure> classify(const std::function<void()>& body) {
  try {
    body();
  } catch (const DomainError& e) {
    return Failure{kDomainError, e.what()};
  } catch (const std::invalid_argument& e) {
    return Failure{kUsageError, e.what()};
  } catch (const std::exception& e) {
    return Failure{kDomainError, e.what()};
  }
  return std::nullopt;
}

std::string trim_line(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  line.erase(line.begin(), std::find_if(line.begin(), line.end(), not_space));
  line.erase(std::find_if(line.rbegin(), line.rend(), not_space).base(), line.end());
  return line;
}

int run_single(const Handler& handler, const Options& opt,
               std::ostream& out, std::ostream& err) {
  Outcome outcome;
  auto failure = classify([&] { outcome = handler(opt.set_text, opt); });
  if (failure) {
    err << "error: " << failure->message << '\n';
    return failure->code;
  }
  for (const auto& w : outcome.warnings) err << "warning: " << w << '\n';
  if (opt.json) out << outcome.json.dump() << '\n';
  else print_text(outcome.json, out);
  return kOk;
}

int run_batch(const std::string& command, const Handler& handler, const Options& opt,
              std::ostream& out, std::ostream& err) {
  std::ifstream in(opt.batch_file);
  if (!in) {
    err << "error: cannot read batch file '" << opt.batch_file << "'\n";
    return kUsageError;
  }
  int worst = kOk;
  std::vector<std::vector<std::string>> rows;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::string text = trim_line(raw);
    if (text.empty()) continue;
    Outcome outcome;
    auto failure = classify([&] { outcome = handler(text, opt); });
    if (failure) {
      worst = std::max(worst, failure->code);
      err << "error: line " << line_no << ": " << failure->message << '\n';
      if (opt.json) {
        out << Json{{"command", command},
                    {"input", text},
                    {"error", {{"code", failure->code}, {"message", failure->message}}}}
                   .dump()
            << '\n';
      } else {
        rows.push_back({text, "error: " + failure->message});
      }
      continue;
    }
    for (const auto& w : outcome.warnings) err << "warning: line " << line_no << ": " << w << '\n';
    if (opt.json) out << outcome.json.dump() << '\n';
    else rows.push_back(batch_columns(outcome.json));
  }

  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (widths.size() <= c) widths.push_back(0);
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(widths[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
  return worst;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact placement counts, legality estimates and symmetry classes for chess piece sets",
               "chessspace"};
  app.require_subcommand(1);
  Options opt;

  struct Entry {
    CLI::App* sub;
    Handler handler;
  };
  std::vector<Entry> entries;

  auto add_common = [&](CLI::App* sub, bool board) {
    sub->add_option("set", opt.set_text, "Piece set such as KNNNNvkq");
    sub->add_option("--batch", opt.batch_file, "File with one piece set per line");
    sub->add_flag("--json", opt.json, "Emit one JSON object per result");
    if (board) sub->add_option("--board", opt.board_text, "Board size WxH")->capture_default_str();
  };

  auto* count = app.add_subcommand("count", "Number of distinct placements");
  add_common(count, true);
  count->add_flag("--stm-factor", opt.stm_factor,
                  "Double the count to include side to move (tablebase-style sizes)");
  entries.push_back({count, do_count});

  auto* enumerate = app.add_subcommand("enumerate", "List every placement (small spaces only)");
  add_common(enumerate, true);
  enumerate->add_option("--limit", opt.limit, "Stop after N placements");
  enumerate->add_option("--stm", opt.stm_text, "Append side to move: w or b");
  enumerate->add_option("--budget", opt.budget, "Maximum raw square sequences")->capture_default_str();
  entries.push_back({enumerate, do_enumerate});

  auto* legal_exact = app.add_subcommand("legal-exact", "Exact legal and total counts on 8x8");
  add_common(legal_exact, false);
  legal_exact->add_option("--stm", opt.stm_text, "Side to move: w or b")->required();
  legal_exact->add_option("--budget", opt.budget, "Maximum raw square sequences")->capture_default_str();
  entries.push_back({legal_exact, do_legal_exact});

  auto* legal_sample = app.add_subcommand("legal-sample", "Monte Carlo legal fraction on 8x8");
  add_common(legal_sample, false);
  legal_sample->add_option("--samples", opt.samples, "Number of sampled placements")->required();
  legal_sample->add_option("--seed", opt.seed, "64-bit seed")->required();
  legal_sample->add_option("--confidence", opt.confidence, "Interval confidence level")->capture_default_str();
  legal_sample->add_option("--stm", opt.stm_text, "Side to move: w or b")->required();
  legal_sample->add_option("--threads", opt.threads, "Worker threads (0 = all cores)");
  entries.push_back({legal_sample, do_legal_sample});

  auto* classes = app.add_subcommand("classes", "Placements up to rotation/reflection");
  add_common(classes, true);
  classes->add_option("--group", opt.group_text, "id, r180, c4 or d4 (default c4 on square boards, else r180)");
  entries.push_back({classes, do_classes});

  auto* ratio = app.add_subcommand("ratio", "Examined positions as a share of the search space");
  add_common(ratio, true);
  ratio->add_option("--examined", opt.examined_text, "Positions examined")->required();
  ratio->add_option("--precision", opt.precision, "Significant figures")->capture_default_str();
  entries.push_back({ratio, do_ratio});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  for (const auto& entry : entries) {
    if (!entry.sub->parsed()) continue;
    const std::string name = entry.sub->get_name();
    if (opt.batch_file.empty() == opt.set_text.empty()) {
      err << "error: " << name << " needs exactly one of a piece set or --batch FILE\n";
      return kUsageError;
    }
    return opt.batch_file.empty() ? run_single(entry.handler, opt, out, err)
                                  : run_batch(name, entry.handler, opt, out, err);
  }
  return kUsageError;
}

}  // namespace chessspace::cli
