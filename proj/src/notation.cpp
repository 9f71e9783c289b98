#include "chessspace/notation.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "chessspace/errors.hpp"

namespace chessspace {

PieceSet parse_piece_set(std::string_view text) {
  PieceSet set;
  std::optional<std::size_t> separator;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == 'v' || c == 'V') {
      if (separator) {
        throw ParseError("piece set '" + std::string(text) + "' has a second separator 'v' at position " +
                             std::to_string(i),
                         i);
      }
      separator = i;
      continue;
    }
    auto role = role_from_letter(c);
    if (!role) {
      throw ParseError("piece set '" + std::string(text) + "': unexpected character '" +
                           std::string(1, c) + "' at position " + std::to_string(i),
                       i);
    }
    set.add({*role, separator ? Color::Black : Color::White});
  }
  if (!separator) {
    throw ParseError("piece set '" + std::string(text) + "' is missing the 'v' separator",
                     text.size());
  }
  return set;
}

std::string format_piece_set(const PieceSet& set) {
  std::string out;
  for (auto [kind, count] : set.entries()) {
    if (kind.color == Color::Black && out.find('v') == std::string::npos) out += 'v';
    out.append(count, kind.letter());
  }
  if (out.find('v') == std::string::npos) out += 'v';
  return out;
}

const char* to_string(SetViolationCode code) noexcept {
  switch (code) {
    case SetViolationCode::MissingKing: return "missing-king";
    case SetViolationCode::MultipleKings: return "multiple-kings";
    case SetViolationCode::TooManyPawns: return "too-many-pawns";
    case SetViolationCode::TooManyPieces: return "too-many-pieces";
  }
  return "unknown";
}

std::string to_string(const SetViolation& violation) {
  std::string s = to_string(violation.code);
  if (violation.color) s += std::string(" (") + to_string(*violation.color) + ")";
  return s;
}

std::vector<SetViolation> validate_chess_set(const PieceSet& set) {
  std::vector<SetViolation> out;
  for (Color color : {Color::White, Color::Black}) {
    unsigned kings = set.count_of(Role::King, color);
    if (kings == 0) out.push_back({SetViolationCode::MissingKing, color});
    if (kings > 1) out.push_back({SetViolationCode::MultipleKings, color});
    if (set.count_of(Role::Pawn, color) > 8) out.push_back({SetViolationCode::TooManyPawns, color});
  }
  if (set.total_pieces() > 64) out.push_back({SetViolationCode::TooManyPieces, std::nullopt});
  return out;
}

void require_chess_set(const PieceSet& set) {
  auto violations = validate_chess_set(set);
  if (violations.empty()) return;
  std::string msg = "'" + format_piece_set(set) + "' is not a valid chess set:";
  for (std::size_t i = 0; i < violations.size(); ++i) {
    msg += (i == 0 ? " " : ", ") + to_string(violations[i]);
  }
  throw DomainError(msg);
}

Placement::Placement(BoardSpec board, std::vector<Assignment> assignments,
                     std::optional<Color> side_to_move)
    : board_(board), assignments_(std::move(assignments)), side_to_move_(side_to_move) {
  std::sort(assignments_.begin(), assignments_.end(),
            [](const Assignment& a, const Assignment& b) { return a.square < b.square; });
  for (std::size_t i = 0; i < assignments_.size(); ++i) {
    int sq = assignments_[i].square;
    if (sq < 0 || sq >= board_.squares()) {
      throw std::invalid_argument("square " + std::to_string(sq) + " is off the " +
                                  board_.to_string() + " board");
    }
    if (i > 0 && assignments_[i - 1].square == sq) {
      throw std::invalid_argument("square " + std::to_string(sq) + " is assigned twice");
    }
  }
}

PieceSet Placement::piece_set() const {
  PieceSet set;
  for (const auto& a : assignments_) set.add(a.kind);
  return set;
}

std::optional<PieceKind> Placement::at(int square) const noexcept {
  auto it = std::lower_bound(assignments_.begin(), assignments_.end(), square,
                             [](const Assignment& a, int sq) { return a.square < sq; });
  if (it == assignments_.end() || it->square != square) return std::nullopt;
  return it->kind;
}

Placement Placement::with_side_to_move(std::optional<Color> stm) const {
  Placement copy = *this;
  copy.side_to_move_ = stm;
  return copy;
}

std::string serialize_placement(const Placement& placement) {
  const BoardSpec& board = placement.board();
  std::vector<char> cells(static_cast<std::size_t>(board.squares()), 0);
  for (const auto& a : placement.assignments()) cells[a.square] = a.kind.letter();

  std::string out;
  auto flush = [&out](int run) {
    if (run == 0) return;
    if (run <= 9) out += static_cast<char>('0' + run);
    else out += "[" + std::to_string(run) + "]";
  };
  for (int rank = board.height() - 1; rank >= 0; --rank) {
    int run = 0;
    for (int file = 0; file < board.width(); ++file) {
      char c = cells[board.square_at(file, rank)];
      if (c == 0) {
        ++run;
        continue;
      }
      flush(run);
      run = 0;
      out += c;
    }
    flush(run);
    if (rank > 0) out += '/';
  }
  if (auto stm = placement.side_to_move()) out += *stm == Color::White ? " w" : " b";
  return out;
}

Placement parse_placement(std::string_view text) {
  std::optional<Color> stm;
  if (auto space = text.find(' '); space != std::string_view::npos) {
    std::string_view field = text.substr(space + 1);
    if (field == "w") stm = Color::White;
    else if (field == "b") stm = Color::Black;
    else throw ParseError("side to move must be 'w' or 'b'", space + 1);
    text = text.substr(0, space);
  }

  struct Cell {
    int file;
    int row;  // from the top
    PieceKind kind;
  };
  std::vector<Cell> cells;
  int row = 0;
  int file = 0;
  std::optional<int> width;
  auto end_row = [&](std::size_t pos) {
    if (width && *width != file) throw ParseError("ranks have different widths", pos);
    width = file;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '/') {
      end_row(i);
      ++row;
      file = 0;
    } else if (c >= '1' && c <= '9') {
      file += c - '0';
    } else if (c == '[') {
      auto close = text.find(']', i);
      if (close == std::string_view::npos || close == i + 1) throw ParseError("unterminated run length", i);
      int run = 0;
      for (std::size_t j = i + 1; j < close; ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) throw ParseError("bad run length", j);
        run = run * 10 + (text[j] - '0');
        if (run > kMaxBoardSide) throw ParseError("run length exceeds board limit", j);
      }
      file += run;
      i = close;
    } else if (auto kind = kind_from_fen_letter(c)) {
      cells.push_back({file, row, *kind});
      ++file;
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "' at position " +
                           std::to_string(i),
                       i);
    }
  }
  end_row(text.size());

  BoardSpec board(*width, row + 1);
  std::vector<Assignment> assignments;
  assignments.reserve(cells.size());
  for (const auto& cell : cells) {
    assignments.push_back({board.square_at(cell.file, board.height() - 1 - cell.row), cell.kind});
  }
  return Placement(board, std::move(assignments), stm);
}

}  // namespace chessspace
