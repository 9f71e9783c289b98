#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chessspace/board.hpp"
#include "chessspace/piece.hpp"

namespace chessspace {

/// Parses `<white>v<black>`. Letters are K,Q,R,B,N,P in either case; the
/// separator position decides color. Throws ParseError.
PieceSet parse_piece_set(std::string_view text);

/// Canonical form: White uppercase, 'v', Black lowercase, K,Q,R,B,N,P order.
std::string format_piece_set(const PieceSet& set);

enum class SetViolationCode { MissingKing, MultipleKings, TooManyPawns, TooManyPieces };

struct SetViolation {
  SetViolationCode code;
  std::optional<Color> color;  // unset for TooManyPieces

  friend bool operator==(const SetViolation&, const SetViolation&) = default;
};

const char* to_string(SetViolationCode code) noexcept;
/// "multiple-kings (White)".
std::string to_string(const SetViolation& violation);

/// Standard chess set checks: one king per color, at most 8 pawns per color,
/// at most 64 pieces. Empty result means OK.
std::vector<SetViolation> validate_chess_set(const PieceSet& set);

/// Throws DomainError listing every violation.
void require_chess_set(const PieceSet& set);

struct Assignment {
  int square;
  PieceKind kind;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Pieces on distinct squares of a board, stored sorted by square.
class Placement {
public:
  /// Throws std::invalid_argument on out-of-range or duplicate squares.
  Placement(BoardSpec board, std::vector<Assignment> assignments,
            std::optional<Color> side_to_move = std::nullopt);

  const BoardSpec& board() const noexcept { return board_; }
  const std::vector<Assignment>& assignments() const noexcept { return assignments_; }
  std::optional<Color> side_to_move() const noexcept { return side_to_move_; }

  PieceSet piece_set() const;
  std::optional<PieceKind> at(int square) const noexcept;

  Placement with_side_to_move(std::optional<Color> stm) const;

  friend bool operator==(const Placement&, const Placement&) = default;

private:
  BoardSpec board_;
  std::vector<Assignment> assignments_;
  std::optional<Color> side_to_move_;
};

/// FEN board field, top rank first. Empty runs above 9 are written "[n]".
/// A side-to-move field (" w" / " b") follows when present.
std::string serialize_placement(const Placement& placement);

/// Inverse of serialize_placement; board size is inferred from the ranks.
Placement parse_placement(std::string_view text);

}  // namespace chessspace
