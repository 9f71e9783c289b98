#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "chessspace/notation.hpp"
#include "chessspace/piece.hpp"

namespace chessspace {

/// Set of squares on the standard 8x8 board, bit i = square i (a1 = 0, h8 = 63).
class SquareSet {
public:
  constexpr SquareSet() = default;
  constexpr explicit SquareSet(std::uint64_t bits) : bits_(bits) {}

  static SquareSet of(std::initializer_list<int> squares) {
    SquareSet s;
    for (int sq : squares) s.insert(sq);
    return s;
  }

  constexpr bool contains(int sq) const noexcept { return (bits_ >> sq) & 1u; }
  constexpr void insert(int sq) noexcept { bits_ |= std::uint64_t{1} << sq; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::uint64_t bits() const noexcept { return bits_; }

  friend constexpr bool operator==(SquareSet, SquareSet) = default;

private:
  std::uint64_t bits_ = 0;
};

/// "e4" -> 28. Throws std::invalid_argument.
int square_from_name(std::string_view name);

/// Squares attacked by `kind` standing on `square`. Sliders stop at the first
/// occupied square, which is included.
SquareSet attacks(int square, PieceKind kind, SquareSet occupied);

enum class LegalityReason { MissingKing, MultipleKings, PawnOnTerminalRank, OpponentInCheck };

const char* to_string(LegalityReason reason) noexcept;

struct LegalityVerdict {
  bool legal = true;
  std::vector<LegalityReason> reasons;  // each violated rule once, enum order
};

/// Static legality on the standard board: one king per color, no pawn on the
/// first or last rank, and the side not to move is not in check.
/// Throws std::invalid_argument when the board is not 8x8 or side to move is unset.
LegalityVerdict is_legal(const Placement& placement);

namespace detail {

/// Fast path over a mailbox; `pieces` is parallel to `squares`.
bool is_legal_squares(std::span<const int> squares, std::span<const PieceKind> pieces,
                      Color side_to_move);

}  // namespace detail

}  // namespace chessspace
