#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "chessspace/bigcount.hpp"
#include "chessspace/board.hpp"
#include "chessspace/errors.hpp"
#include "chessspace/notation.hpp"
#include "chessspace/piece.hpp"

namespace chessspace {

/// Refuse enumeration above this many raw ordered square sequences.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

class BudgetExceeded : public DomainError {
public:
  BudgetExceeded(BigCount raw_sequences, std::uint64_t budget);

  const BigCount& raw_sequences() const noexcept { return raw_sequences_; }
  std::uint64_t budget() const noexcept { return budget_; }

private:
  BigCount raw_sequences_;
  std::uint64_t budget_;
};

/// Walks every distinct placement of a piece set exactly once.
///
/// Each kind (canonical order) takes a combination of the squares left free by
/// the kinds before it. The order is lexicographic over the per-kind sorted
/// square tuples, earlier kinds varying slowest.
///
///   PlacementEnumerator e(board, set);
///   while (e.next()) use(e.squares());
class PlacementEnumerator {
public:
  /// Throws BudgetExceeded when falling_factorial(squares, n) > budget.
  PlacementEnumerator(BoardSpec board, PieceSet set,
                      std::uint64_t budget = kDefaultEnumerationBudget);

  /// Advances to the next placement. False once exhausted.
  bool next();

  /// Current squares, parallel to kinds().
  std::span<const int> squares() const noexcept { return squares_; }
  /// Canonical expansion of the piece set.
  std::span<const PieceKind> kinds() const noexcept { return kinds_; }

  Placement placement(std::optional<Color> side_to_move = std::nullopt) const;

  const BoardSpec& board() const noexcept { return board_; }

private:
  struct Group {
    unsigned size;
    std::size_t offset;          // into squares_
    std::vector<int> available;  // free squares when this group is placed
    std::vector<int> choice;     // indices into available, increasing
  };

  void reset_from(std::size_t group);
  bool advance(Group& g);
  void publish(const Group& g);

  BoardSpec board_;
  std::vector<Group> groups_;
  std::vector<PieceKind> kinds_;
  std::vector<int> squares_;
  bool started_ = false;
  bool done_ = false;
};

/// Collects up to `limit` placements (all when unset).
std::vector<Placement> enumerate_placements(const BoardSpec& board, const PieceSet& set,
                                            std::optional<std::uint64_t> limit = std::nullopt,
                                            std::optional<Color> side_to_move = std::nullopt,
                                            std::uint64_t budget = kDefaultEnumerationBudget);

/// Counts placements by walking them. Independent of multiset_placements.
BigCount count_by_enumeration(const BoardSpec& board, const PieceSet& set,
                              std::uint64_t budget = kDefaultEnumerationBudget);

struct LegalCount {
  BigCount legal;
  BigCount total;
};

/// Exact legal/total counts on the standard board for the given side to move.
/// Throws DomainError for non-chess sets or other boards, BudgetExceeded.
LegalCount count_legal_by_enumeration(const BoardSpec& board, const PieceSet& set,
                                      Color side_to_move,
                                      std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace chessspace
