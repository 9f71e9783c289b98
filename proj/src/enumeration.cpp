#include "chessspace/enumeration.hpp"

#include <algorithm>

#include "chessspace/counting.hpp"
#include "chessspace/legality.hpp"

namespace chessspace {

BudgetExceeded::BudgetExceeded(BigCount raw_sequences, std::uint64_t budget)
    : DomainError("enumeration needs " + raw_sequences.str() +
                  " raw square sequences, above the budget of " + std::to_string(budget)),
      raw_sequences_(std::move(raw_sequences)),
      budget_(budget) {}

PlacementEnumerator::PlacementEnumerator(BoardSpec board, PieceSet set, std::uint64_t budget)
    : board_(board), kinds_(set.expand()), squares_(kinds_.size()) {
  BigCount raw = falling_factorial(static_cast<unsigned>(board.squares()), set.total_pieces());
  if (raw > budget) throw BudgetExceeded(raw, budget);

  std::size_t offset = 0;
  for (auto [kind, count] : set.entries()) {
    groups_.push_back({count, offset, {}, {}});
    offset += count;
  }
  if (set.total_pieces() > static_cast<unsigned>(board.squares())) {
    done_ = true;
    return;
  }
  reset_from(0);
}

void PlacementEnumerator::publish(const Group& g) {
  for (unsigned k = 0; k < g.size; ++k) squares_[g.offset + k] = g.available[g.choice[k]];
}

// Re-seeds groups [first, end) with their first combination given the
// choices of the groups before them.
void PlacementEnumerator::reset_from(std::size_t first) {
  if (first >= groups_.size()) return;
  std::vector<char> used(static_cast<std::size_t>(board_.squares()), 0);
  for (std::size_t i = 0; i < first; ++i) {
    const Group& g = groups_[i];
    for (unsigned k = 0; k < g.size; ++k) used[squares_[g.offset + k]] = 1;
  }
  for (std::size_t i = first; i < groups_.size(); ++i) {
    Group& g = groups_[i];
    g.available.clear();
    for (int sq = 0; sq < board_.squares(); ++sq) {
      if (!used[sq]) g.available.push_back(sq);
    }
    g.choice.resize(g.size);
    for (unsigned k = 0; k < g.size; ++k) g.choice[k] = static_cast<int>(k);
    publish(g);
    for (unsigned k = 0; k < g.size; ++k) used[squares_[g.offset + k]] = 1;
  }
}

// Next k-combination of available.size() in lexicographic order.
bool PlacementEnumerator::advance(Group& g) {
  const int n = static_cast<int>(g.available.size());
  const int k = static_cast<int>(g.size);
  int i = k - 1;
  while (i >= 0 && g.choice[i] == n - k + i) --i;
  if (i < 0) return false;
  ++g.choice[i];
  for (int j = i + 1; j < k; ++j) g.choice[j] = g.choice[j - 1] + 1;
  publish(g);
  return true;
}

bool PlacementEnumerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return true;
  }
  for (std::size_t i = groups_.size(); i-- > 0;) {
    if (advance(groups_[i])) {
      reset_from(i + 1);
      return true;
    }
  }
  done_ = true;
  return false;
}

Placement PlacementEnumerator::placement(std::optional<Color> side_to_move) const {
  std::vector<Assignment> assignments;
  assignments.reserve(kinds_.size());
  for (std::size_t i = 0; i < kinds_.size(); ++i) assignments.push_back({squares_[i], kinds_[i]});
  return Placement(board_, std::move(assignments), side_to_move);
}

std::vector<Placement> enumerate_placements(const BoardSpec& board, const PieceSet& set,
                                            std::optional<std::uint64_t> limit,
                                            std::optional<Color> side_to_move,
                                            std::uint64_t budget) {
  PlacementEnumerator walker(board, set, budget);
  std::vector<Placement> out;
  while ((!limit || out.size() < *limit) && walker.next()) {
    out.push_back(walker.placement(side_to_move));
  }
  return out;
}

BigCount count_by_enumeration(const BoardSpec& board, const PieceSet& set, std::uint64_t budget) {
  PlacementEnumerator walker(board, set, budget);
  std::uint64_t count = 0;
  while (walker.next()) ++count;
  return count;
}

LegalCount count_legal_by_enumeration(const BoardSpec& board, const PieceSet& set,
                                      Color side_to_move, std::uint64_t budget) {
  require_chess_set(set);
  if (!board.is_standard()) {
    throw DomainError("legality is only defined on the 8x8 board, got " + board.to_string());
  }
  PlacementEnumerator walker(board, set, budget);
  std::uint64_t legal = 0;
  std::uint64_t total = 0;
  while (walker.next()) {
    ++total;
    if (detail::is_legal_squares(walker.squares(), walker.kinds(), side_to_move)) ++legal;
  }
  return {legal, total};
}

}  // namespace chessspace
