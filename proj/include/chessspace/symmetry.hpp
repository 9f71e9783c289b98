#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chessspace/bigcount.hpp"
#include "chessspace/board.hpp"
#include "chessspace/piece.hpp"

namespace chessspace {

enum class GroupId { Identity, R180, C4, D4 };

const char* to_string(GroupId id) noexcept;
/// "id" / "identity", "r180", "c4", "d4". Throws std::invalid_argument.
GroupId parse_group_id(std::string_view text);

/// c4 for square boards, r180 otherwise.
GroupId default_group(const BoardSpec& board) noexcept;

/// perm[s] is the image of square s.
using SquarePermutation = std::vector<int>;

struct SymmetryGroup {
  GroupId id;
  BoardSpec board;
  std::vector<std::string> names;          // "id", "r90", "mirror-h", ...
  std::vector<SquarePermutation> elements;

  std::size_t order() const noexcept { return elements.size(); }
};

/// Throws DomainError for c4/d4 on a non-square board.
SymmetryGroup board_symmetries(const BoardSpec& board, GroupId id);

/// Disjoint cycles of a permutation; together they cover every square.
using CycleStructure = std::vector<std::vector<int>>;

CycleStructure cycle_structure(const SquarePermutation& element, const BoardSpec& board);

/// Placements left unchanged by a permutation with these cycles: every cycle
/// is empty or filled with a single kind.
BigCount fixed_placements(const CycleStructure& cycles, const PieceSet& set);

/// Orbits of placements under the group (Burnside average).
BigCount count_classes(const BoardSpec& board, const PieceSet& set, GroupId id);

}  // namespace chessspace
