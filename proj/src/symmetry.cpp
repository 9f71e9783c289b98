#include "chessspace/symmetry.hpp"

#include <map>
#include <stdexcept>

#include "chessspace/errors.hpp"

namespace chessspace {

const char* to_string(GroupId id) noexcept {
  switch (id) {
    case GroupId::Identity: return "id";
    case GroupId::R180: return "r180";
    case GroupId::C4: return "c4";
    case GroupId::D4: return "d4";
  }
  return "unknown";
}

GroupId parse_group_id(std::string_view text) {
  if (text == "id" || text == "identity") return GroupId::Identity;
  if (text == "r180") return GroupId::R180;
  if (text == "c4") return GroupId::C4;
  if (text == "d4") return GroupId::D4;
  throw std::invalid_argument("unknown symmetry group '" + std::string(text) +
                              "' (expected id, r180, c4 or d4)");
}

GroupId default_group(const BoardSpec& board) noexcept {
  return board.is_square() ? GroupId::C4 : GroupId::R180;
}

namespace {

template <typename Map>
SquarePermutation make_permutation(const BoardSpec& board, Map map) {
  SquarePermutation perm(static_cast<std::size_t>(board.squares()));
  for (int sq = 0; sq < board.squares(); ++sq) {
    auto [f, r] = map(board.file_of(sq), board.rank_of(sq));
    perm[sq] = board.square_at(f, r);
  }
  return perm;
}

}  // namespace

SymmetryGroup board_symmetries(const BoardSpec& board, GroupId id) {
  if ((id == GroupId::C4 || id == GroupId::D4) && !board.is_square()) {
    throw DomainError(std::string("group ") + to_string(id) + " needs a square board, got " +
                      board.to_string());
  }
  const int w = board.width();
  const int h = board.height();
  SymmetryGroup group{id, board, {}, {}};
  auto add = [&](const char* name, auto map) {
    group.names.emplace_back(name);
    group.elements.push_back(make_permutation(board, map));
  };

  add("id", [](int f, int r) { return std::pair{f, r}; });
  if (id == GroupId::Identity) return group;
  add("r180", [=](int f, int r) { return std::pair{w - 1 - f, h - 1 - r}; });
  if (id == GroupId::R180) return group;
  add("r90", [=](int f, int r) { return std::pair{w - 1 - r, f}; });
  add("r270", [=](int f, int r) { return std::pair{r, h - 1 - f}; });
  if (id == GroupId::C4) return group;
  add("mirror-h", [=](int f, int r) { return std::pair{f, h - 1 - r}; });
  add("mirror-v", [=](int f, int r) { return std::pair{w - 1 - f, r}; });
  add("diag", [](int f, int r) { return std::pair{r, f}; });
  add("anti-diag", [=](int f, int r) { return std::pair{w - 1 - r, h - 1 - f}; });
  return group;
}

CycleStructure cycle_structure(const SquarePermutation& element, const BoardSpec& board) {
  if (element.size() != static_cast<std::size_t>(board.squares())) {
    throw std::invalid_argument("permutation size does not match the board");
  }
  CycleStructure cycles;
  std::vector<char> seen(element.size(), 0);
  for (int start = 0; start < board.squares(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int sq = start; !seen[sq]; sq = element[sq]) {
      seen[sq] = 1;
      cycle.push_back(sq);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

BigCount fixed_placements(const CycleStructure& cycles, const PieceSet& set) {
  using Remaining = std::array<unsigned, kKindCount>;
  std::map<Remaining, BigCount> states{{set.counts(), 1}};
  for (const auto& cycle : cycles) {
    const auto len = static_cast<unsigned>(cycle.size());
    std::map<Remaining, BigCount> next;
    for (const auto& [remaining, ways] : states) {
      next[remaining] += ways;  // cycle left empty
      for (int k = 0; k < kKindCount; ++k) {
        if (remaining[k] < len) continue;
        Remaining after = remaining;
        after[k] -= len;
        next[after] += ways;
      }
    }
    states = std::move(next);
  }
  auto done = states.find(Remaining{});
  return done == states.end() ? BigCount(0) : done->second;
}

BigCount count_classes(const BoardSpec& board, const PieceSet& set, GroupId id) {
  const SymmetryGroup group = board_symmetries(board, id);
  BigCount sum = 0;
  for (const auto& element : group.elements) {
    sum += fixed_placements(cycle_structure(element, board), set);
  }
  BigCount quotient, remainder;
  boost::multiprecision::divide_qr(sum, BigCount(group.order()), quotient, remainder);
  if (remainder != 0) throw std::logic_error("orbit sum is not divisible by the group order");
  return quotient;
}

}  // namespace chessspace
