#include "chessspace/legality.hpp"

#include <array>
#include <stdexcept>

namespace chessspace {

namespace {

constexpr int kSide = 8;

bool on_board(int file, int rank) { return file >= 0 && file < kSide && rank >= 0 && rank < kSide; }

struct Step {
  int df;
  int dr;
};

constexpr std::array<Step, 8> kKingSteps{{{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}}};
constexpr std::array<Step, 8> kKnightSteps{{{1, 2}, {2, 1}, {2, -1}, {1, -2}, {-1, -2}, {-2, -1}, {-2, 1}, {-1, 2}}};
constexpr std::array<Step, 4> kRookRays{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
constexpr std::array<Step, 4> kBishopRays{{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}};

template <std::size_t N>
void add_steps(SquareSet& out, int file, int rank, const std::array<Step, N>& steps) {
  for (auto [df, dr] : steps) {
    if (on_board(file + df, rank + dr)) out.insert((rank + dr) * kSide + file + df);
  }
}

template <std::size_t N>
void add_rays(SquareSet& out, int file, int rank, const std::array<Step, N>& rays,
              SquareSet occupied) {
  for (auto [df, dr] : rays) {
    for (int f = file + df, r = rank + dr; on_board(f, r); f += df, r += dr) {
      out.insert(r * kSide + f);
      if (occupied.contains(r * kSide + f)) break;
    }
  }
}

}  // namespace

int square_from_name(std::string_view name) {
  if (name.size() != 2 || name[0] < 'a' || name[0] > 'h' || name[1] < '1' || name[1] > '8') {
    throw std::invalid_argument("bad square name '" + std::string(name) + "'");
  }
  return (name[1] - '1') * kSide + (name[0] - 'a');
}

SquareSet attacks(int square, PieceKind kind, SquareSet occupied) {
  const int file = square % kSide;
  const int rank = square / kSide;
  SquareSet out;
  switch (kind.role) {
    case Role::King: add_steps(out, file, rank, kKingSteps); break;
    case Role::Knight: add_steps(out, file, rank, kKnightSteps); break;
    case Role::Rook: add_rays(out, file, rank, kRookRays, occupied); break;
    case Role::Bishop: add_rays(out, file, rank, kBishopRays, occupied); break;
    case Role::Queen:
      add_rays(out, file, rank, kRookRays, occupied);
      add_rays(out, file, rank, kBishopRays, occupied);
      break;
    case Role::Pawn: {
      int dr = kind.color == Color::White ? 1 : -1;
      for (int df : {-1, 1}) {
        if (on_board(file + df, rank + dr)) out.insert((rank + dr) * kSide + file + df);
      }
      break;
    }
  }
  return out;
}

const char* to_string(LegalityReason reason) noexcept {
  switch (reason) {
    case LegalityReason::MissingKing: return "missing-king";
    case LegalityReason::MultipleKings: return "multiple-kings";
    case LegalityReason::PawnOnTerminalRank: return "pawn-on-terminal-rank";
    case LegalityReason::OpponentInCheck: return "opponent-in-check";
  }
  return "unknown";
}

namespace {

// Bitmask of violated LegalityReason values.
unsigned violations(std::span<const int> squares, std::span<const PieceKind> pieces,
                    Color side_to_move, bool stop_early) {
  auto bit = [](LegalityReason r) { return 1u << static_cast<unsigned>(r); };
  unsigned mask = 0;
  SquareSet occupied;
  std::array<int, 2> kings{};
  for (std::size_t i = 0; i < squares.size(); ++i) {
    occupied.insert(squares[i]);
    if (pieces[i].role == Role::King) ++kings[static_cast<int>(pieces[i].color)];
    if (pieces[i].role == Role::Pawn) {
      int rank = squares[i] / kSide;
      if (rank == 0 || rank == kSide - 1) mask |= bit(LegalityReason::PawnOnTerminalRank);
    }
  }
  for (int k : kings) {
    if (k == 0) mask |= bit(LegalityReason::MissingKing);
    if (k > 1) mask |= bit(LegalityReason::MultipleKings);
  }
  if (mask && stop_early) return mask;

  const Color defender = opposite(side_to_move);
  SquareSet defender_kings;
  for (std::size_t i = 0; i < squares.size(); ++i) {
    if (pieces[i].role == Role::King && pieces[i].color == defender) defender_kings.insert(squares[i]);
  }
  if (defender_kings.empty()) return mask;
  for (std::size_t i = 0; i < squares.size(); ++i) {
    if (pieces[i].color != side_to_move) continue;
    if (attacks(squares[i], pieces[i], occupied).bits() & defender_kings.bits()) {
      mask |= bit(LegalityReason::OpponentInCheck);
      break;
    }
  }
  return mask;
}

}  // namespace

LegalityVerdict is_legal(const Placement& placement) {
  if (!placement.board().is_standard()) {
    throw std::invalid_argument("legality is only defined on the 8x8 board");
  }
  if (!placement.side_to_move()) throw std::invalid_argument("legality needs a side to move");

  std::vector<int> squares;
  std::vector<PieceKind> pieces;
  for (const auto& a : placement.assignments()) {
    squares.push_back(a.square);
    pieces.push_back(a.kind);
  }
  unsigned mask = violations(squares, pieces, *placement.side_to_move(), false);

  LegalityVerdict verdict;
  for (auto r : {LegalityReason::MissingKing, LegalityReason::MultipleKings,
                 LegalityReason::PawnOnTerminalRank, LegalityReason::OpponentInCheck}) {
    if (mask & (1u << static_cast<unsigned>(r))) verdict.reasons.push_back(r);
  }
  verdict.legal = verdict.reasons.empty();
  return verdict;
}

namespace detail {

bool is_legal_squares(std::span<const int> squares, std::span<const PieceKind> pieces,
                      Color side_to_move) {
  return violations(squares, pieces, side_to_move, true) == 0;
}

}  // namespace detail

}  // namespace chessspace
