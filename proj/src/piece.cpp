#include "chessspace/piece.hpp"

#include <cctype>
#include <numeric>

namespace chessspace {

namespace {
constexpr char kRoleLetters[] = "KQRBNP";
}

char PieceKind::letter() const noexcept {
  char c = kRoleLetters[static_cast<int>(role)];
  return color == Color::White ? c : static_cast<char>(std::tolower(c));
}

std::optional<Role> role_from_letter(char c) noexcept {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'K': return Role::King;
    case 'Q': return Role::Queen;
    case 'R': return Role::Rook;
    case 'B': return Role::Bishop;
    case 'N': return Role::Knight;
    case 'P': return Role::Pawn;
    default: return std::nullopt;
  }
}

std::optional<PieceKind> kind_from_fen_letter(char c) noexcept {
  auto role = role_from_letter(c);
  if (!role) return std::nullopt;
  return PieceKind{*role, std::isupper(static_cast<unsigned char>(c)) ? Color::White
                                                                       : Color::Black};
}

const char* to_string(Color c) noexcept { return c == Color::White ? "White" : "Black"; }

PieceSet& PieceSet::add(PieceKind kind, unsigned count) {
  counts_[kind.index()] += count;
  return *this;
}

unsigned PieceSet::total_pieces() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), 0u);
}

std::vector<std::pair<PieceKind, unsigned>> PieceSet::entries() const {
  std::vector<std::pair<PieceKind, unsigned>> out;
  for (int i = 0; i < kKindCount; ++i) {
    if (counts_[i] > 0) out.emplace_back(PieceKind::from_index(i), counts_[i]);
  }
  return out;
}

std::vector<PieceKind> PieceSet::expand() const {
  std::vector<PieceKind> out;
  out.reserve(total_pieces());
  for (int i = 0; i < kKindCount; ++i) out.insert(out.end(), counts_[i], PieceKind::from_index(i));
  return out;
}

bool PieceSet::contains_role(Role role) const noexcept {
  return count_of(role, Color::White) > 0 || count_of(role, Color::Black) > 0;
}

}  // namespace chessspace
