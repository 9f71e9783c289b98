#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chessspace {

enum class Color : std::uint8_t { White, Black };
enum class Role : std::uint8_t { King, Queen, Rook, Bishop, Knight, Pawn };

inline constexpr int kRoleCount = 6;
inline constexpr int kKindCount = 12;

constexpr Color opposite(Color c) noexcept {
  return c == Color::White ? Color::Black : Color::White;
}

/// Piece role with color. Ordering is the canonical one:
/// White before Black, then K, Q, R, B, N, P.
struct PieceKind {
  Role role;
  Color color;

  constexpr int index() const noexcept {
    return static_cast<int>(color) * kRoleCount + static_cast<int>(role);
  }
  static constexpr PieceKind from_index(int index) noexcept {
    return {static_cast<Role>(index % kRoleCount), static_cast<Color>(index / kRoleCount)};
  }

  /// FEN letter: uppercase White, lowercase Black.
  char letter() const noexcept;

  friend constexpr bool operator==(PieceKind a, PieceKind b) noexcept {
    return a.index() == b.index();
  }
  friend constexpr std::strong_ordering operator<=>(PieceKind a, PieceKind b) noexcept {
    return a.index() <=> b.index();
  }
};

/// Role for a letter in {K,Q,R,B,N,P}, either case.
std::optional<Role> role_from_letter(char c) noexcept;
/// Kind for a FEN letter; case selects color.
std::optional<PieceKind> kind_from_fen_letter(char c) noexcept;

const char* to_string(Color c) noexcept;

/// Multiset of piece kinds. Kinds with multiplicity zero are absent.
class PieceSet {
public:
  PieceSet() = default;

  /// Adds `count` copies of `kind`.
  PieceSet& add(PieceKind kind, unsigned count = 1);

  unsigned multiplicity(PieceKind kind) const noexcept { return counts_[kind.index()]; }
  unsigned total_pieces() const noexcept;
  bool empty() const noexcept { return total_pieces() == 0; }

  /// Present kinds with multiplicities, canonical order.
  std::vector<std::pair<PieceKind, unsigned>> entries() const;
  /// Each kind repeated by its multiplicity, canonical order.
  std::vector<PieceKind> expand() const;

  unsigned count_of(Role role, Color color) const noexcept {
    return multiplicity({role, color});
  }
  bool contains_role(Role role) const noexcept;

  const std::array<unsigned, kKindCount>& counts() const noexcept { return counts_; }

  friend bool operator==(const PieceSet&, const PieceSet&) = default;

private:
  std::array<unsigned, kKindCount> counts_{};
};

}  // namespace chessspace
