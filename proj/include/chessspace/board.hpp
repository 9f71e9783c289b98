#pragma once

#include <string>
#include <string_view>

namespace chessspace {

inline constexpr int kMaxBoardSide = 16;

/// Rectangular board. Square index = rank * width + file, rank 0 at the bottom.
class BoardSpec {
public:
  /// Throws std::invalid_argument outside 1..kMaxBoardSide on either side.
  BoardSpec(int width, int height);

  static BoardSpec standard() { return {8, 8}; }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int squares() const noexcept { return width_ * height_; }
  bool is_square() const noexcept { return width_ == height_; }
  bool is_standard() const noexcept { return width_ == 8 && height_ == 8; }

  int file_of(int square) const noexcept { return square % width_; }
  int rank_of(int square) const noexcept { return square / width_; }
  int square_at(int file, int rank) const noexcept { return rank * width_ + file; }

  /// "WxH".
  std::string to_string() const;
  /// Parses "WxH" (also "W*H"); throws std::invalid_argument.
  static BoardSpec parse(std::string_view text);

  friend bool operator==(const BoardSpec&, const BoardSpec&) = default;

private:
  int width_;
  int height_;
};

}  // namespace chessspace
