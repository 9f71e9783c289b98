#include "chessspace/board.hpp"

#include <charconv>
#include <stdexcept>

namespace chessspace {

BoardSpec::BoardSpec(int width, int height) : width_(width), height_(height) {
  if (width < 1 || width > kMaxBoardSide || height < 1 || height > kMaxBoardSide) {
    throw std::invalid_argument("board dimensions must be within 1.." +
                                std::to_string(kMaxBoardSide) + ", got " +
                                std::to_string(width) + "x" + std::to_string(height));
  }
}

std::string BoardSpec::to_string() const {
  return std::to_string(width_) + "x" + std::to_string(height_);
}

BoardSpec BoardSpec::parse(std::string_view text) {
  auto sep = text.find_first_of("xX*");
  auto bad = [&] {
    return std::invalid_argument("board must be WxH, got '" + std::string(text) + "'");
  };
  if (sep == std::string_view::npos) throw bad();
  auto number = [&](std::string_view part) {
    int value = 0;
    auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc{} || end != part.data() + part.size()) throw bad();
    return value;
  };
  return {number(text.substr(0, sep)), number(text.substr(sep + 1))};
}

}  // namespace chessspace
