#pragma once

#include <string>

#include "chessspace/bigcount.hpp"
#include "chessspace/board.hpp"
#include "chessspace/piece.hpp"

namespace chessspace {

/// squares * (squares - 1) * ... * (squares - pieces + 1).
/// 1 when pieces == 0, 0 when pieces > squares.
BigCount falling_factorial(unsigned squares, unsigned pieces);

BigCount factorial(unsigned n);

/// Product of multiplicity! over the set. Collapses orderings of identical pieces.
BigCount multiplicity_divisor(const PieceSet& set);

/// Number of distinct placements of `set` on `board`:
/// falling_factorial(squares, n) / multiplicity_divisor(set).
BigCount multiset_placements(const BoardSpec& board, const PieceSet& set);

inline constexpr int kDefaultRatioPrecision = 6;

/// examined / total with exact decimal renderings.
struct Ratio {
  BigCount numerator;
  BigCount denominator;
  int precision;
  std::string rendered;  // numerator / denominator
  std::string percent;   // 100 * numerator / denominator, without the '%' sign
};

/// Throws DomainError when total is zero, std::invalid_argument when precision < 1.
Ratio effort_ratio(const BigCount& examined, const BigCount& total,
                   int precision = kDefaultRatioPrecision);

/// Exact decimal rendering of numerator/denominator rounded to `significant`
/// significant figures, half away from zero. Never uses exponent notation;
/// trailing fractional zeros are dropped. Zero renders as "0".
std::string render_decimal(const BigCount& numerator, const BigCount& denominator,
                           int significant);

}  // namespace chessspace
