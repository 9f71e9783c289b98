#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chessspace/bigcount.hpp"
#include "chessspace/board.hpp"
#include "chessspace/notation.hpp"
#include "chessspace/piece.hpp"

namespace chessspace {

inline constexpr std::string_view kRngAlgorithm = "splitmix64-counter/v1";

/// SplitMix64 stream. Sample i of a run with seed s starts from
/// mix64(s ^ mix64(i + 0x9e3779b97f4a7c15)), so any sample can be
/// regenerated without replaying the ones before it.
class SampleRng {
public:
  explicit SampleRng(std::uint64_t state) : state_(state) {}

  static SampleRng for_sample(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next() noexcept;
  /// Unbiased draw from [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) noexcept;

private:
  std::uint64_t state_;
};

std::uint64_t mix64(std::uint64_t z) noexcept;

/// First `count` entries of a partial Fisher-Yates shuffle of 0..squares-1:
/// a uniformly random ordered tuple of distinct squares.
std::vector<int> sample_square_tuple(int squares, int count, SampleRng& rng);

/// Uniform over the distinct placements of `set`. Throws DomainError when the
/// set does not fit on the board.
Placement sample_uniform_placement(const BoardSpec& board, const PieceSet& set,
                                   SampleRng& rng);

struct Interval {
  double low;
  double high;
};

/// Wilson score interval for hits/samples at two-sided `confidence`.
Interval wilson_interval(std::uint64_t hits, std::uint64_t samples, double confidence);

struct EstimateResult {
  std::uint64_t samples = 0;
  std::uint64_t legal_hits = 0;
  double point_estimate = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double confidence = 0.0;
  std::uint64_t seed = 0;
  Color side_to_move = Color::White;
  BigCount total_placements;
  std::string estimated_legal_count;  // point_estimate * total, 4 significant figures
};

inline constexpr double kDefaultConfidence = 0.95;

/// Monte Carlo estimate of the legal fraction. `threads` = 0 uses the hardware
/// concurrency; the result does not depend on it.
/// Throws DomainError for non-chess sets or non-standard boards and
/// std::invalid_argument for zero samples or confidence outside (0,1).
EstimateResult estimate_legal_fraction(const BoardSpec& board, const PieceSet& set,
                                       std::uint64_t samples, std::uint64_t seed,
                                       double confidence, Color side_to_move,
                                       unsigned threads = 0);

}  // namespace chessspace
