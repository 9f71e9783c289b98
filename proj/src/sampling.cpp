#include "chessspace/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <boost/math/distributions/normal.hpp>

#include "chessspace/counting.hpp"
#include "chessspace/errors.hpp"
#include "chessspace/legality.hpp"

namespace chessspace {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SampleRng SampleRng::for_sample(std::uint64_t seed, std::uint64_t index) {
  return SampleRng(mix64(seed ^ mix64(index + kGolden)));
}

std::uint64_t SampleRng::next() noexcept {
  state_ += kGolden;
  return mix64(state_);
}

// Lemire's multiply-and-reject.
std::uint64_t SampleRng::below(std::uint64_t bound) noexcept {
  unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(next()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

std::vector<int> sample_square_tuple(int squares, int count, SampleRng& rng) {
  if (count < 0 || count > squares) throw std::invalid_argument("tuple longer than the square range");
  std::vector<int> pool(static_cast<std::size_t>(squares));
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < count; ++i) {
    auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(squares - i)));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(count));
  return pool;
}

Placement sample_uniform_placement(const BoardSpec& board, const PieceSet& set, SampleRng& rng) {
  const auto pieces = set.expand();
  if (pieces.size() > static_cast<std::size_t>(board.squares())) {
    throw DomainError(std::to_string(pieces.size()) + " pieces do not fit on a " +
                      board.to_string() + " board");
  }
  auto tuple = sample_square_tuple(board.squares(), static_cast<int>(pieces.size()), rng);
  std::vector<Assignment> assignments;
  assignments.reserve(pieces.size());
  for (std::size_t i = 0; i < pieces.size(); ++i) assignments.push_back({tuple[i], pieces[i]});
  return Placement(board, std::move(assignments));
}

Interval wilson_interval(std::uint64_t hits, std::uint64_t samples, double confidence) {
  if (samples == 0) throw std::invalid_argument("wilson interval needs at least one sample");
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw std::invalid_argument("confidence must lie strictly between 0 and 1");
  }
  const double z = boost::math::quantile(boost::math::normal(), 0.5 + confidence / 2.0);
  const double n = static_cast<double>(samples);
  const double p = static_cast<double>(hits) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  return {std::clamp(std::min(center - half, p), 0.0, 1.0),
          std::clamp(std::max(center + half, p), 0.0, 1.0)};
}

EstimateResult estimate_legal_fraction(const BoardSpec& board, const PieceSet& set,
                                       std::uint64_t samples, std::uint64_t seed,
                                       double confidence, Color side_to_move, unsigned threads) {
  require_chess_set(set);
  if (!board.is_standard()) {
    throw DomainError("legality is only defined on the 8x8 board, got " + board.to_string());
  }
  if (samples == 0) throw std::invalid_argument("samples must be at least 1");
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw std::invalid_argument("confidence must lie strictly between 0 and 1");
  }

  const auto pieces = set.expand();
  const int n = static_cast<int>(pieces.size());
  auto count_range = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t hits = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      SampleRng rng = SampleRng::for_sample(seed, i);
      auto tuple = sample_square_tuple(board.squares(), n, rng);
      if (detail::is_legal_squares(tuple, pieces, side_to_move)) ++hits;
    }
    return hits;
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, (samples + 4095) / 4096));
  std::vector<std::uint64_t> partial(threads, 0);
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      std::uint64_t begin = samples * t / threads;
      std::uint64_t end = samples * (t + 1) / threads;
      workers.emplace_back([&, t, begin, end] { partial[t] = count_range(begin, end); });
    }
  }

  EstimateResult r;
  r.samples = samples;
  r.legal_hits = std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
  r.point_estimate = static_cast<double>(r.legal_hits) / static_cast<double>(samples);
  auto ci = wilson_interval(r.legal_hits, samples, confidence);
  r.ci_low = ci.low;
  r.ci_high = ci.high;
  r.confidence = confidence;
  r.seed = seed;
  r.side_to_move = side_to_move;
  r.total_placements = multiset_placements(board, set);
  r.estimated_legal_count = render_decimal(r.total_placements * r.legal_hits, samples, 4);
  return r;
}

}  // namespace chessspace
