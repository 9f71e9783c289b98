#include <random>
#include <set>

#include <gtest/gtest.h>

#include "chessspace/enumeration.hpp"
#include "chessspace/errors.hpp"
#include "chessspace/legality.hpp"
#include "chessspace/notation.hpp"
#include "test_util.hpp"

namespace chessspace {
namespace {

constexpr PieceKind kWK{Role::King, Color::White};
constexpr PieceKind kWN{Role::Knight, Color::White};
constexpr PieceKind kBK{Role::King, Color::Black};
constexpr PieceKind kBQ{Role::Queen, Color::Black};
constexpr PieceKind kBR{Role::Rook, Color::Black};

TEST(ParsePieceSet, PaperSets) {
  PieceSet a = parse_piece_set("KNNNNvkq");
  EXPECT_EQ(a, PieceSet{}.add(kWK).add(kWN, 4).add(kBK).add(kBQ));
  EXPECT_EQ(a.total_pieces(), 7u);

  PieceSet b = parse_piece_set("KQRbvkqr");
  EXPECT_EQ(b.total_pieces(), 7u);
  EXPECT_EQ(b.count_of(Role::Bishop, Color::White), 1u);
  EXPECT_EQ(b.count_of(Role::Bishop, Color::Black), 0u);

  PieceSet c = parse_piece_set("KNNNNvKRR");
  EXPECT_EQ(c, PieceSet{}.add(kWK).add(kWN, 4).add(kBK).add(kBR, 2));
  EXPECT_EQ(c.total_pieces(), 8u);
}

TEST(ParsePieceSet, Errors) {
  try {
    parse_piece_set("KXvk");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 1u);
    EXPECT_NE(std::string(e.what()).find("'X'"), std::string::npos);
  }
  EXPECT_THROW(parse_piece_set("KQ"), ParseError);
  EXPECT_THROW(parse_piece_set("KvkVq"), ParseError);
  EXPECT_THROW(parse_piece_set("K vk"), ParseError);
  EXPECT_THROW(parse_piece_set(""), ParseError);
  EXPECT_EQ(parse_piece_set("v"), PieceSet{});
  EXPECT_EQ(parse_piece_set("KV"), PieceSet{}.add(kWK));
}

TEST(FormatPieceSet, Canonical) {
  EXPECT_EQ(format_piece_set(PieceSet{}.add(kWK).add(kWN, 4).add(kBK).add(kBQ)), "KNNNNvkq");
  EXPECT_EQ(format_piece_set(PieceSet{}), "v");
  EXPECT_EQ(format_piece_set(PieceSet{}.add(kWK).add(kWN, 4).add(kBK).add(kBR, 2)), "KNNNNvkrr");
  EXPECT_EQ(format_piece_set(parse_piece_set("vk")), "vk");
  EXPECT_EQ(format_piece_set(parse_piece_set("nkqv")), "KQNv");
}

TEST(FormatPieceSet, RoundTripsRandomSets) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10000; ++trial) {
    PieceSet set = testing::random_set(rng, 24);
    const std::string text = format_piece_set(set);
    ASSERT_EQ(parse_piece_set(text), set) << text;
    EXPECT_EQ(format_piece_set(parse_piece_set(text)), text);
  }
}

TEST(FormatPieceSet, CanonicalizesMixedCase) {
  EXPECT_EQ(format_piece_set(parse_piece_set("kNnNnVKrR")), "KNNNNvkrr");
  EXPECT_EQ(format_piece_set(parse_piece_set("KNNNNVKRR")), "KNNNNvkrr");
}

TEST(ValidateChessSet, Examples) {
  EXPECT_TRUE(validate_chess_set(parse_piece_set("KNNNNvkq")).empty());

  auto kk = validate_chess_set(parse_piece_set("KKvk"));
  ASSERT_EQ(kk.size(), 1u);
  EXPECT_EQ(kk[0], (SetViolation{SetViolationCode::MultipleKings, Color::White}));
  EXPECT_EQ(to_string(kk[0]), "multiple-kings (White)");

  auto q = validate_chess_set(parse_piece_set("Qvk"));
  ASSERT_EQ(q.size(), 1u);
  EXPECT_EQ(q[0], (SetViolation{SetViolationCode::MissingKing, Color::White}));

  auto pawns = validate_chess_set(parse_piece_set("KPPPPPPPPPvk"));
  ASSERT_EQ(pawns.size(), 1u);
  EXPECT_EQ(pawns[0].code, SetViolationCode::TooManyPawns);

  EXPECT_EQ(validate_chess_set(PieceSet{}).size(), 2u);
  EXPECT_THROW(require_chess_set(parse_piece_set("Kv")), DomainError);
}

Placement on8x8(std::vector<Assignment> a, std::optional<Color> stm = std::nullopt) {
  return Placement(BoardSpec::standard(), std::move(a), stm);
}

TEST(SerializePlacement, Examples) {
  EXPECT_EQ(serialize_placement(on8x8({})), "8/8/8/8/8/8/8/8");
  EXPECT_EQ(serialize_placement(on8x8({{1, kWN}, {0, kWK}})), "8/8/8/8/8/8/8/KN6");
  EXPECT_EQ(serialize_placement(on8x8({{0, kWK}, {1, kWN}}, Color::White)), "8/8/8/8/8/8/8/KN6 w");
  EXPECT_EQ(serialize_placement(Placement({1, 1}, {{0, kWK}})), "K");
  EXPECT_EQ(serialize_placement(on8x8({{square_from_name("e1"), kWK}, {square_from_name("e8"), kBK}},
                                      Color::Black)),
            "4k3/8/8/8/8/8/8/4K3 b");
}

TEST(SerializePlacement, BracketedRuns) {
  BoardSpec board(12, 2);
  Placement p(board, {{board.square_at(11, 1), kBK}});
  EXPECT_EQ(serialize_placement(p), "[11]k/[12]");
  EXPECT_EQ(parse_placement("[11]k/[12]"), p);
  EXPECT_EQ(serialize_placement(Placement({16, 1}, {{9, kWK}})), "9K6");
  EXPECT_EQ(serialize_placement(Placement({16, 1}, {{10, kWK}})), "[10]K5");
}

TEST(ParsePlacement, RoundTripsEnumeratedPlacements) {
  for (BoardSpec board : {BoardSpec(3, 2), BoardSpec(1, 5), BoardSpec(11, 1)}) {
    for (Color stm : {Color::White, Color::Black}) {
      for (const auto& p : enumerate_placements(board, parse_piece_set("KNvq"), std::nullopt, stm)) {
        ASSERT_EQ(parse_placement(serialize_placement(p)), p) << serialize_placement(p);
      }
    }
  }
}

TEST(ParsePlacement, Errors) {
  EXPECT_THROW(parse_placement("8/7"), ParseError);
  EXPECT_THROW(parse_placement("8/8 x"), ParseError);
  EXPECT_THROW(parse_placement("7X"), ParseError);
  EXPECT_THROW(parse_placement("[3"), ParseError);
}

TEST(SerializePlacement, InjectiveOnFixedBoard) {
  const BoardSpec board(3, 3);
  const PieceSet set = parse_piece_set("KNNvq");
  std::set<std::string> seen;
  auto all = enumerate_placements(board, set);
  for (const auto& p : all) seen.insert(serialize_placement(p));
  EXPECT_EQ(seen.size(), all.size());
}

TEST(Placement, Invariants) {
  EXPECT_THROW(on8x8({{0, kWK}, {0, kBK}}), std::invalid_argument);
  EXPECT_THROW(on8x8({{64, kWK}}), std::invalid_argument);
  Placement p = on8x8({{9, kBK}, {3, kWK}, {5, kWN}});
  EXPECT_EQ(p.assignments().front().square, 3);
  EXPECT_EQ(p.piece_set(), parse_piece_set("KNvk"));
  EXPECT_EQ(p.at(9), kBK);
  EXPECT_FALSE(p.at(4).has_value());
  EXPECT_EQ(p, on8x8({{3, kWK}, {5, kWN}, {9, kBK}}));
}

}  // namespace
}  // namespace chessspace
