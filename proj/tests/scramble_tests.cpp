#include "puzzle/scramble.hpp"

#include "doctest.h"
#include "fixtures.hpp"
#include "puzzle/board.hpp"

using namespace searchlab;
using namespace searchlab::puzzle;

TEST_CASE("a zero-length walk stays at the goal") {
  const ScrambleResult r = scramble(9, 0);
  CHECK(r.state == goal_id());
  CHECK(r.exact_depth == 0);
}

TEST_CASE("one move always lands one step away") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    CHECK(scramble(seed, 1).exact_depth == 1);
  }
}

TEST_CASE("the same seed reproduces the same walk") {
  const ScrambleResult a = scramble(42, 20);
  const ScrambleResult b = scramble(42, 20);
  CHECK(a.state == b.state);
  CHECK(a.exact_depth == b.exact_depth);
}

TEST_CASE("exact depth never exceeds the walk length and matches the oracle") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const ScrambleResult r = scramble(seed, 14);
    CHECK(r.exact_depth <= 14);
    CHECK(r.exact_depth >= 0);
    CHECK(r.exact_depth == testing::base_goal_table().at(r.state));
    // Walk parity is move parity, preserved by every legal move.
    CHECK(r.exact_depth % 2 == 0);
  }
}

TEST_CASE("negative walk lengths are rejected") {
  CHECK(testing::thrown_code([] { scramble(1, -3); }) ==
        core::ErrorCode::kBadArgument);
}
