#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include <mjstar/cyclic.hpp>

using namespace mjstar;

TEST_CASE("rotation wraps around the window", "[cyclic]") {
  CHECK(sigma_plus(1, 5, 4) == 0);
  CHECK(sigma_minus(1, 5, 0) == 4);
  CHECK(sigma_plus(2, 7, 6) == 1);
  CHECK(sigma_minus(2, 7, 6) == 4);
  CHECK(sigma_plus(3, 4, 2) == 1);
}

TEST_CASE("rotations are mutually inverse", "[cyclic]") {
  for (int w = 2; w <= 9; ++w)
    for (int c = 1; c < w; ++c)
      for (int i = 0; i < w; ++i) {
        CHECK(sigma_minus(c, w, sigma_plus(c, w, i)) == i);
        CHECK(sigma_plus(c, w, sigma_minus(c, w, i)) == i);
      }
}

TEST_CASE("offset pair, including the antipodal singleton", "[cyclic]") {
  CHECK(sigma(1, 5, 0) == std::vector<int>{1, 4});
  CHECK(sigma(2, 4, 0) == std::vector<int>{2});
  CHECK(sigma(2, 7, 6) == std::vector<int>{1, 4});

  for (int w = 2; w <= 12; ++w)
    for (int c = 1; c < w; ++c)
      for (int i = 0; i < w; ++i) {
        const auto pair = sigma(c, w, i);
        CHECK(pair.size() == (2 * c == w ? 1u : 2u));
        CHECK(std::is_sorted(pair.begin(), pair.end()));
        for (int x = 0; x < w; ++x)
          CHECK(in_sigma(c, w, i, x) ==
                (std::find(pair.begin(), pair.end(), x) != pair.end()));
      }
}

TEST_CASE("ball examples", "[cyclic]") {
  CHECK(ball(0, 7, 3).empty());
  CHECK(ball(2, 7, 6) == std::vector<int>{0, 1, 4, 5});
  CHECK(ball(2, 5, 0) == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("ball size, symmetry, self-exclusion and shift-equivariance", "[cyclic]") {
  for (int w = 2; w <= 12; ++w)
    for (int k = 0; k <= w - 1; ++k)
      for (int i = 0; i < w; ++i) {
        const auto b = ball(k, w, i);
        CHECK(static_cast<int>(b.size()) == std::min(2 * k, w - 1));
        CHECK(!in_ball(k, w, i, i));
        for (int x = 0; x < w; ++x) {
          CHECK(in_ball(k, w, i, x) == in_ball(k, w, x, i));
          for (int t = 0; t < w; ++t)
            CHECK(in_ball(k, w, (i + t) % w, (x + t) % w) == in_ball(k, w, i, x));
        }
      }
}

TEST_CASE("ball is the union of the offset pairs", "[cyclic]") {
  for (int w = 2; w <= 10; ++w)
    for (int k = 1; k <= w - 1; ++k)
      for (int i = 0; i < w; ++i)
        for (int x = 0; x < w; ++x) {
          bool in_union = false;
          for (int c = 1; c <= k && !in_union; ++c) in_union = in_sigma(c, w, i, x);
          CHECK(in_ball(k, w, i, x) == in_union);
        }
}

TEST_CASE("cyclic preconditions are enforced", "[cyclic]") {
  CHECK_THROWS_AS(sigma_plus(0, 5, 0), PreconditionError);
  CHECK_THROWS_AS(sigma_plus(5, 5, 0), PreconditionError);
  CHECK_THROWS_AS(sigma_minus(1, 5, 5), PreconditionError);
  CHECK_THROWS_AS(sigma(1, 0, 0), PreconditionError);
  CHECK_THROWS_AS(in_sigma(1, 5, 0, -1), PreconditionError);
  CHECK_THROWS_AS(in_ball(-1, 5, 0, 1), PreconditionError);
  CHECK_THROWS_AS(in_ball(5, 5, 0, 1), PreconditionError);
  CHECK_THROWS_AS(ball(3, 3, 0), PreconditionError);
  CHECK_THROWS_AS(CyclicIndex(5, 5), PreconditionError);
  CHECK(CyclicIndex(4, 5) == CyclicIndex(4, 5));
}
