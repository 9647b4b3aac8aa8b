#include <catch2/catch_amalgamated.hpp>

#include <mjstar/factory.hpp>
#include <mjstar/ramsey.hpp>

using namespace mjstar;

TEST_CASE("degree-budget bounds", "[ramsey]") {
  CHECK(upper_bound(3, 3, 3) == 2);
  CHECK(upper_bound(3, 3, 4) == 2);
  CHECK(upper_bound(5, 5, 5) == 2);
  CHECK(lower_bound(3, 3, 3) == 1);
  CHECK(lower_bound(3, 5, 5) == 3);
  CHECK(lower_bound(4, 4, 4) == 2);
  CHECK_THROWS_AS(upper_bound(3, 2, 5), PreconditionError);
  CHECK_THROWS_AS(lower_bound(3, 5, 2), PreconditionError);
  CHECK_THROWS_AS(upper_bound(2, 3, 3), PreconditionError);
}

TEST_CASE("parity blocks the exact-division cell", "[ramsey]") {
  CHECK(special_branch_applies(3, 3, 3));
  CHECK(!special_branch_applies(3, 3, 5));
  CHECK(special_branch_applies(3, 5, 5));
  CHECK(!special_branch_applies(4, 4, 4));
  CHECK(!special_branch_applies(3, 2, 5));
}

TEST_CASE("handshake obstruction needs all three factors odd", "[ramsey]") {
  CHECK(handshake_blocks(Shape{3, 1}, 3));
  CHECK(handshake_blocks(Shape{3, 3}, 5));
  CHECK(!handshake_blocks(Shape{4, 3}, 5));
  CHECK(!handshake_blocks(Shape{3, 2}, 5));
  CHECK(!handshake_blocks(Shape{3, 3}, 4));
}

TEST_CASE("closed form values and branches", "[ramsey]") {
  const RamseyAnswer trivial = size_ramsey(3, 2, 5);
  CHECK(trivial.value == 2);
  CHECK(trivial.branch == Branch::TrivialStar);
  CHECK(trivial.lower == 2);
  CHECK(trivial.upper == 2);

  const RamseyAnswer special = size_ramsey(3, 3, 3);
  CHECK(special.value == 1);
  CHECK(special.branch == Branch::SpecialOddCase);

  const RamseyAnswer special55 = size_ramsey(3, 5, 5);
  CHECK(special55.value == 3);
  CHECK(special55.branch == Branch::SpecialOddCase);
  CHECK(special55.lower == 3);
  CHECK(special55.upper == 4);

  const RamseyAnswer general = size_ramsey(5, 5, 5);
  CHECK(general.value == 2);
  CHECK(general.branch == Branch::General);

  CHECK_THROWS_AS(size_ramsey(2, 3, 3), PreconditionError);
  CHECK_THROWS_AS(size_ramsey(3, 1, 3), PreconditionError);
}

TEST_CASE("the threshold is symmetric in the two stars", "[ramsey]") {
  for (int j = 3; j <= 6; ++j)
    for (int n = 2; n <= 7; ++n)
      for (int m = 2; m <= 7; ++m) {
        const RamseyAnswer a = size_ramsey(j, n, m);
        const RamseyAnswer b = size_ramsey(j, m, n);
        INFO("j=" << j << " n=" << n << " m=" << m);
        CHECK(a.value == b.value);
        CHECK(a.branch == b.branch);
      }
}

TEST_CASE("bounds sandwich the value and collapse off the divisibility grid", "[ramsey]") {
  for (int j = 3; j <= 6; ++j)
    for (int n = 3; n <= 8; ++n)
      for (int m = 3; m <= 8; ++m) {
        const RamseyAnswer a = size_ramsey(j, n, m);
        INFO("j=" << j << " n=" << n << " m=" << m);
        CHECK(a.lower <= a.value);
        CHECK(a.value <= a.upper);
        if ((n + m - 3) % (j - 1) != 0 && (n + m - 4) % (j - 1) != 0) {
          CHECK(a.lower == a.value);
          CHECK(a.value == a.upper);
        }
        if (a.branch == Branch::SpecialOddCase) CHECK(a.value == a.lower);
      }
}

TEST_CASE("goodness is exactly the two degree budgets", "[ramsey]") {
  const TwoColoring all_blue(Shape{3, 1});
  CHECK(coloring_is_good(all_blue, 3, 4));
  CHECK(!coloring_is_good(all_blue, 3, 3));

  const TwoColoring dense = TwoColoring::from_red(regular_subgraph(3, 5, 6));
  CHECK(coloring_is_good(dense, 8, 9));
  CHECK(!coloring_is_good(dense, 7, 9));
  CHECK(!coloring_is_good(dense, 8, 5));
  CHECK_THROWS_AS(coloring_is_good(dense, 1, 9), PreconditionError);
}

TEST_CASE("witness colourings below the threshold", "[ramsey]") {
  const TwoColoring w1 = witness_coloring(Shape{3, 1}, 3, 4);
  CHECK(w1.max_degree(Color::Red) == 0);
  CHECK(w1.max_degree(Color::Blue) == 2);
  CHECK(coloring_is_good(w1, 3, 4));

  const TwoColoring w2 = witness_coloring(Shape{3, 2}, 5, 5);
  CHECK(is_regular(color_subgraph(w2, Color::Red), 3));
  CHECK(is_regular(color_subgraph(w2, Color::Blue), 1));
  CHECK(coloring_is_good(w2, 5, 5));

  CHECK_THROWS_AS(witness_coloring(Shape{3, 2}, 3, 3), ThresholdExceeded);
  CHECK_THROWS_AS(witness_coloring(Shape{3, 1}, 3, 3), ThresholdExceeded);
}

TEST_CASE("witness red degree is capped by the host degree", "[ramsey]") {
  // n-2 exceeds (j-1)s here; the red part is the whole host and blue is empty.
  const TwoColoring w = witness_coloring(Shape{4, 1}, 6, 3);
  CHECK(w.max_degree(Color::Red) == 3);
  CHECK(w.max_degree(Color::Blue) == 0);
  CHECK(coloring_is_good(w, 6, 3));
}

TEST_CASE("every below-threshold shape admits a witness", "[ramsey]") {
  for (int j = 3; j <= 5; ++j)
    for (int n = 3; n <= 6; ++n)
      for (int m = 3; m <= 6; ++m) {
        const RamseyAnswer a = size_ramsey(j, n, m);
        for (int s = 1; s < a.value; ++s) {
          INFO("j=" << j << " n=" << n << " m=" << m << " s=" << s);
          CHECK(coloring_is_good(witness_coloring(Shape{j, s}, n, m), n, m));
        }
      }
}
