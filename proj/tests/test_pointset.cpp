#include <doctest.h>

#include <stdexcept>

#include "test_support.hpp"

using namespace dyadisc;
using dyadisc::testing::d;
using dyadisc::testing::points_of;
using dyadisc::testing::pt;

TEST_CASE("hammersley_type small cases") {
  // enumerated by hand from the digit formula
  const auto r1 = hammersley_type(1, SignPattern::identity(1));
  CHECK(r1.points() == std::vector<Point>{pt(0, 0, 1), pt(1, 1, 1)});
  CHECK(r1.resolution() == 1);

  const auto r1_flip = hammersley_type(1, SignPattern::all_flip(1));
  CHECK(same_multiset(r1_flip, points_of({pt(0, 1, 1), pt(1, 0, 1)})));

  const auto r2 = hammersley_type(2, SignPattern::identity(2));
  CHECK(same_multiset(r2, points_of({pt(0, 0, 2), pt(2, 1, 2), pt(1, 2, 2), pt(3, 3, 2)})));
}

TEST_CASE("hammersley_type digit placement") {
  // sigma flips only s_1: the top bit of y is inverted, x unchanged
  const SignPattern flip_first(std::vector<bool>{true, false, false});
  const auto plain = hammersley_type(3, SignPattern::identity(3));
  const auto flipped = hammersley_type(3, flip_first);
  for (std::size_t i = 0; i < plain.size(); ++i) {
    CHECK(plain.points()[i].x == flipped.points()[i].x);
    const auto y = plain.points()[i].y;
    const auto expected = y < d(1, 1) ? y + d(1, 1) : y - d(1, 1);
    CHECK(flipped.points()[i].y == expected);
  }
}

TEST_CASE("hammersley_type errors") {
  CHECK_THROWS_AS(hammersley_type(3, SignPattern::identity(2)), std::invalid_argument);
  CHECK_THROWS_AS(hammersley_type(0, SignPattern::identity(1)), std::invalid_argument);
}

TEST_CASE("reflections") {
  CHECK(reflect(points_of({pt(0, 0, 0)}), Axis::Y).points() == std::vector<Point>{pt(0, 1, 0)});
  CHECK(reflect(points_of({pt(2, 1, 2)}), Axis::X).points() == std::vector<Point>{pt(2, 1, 2)});
  CHECK(reflect(points_of({pt(1, 0, 2)}), Axis::XY).points() == std::vector<Point>{pt(3, 4, 2)});
}

TEST_CASE("symmetrize_full") {
  const auto full = symmetrize_full(hammersley_type(1, SignPattern::identity(1)));
  CHECK(full.size() == 8);
  CHECK(same_multiset(full, points_of({pt(0, 0, 0), pt(0, 1, 0), pt(1, 0, 0), pt(1, 1, 0), pt(1, 1, 1),
                                       pt(1, 1, 1), pt(1, 1, 1), pt(1, 1, 1)})));
  CHECK(symmetrize_full(PointMultiset()).empty());
  for (int n = 1; n <= 6; ++n) {
    CHECK(symmetrize_full(hammersley_type(n, SignPattern::alternating(n))).size() == (std::size_t{1} << (n + 2)));
  }
  // generation order: R_n, then the y, x and xy reflections
  const auto r2 = hammersley_type(2, SignPattern::identity(2));
  const auto s2 = symmetrize_full(r2);
  CHECK(s2.points()[4] == reflect(r2, Axis::Y).points()[0]);
  CHECK(s2.points()[8] == reflect(r2, Axis::X).points()[0]);
  CHECK(s2.points()[12] == reflect(r2, Axis::XY).points()[0]);
}

TEST_CASE("symmetrize_davenport") {
  const auto dav = symmetrize_davenport(points_of({pt(0, 0, 1), pt(1, 1, 1)}));
  CHECK(dav.points() == std::vector<Point>{pt(0, 0, 1), pt(1, 1, 1), pt(0, 2, 1), pt(1, 1, 1)});
  CHECK(symmetrize_davenport(PointMultiset()).empty());
  CHECK(symmetrize_davenport(hammersley_type(5, SignPattern::identity(5))).size() == 64);
}

TEST_CASE("is_net") {
  CHECK(is_net(hammersley_type(2, SignPattern::identity(2)), 2));
  CHECK_FALSE(is_net(points_of({pt(0, 0, 1), pt(0, 1, 1), pt(1, 0, 1), pt(1, 1, 1)}), 2));
  CHECK(is_net(hammersley_type(1, SignPattern::identity(1)), 1));
  CHECK(is_net(hammersley_type(1, SignPattern::all_flip(1)), 1));
  CHECK_THROWS_AS(is_net(hammersley_type(2, SignPattern::identity(2)), 3), std::invalid_argument);
}

TEST_CASE("property: every sign pattern yields a net") {
  for (int n = 1; n <= 12; ++n) {
    for (const auto& sigma : dyadisc::testing::all_presets(n)) {
      CHECK(is_net(hammersley_type(n, sigma), n));
    }
  }
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    CHECK(is_net(hammersley_type(7, SignPattern::seeded_random(7, seed)), 7));
  }
}

TEST_CASE("property: reflection structure") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& sigma : dyadisc::testing::all_presets(n)) {
      const auto base = hammersley_type(n, sigma);
      const DyadicRational one(1);
      for (const auto& z : base) {
        CHECK(z.x < one);
        CHECK(z.y < one);
      }
      const auto full = symmetrize_full(base);
      CHECK(full.resolution() == n);
      CHECK(same_multiset(reflect(full, Axis::X), full));
      CHECK(same_multiset(reflect(full, Axis::Y), full));
      CHECK(same_multiset(reflect(full, Axis::XY), full));
      CHECK(reflect(reflect(base, Axis::X), Axis::X).points() == base.points());
      CHECK(reflect(reflect(base, Axis::Y), Axis::Y).points() == base.points());
    }
  }
}

TEST_CASE("presets") {
  CHECK(SignPattern::alternating(4).to_string() == "0101");
  CHECK(SignPattern::all_flip(3).to_string() == "111");
  CHECK(SignPattern::seeded_random(16, 7).to_string() == SignPattern::seeded_random(16, 7).to_string());
  CHECK(SignPattern::seeded_random(32, 7).to_string() != SignPattern::seeded_random(32, 8).to_string());
  CHECK(parse_sign_preset("all-flip") == SignPreset::AllFlip);
  CHECK_THROWS_AS(parse_sign_preset("bogus"), std::invalid_argument);
  CHECK(parse_family("davenport") == Family::Davenport);
}

TEST_CASE("multiset validation") {
  CHECK_THROWS_AS(points_of({pt(3, 1, 1)}), std::invalid_argument);
  CHECK_THROWS_AS(PointMultiset(1, {pt(1, 1, 2)}), std::invalid_argument);
  CHECK(points_of({pt(1, 3, 3)}).resolution() == 3);
}
