#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

#include "hyper/combiners.hpp"

using namespace hyper;

namespace {

// Draws a sorted unique vector, the shape capped-set-union operates on.
std::vector<uint64_t> random_sorted_set(std::mt19937_64& rng, size_t max_len) {
  std::uniform_int_distribution<size_t> len(0, max_len);
  std::uniform_int_distribution<uint64_t> value(0, 40);
  std::vector<uint64_t> out(len(rng));
  for (auto& v : out) v = value(rng);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST_CASE("worked reductions") {
  auto sum = sum_combiner<double>();
  CHECK(sum(sum(3.0, 4.0), 5.0) == 12.0);

  auto mn = min_combiner<double>();
  CHECK(mn(std::numeric_limits<double>::infinity(), 3.0) == 3.0);

  auto mx = max_combiner<uint64_t>();
  CHECK(mx(mx(2, 9), 4) == 9);

  auto psum = pair_sum_combiner<double, double>();
  auto p = psum({1.0, 0.5}, {2.0, 0.25});
  CHECK(p.first == 3.0);
  CHECK(p.second == 0.75);

  auto cat = concat_combiner<int>();
  CHECK(cat({1, 2}, {3}) == std::vector<int>{1, 2, 3});

  auto uni = capped_set_union_combiner<uint64_t>(3);
  CHECK(uni({1, 5, 9}, {2, 5}) == std::vector<uint64_t>{1, 2, 5});
  CHECK(uni({}, {4}) == std::vector<uint64_t>{4});
}

TEST_CASE("sum, min, max and pair-sum are associative and commutative") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> real(-100.0, 100.0);
  std::uniform_int_distribution<uint64_t> integer(0, 1'000'000);

  auto sum = sum_combiner<double>();
  auto mn = min_combiner<double>();
  auto mx = max_combiner<uint64_t>();
  auto psum = pair_sum_combiner<double, double>();

  for (int i = 0; i < 1000; ++i) {
    double a = real(rng), b = real(rng), c = real(rng);
    CHECK(sum(a, b) == sum(b, a));
    CHECK(sum(sum(a, b), c) == doctest::Approx(sum(a, sum(b, c))).epsilon(1e-12));
    CHECK(mn(a, b) == mn(b, a));
    CHECK(mn(mn(a, b), c) == mn(a, mn(b, c)));

    uint64_t x = integer(rng), y = integer(rng), z = integer(rng);
    CHECK(mx(x, y) == mx(y, x));
    CHECK(mx(mx(x, y), z) == mx(x, mx(y, z)));

    std::pair<double, double> pa{a, b}, pb{b, c}, pc{c, a};
    auto lhs = psum(psum(pa, pb), pc);
    auto rhs = psum(pa, psum(pb, pc));
    CHECK(lhs.first == doctest::Approx(rhs.first).epsilon(1e-12));
    CHECK(lhs.second == doctest::Approx(rhs.second).epsilon(1e-12));
    auto fwd = psum(pa, pb);
    auto rev = psum(pb, pa);
    CHECK(fwd.first == rev.first);
    CHECK(fwd.second == rev.second);
  }
}

TEST_CASE("capped set union stays associative and commutative under the cap") {
  std::mt19937_64 rng(21);
  for (size_t cap : {1, 2, 3, 5, 100}) {
    auto uni = capped_set_union_combiner<uint64_t>(cap);
    for (int i = 0; i < 300; ++i) {
      auto a = random_sorted_set(rng, 6);
      auto b = random_sorted_set(rng, 6);
      auto c = random_sorted_set(rng, 6);
      CHECK(uni(a, b) == uni(b, a));
      CHECK(uni(uni(a, b), c) == uni(a, uni(b, c)));
      CHECK(uni(a, b).size() <= cap);
    }
  }
}

TEST_CASE("concatenation is associative but deliberately not commutative") {
  auto cat = concat_combiner<uint64_t>();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    auto a = random_sorted_set(rng, 4);
    auto b = random_sorted_set(rng, 4);
    auto c = random_sorted_set(rng, 4);
    CHECK(cat(cat(a, b), c) == cat(a, cat(b, c)));
  }
  CHECK(cat({1}, {2}) != cat({2}, {1}));
}

TEST_CASE("default combiner registry") {
  static_assert(HasDefaultCombiner<double>);
  static_assert(HasDefaultCombiner<float>);
  static_assert(HasDefaultCombiner<std::pair<double, double>>);
  // Integers have several equally natural reductions, so they are not
  // registered and must be given an explicit combiner.
  static_assert(!HasDefaultCombiner<uint64_t>);
  static_assert(!HasDefaultCombiner<int>);
  struct Custom {};
  static_assert(!HasDefaultCombiner<Custom>);

  CHECK(default_combiner<double>()(1.5, 2.5) == 4.0);
  auto p = default_combiner<std::pair<double, double>>()({1.0, 2.0}, {3.0, 4.0});
  CHECK(p.first == 4.0);
  CHECK(p.second == 6.0);
}
