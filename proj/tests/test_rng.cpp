#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "graphgen/rng.hpp"

using graphgen::Rng;

TEST_SUITE("rng") {

TEST_CASE("same seed reproduces the stream") {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
  Rng c(43);
  bool differs = false;
  Rng a2(42);
  for (int i = 0; i < 10 && !differs; ++i) differs = a2.next_u64() != c.next_u64();
  CHECK(differs);
}

TEST_CASE("below stays in range") {
  Rng rng(7);
  for (uint64_t bound : {1ull, 2ull, 3ull, 10ull, 1000ull, (1ull << 40) + 17}) {
    for (int i = 0; i < 2000; ++i) {
      uint64_t x = rng.below(bound);
      REQUIRE(x < bound);
    }
  }
  for (int i = 0; i < 100; ++i) CHECK(rng.below(1) == 0);
}

TEST_CASE("below is close to uniform") {
  Rng rng(123);
  const uint64_t bound = 8;
  const int draws = 80000;
  std::vector<int> counts(bound, 0);
  for (int i = 0; i < draws; ++i) ++counts[rng.below(bound)];
  double expect = double(draws) / double(bound);
  double chi2 = 0;
  for (int c : counts) chi2 += (c - expect) * (c - expect) / expect;
  // 7 dof, 0.999 quantile is about 24.3
  CHECK(chi2 < 24.3);
}

TEST_CASE("unit lies in [0,1) and has the right mean") {
  Rng rng(99);
  double sum = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    double u = rng.unit();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(std::abs(sum / n - 0.5) < 0.005);
}

TEST_CASE("mix and hash_str separate nearby inputs") {
  std::set<uint64_t> seen;
  for (uint64_t i = 0; i < 1000; ++i) seen.insert(Rng::mix(i));
  CHECK(seen.size() == 1000);
  CHECK(Rng::hash_str("ff") != Rng::hash_str("dfs"));
  CHECK(Rng::hash_str("") != Rng::hash_str("a"));
  CHECK(Rng::hash_combine(1, 2) != Rng::hash_combine(2, 1));
}

TEST_CASE("shuffle permutes and is seed-stable") {
  std::vector<int> v{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  Rng rng(5);
  rng.shuffle(v.data(), v.size());
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  std::vector<int> w{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  Rng rng2(5);
  rng2.shuffle(w.data(), w.size());
  CHECK(v == w);
}

}  // TEST_SUITE
