#include "doctest.h"
#include "smashkit/error.hpp"
#include "smashkit/screen.hpp"

using namespace smashkit;
using namespace smashkit::screen;

namespace {

// Unpruned scan over every m < q^3 - q and every (r, a, s) in range.
std::vector<QuotientSolution> naive_solutions(std::uint64_t q) {
  std::vector<QuotientSolution> out;
  const std::uint64_t order = q * q * q - q;
  for (std::uint64_t m = 2; m < order; ++m) {
    if (order % m) continue;
    for (std::uint64_t a = 0; a <= 1; ++a)
      for (std::uint64_t s = 0; s < q; ++s)
        for (std::uint64_t r = 1; r < q; ++r) {
          if (r + a * (q - 1) * (q - 1) + s * q * q != m) continue;
          if (m % r || a + s == 0) continue;
          if (a && m % (q - 1)) continue;
          if (s && m % q) continue;
          out.push_back({m, r, a, s});
        }
  }
  return out;
}

bool is_prime_power(std::uint64_t n) {
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    return n == 1;
  }
  return false;
}

}  // namespace

TEST_CASE("degree pattern") {
  for (std::uint64_t q = 2; q <= 64; ++q) {
    if (!is_prime_power(q)) {
      CHECK_THROWS_AS(degree_pattern(q), Error);
      continue;
    }
    const auto p = degree_pattern(q);
    CHECK(p.degrees.size() == 2 * q - 1);
    CHECK(p.degrees.sum_of_squares() == q * q * q - q);
  }
  CHECK_THROWS_AS(degree_pattern(6), Error);
  CHECK_THROWS_AS(degree_pattern(1), Error);
}

TEST_CASE("quotient degree solutions") {
  const auto s4 = quotient_degree_solutions(4);
  CHECK(s4.solutions == std::vector<QuotientSolution>{{12, 3, 1, 0}});
  CHECK(s4.unique_expected);
  const auto s5 = quotient_degree_solutions(5);
  CHECK(s5.solutions == std::vector<QuotientSolution>{{20, 4, 1, 0}});
  CHECK(quotient_degree_solutions(2).degenerate);
  CHECK_FALSE(quotient_degree_solutions(3).degenerate);

  for (std::uint64_t q = 2; q <= 64; ++q) {
    if (!is_prime_power(q)) continue;
    CAPTURE(q);
    const auto scan = quotient_degree_solutions(q);
    CHECK(scan.solutions == naive_solutions(q));
    if (q >= 4) CHECK(scan.unique_expected);
  }
}

TEST_CASE("Mersenne condition") {
  const auto v31 = mersenne_condition(3, 1);
  CHECK(v31.value == 4);
  CHECK(v31.power_of_two);
  CHECK(v31.consistent);
  const auto v32 = mersenne_condition(3, 2);
  CHECK(v32.value == 10);
  CHECK_FALSE(v32.power_of_two);
  CHECK(mersenne_condition(7, 1).power_of_two);
  CHECK(mersenne_condition(31, 1).power_of_two);
  CHECK_FALSE(mersenne_condition(5, 1).power_of_two);
  CHECK_THROWS_AS(mersenne_condition(2, 3), Error);
  CHECK_THROWS_AS(mersenne_condition(9, 1), Error);

  const auto sweep = mersenne_sweep(1'000'000);
  CHECK(sweep.counterexamples.empty());
  CHECK(sweep.pairs_checked > 200);
  // independent count of odd prime powers p^h, h > 1, below the limit
  constexpr std::uint64_t limit = 1'000'000;
  std::vector<std::uint32_t> spf(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i)
    if (spf[i] == 0)
      for (std::uint64_t j = i; j <= limit; j += i)
        if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
  std::size_t count = 0;
  for (std::uint64_t n = 9; n <= limit; n += 2) {
    const std::uint64_t p = spf[n];
    std::uint64_t m = n;
    while (m % p == 0) m /= p;
    if (m == 1 && n != p) ++count;
  }
  CHECK(sweep.pairs_checked == count);
}

TEST_CASE("screen verdicts") {
  const auto r2 = screen_pattern(2);
  CHECK(r2.verdict == Verdict::Realizable);
  CHECK(r2.witness == "S3");
  CHECK(r2.witness_degrees == DegreeMultiset({1, 1, 2}));
  const auto r3 = screen_pattern(3);
  CHECK(r3.verdict == Verdict::Realizable);
  CHECK(r3.witness_degrees == DegreeMultiset({1, 1, 2, 3, 3}));

  const auto r7 = screen_pattern(7);
  CHECK(r7.verdict == Verdict::Obstructed);
  bool singer = false;
  for (const auto& c : r7.conditions) {
    if (c.name == "singer_normalizer") {
      singer = true;
      CHECK_FALSE(c.survives);
      CHECK(c.detail.find("21") != std::string::npos);
      CHECK(c.detail.find("42") != std::string::npos);
    }
  }
  CHECK(singer);

  for (std::uint64_t q = 2; q <= 64; ++q) {
    if (!is_prime_power(q)) {
      CHECK_THROWS_AS(screen_pattern(q), Error);
      continue;
    }
    CAPTURE(q);
    const auto r = screen_pattern(q);
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CHECK(c.pass);
    }
    CHECK((r.verdict == Verdict::Realizable) == (q == 2 || q == 3));
    CHECK((r.verdict == Verdict::Obstructed) == (q > 3));
  }
  CHECK_THROWS_AS(screen_pattern(67), Error);
}
