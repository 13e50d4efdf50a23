#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "smashkit/check.hpp"
#include "smashkit/degrees.hpp"

namespace smashkit::screen {

inline constexpr std::uint64_t kMaxScreenQ = 64;

/// {1 x (q-1), q-1, q x (q-1)} with target order q^3 - q.
struct DegreePattern {
  std::uint64_t q = 0;
  DegreeMultiset degrees;
  std::uint64_t order = 0;
};

/// Throws InvalidArgument unless q >= 2 is a prime power, and Mismatch if
/// the squares do not add up to q^3 - q.
DegreePattern degree_pattern(std::uint64_t q);

/// A candidate degree set of a quotient of order m: r linear degrees, a
/// degrees equal to q - 1 and s degrees equal to q.
struct QuotientSolution {
  std::uint64_t m = 0, r = 0, a = 0, s = 0;
  friend bool operator==(const QuotientSolution&, const QuotientSolution&) = default;
};

struct QuotientScan {
  std::uint64_t q = 0;
  bool degenerate = false;  ///< q = 2: the degrees 1 and q - 1 coincide
  std::size_t divisors_scanned = 0;
  std::vector<QuotientSolution> solutions;  ///< nonabelian, 1 < m < q^3 - q
  /// solutions == {(q(q-1), q-1, 1, 0)}
  bool unique_expected = false;
};

/// Enumerates proper nonabelian quotient degree sets. Domain: divisors m of
/// q^3 - q with 1 < m < q^3 - q; r + a (q-1)^2 + s q^2 = m with
/// 1 <= r <= q-1, r | m, a in {0, 1}, 0 <= s <= q-1, a + s >= 1,
/// (q-1) | m when a = 1 and q | m when s >= 1.
QuotientScan quotient_degree_solutions(std::uint64_t q);

struct MersenneVerdict {
  std::uint64_t p = 0;
  unsigned h = 0;
  std::uint64_t value = 0;  ///< p^h + 1
  bool power_of_two = false;
  /// false only if h > 1 and p^h + 1 is a power of two
  bool consistent = true;
};

/// Throws InvalidArgument for p = 2 or p not prime.
MersenneVerdict mersenne_condition(std::uint64_t p, unsigned h);

struct MersenneSweep {
  std::uint64_t limit = 0;
  std::size_t pairs_checked = 0;  ///< (p, h) with h > 1 and p^h <= limit
  std::vector<MersenneVerdict> counterexamples;
};

MersenneSweep mersenne_sweep(std::uint64_t limit = 1'000'000);

/// A necessary condition on a group with the pattern's degrees. survives =
/// false means the pattern is excluded.
struct Condition {
  std::string name;
  bool survives = true;
  std::string detail;
};

enum class Verdict { Realizable, Obstructed, Undecided };

const char* verdict_name(Verdict v) noexcept;

struct ScreenReport {
  DegreePattern pattern;
  QuotientScan quotient;
  std::vector<Condition> conditions;
  std::vector<Check> checks;  ///< internal consistency; a failure is a mismatch
  Verdict verdict = Verdict::Undecided;
  std::string witness;
  DegreeMultiset witness_degrees;
};

ScreenReport screen_pattern(std::uint64_t q);

}  // namespace smashkit::screen
