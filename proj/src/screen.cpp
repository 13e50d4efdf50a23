#include "smashkit/screen.hpp"

#include "smashkit/error.hpp"
#include "smashkit/families.hpp"
#include "smashkit/lingrp.hpp"
#include "smashkit/numth.hpp"
#include "smashkit/wedderburn.hpp"

namespace smashkit::screen {

DegreePattern degree_pattern(std::uint64_t q) {
  if (q < 2 || !numth::prime_power(q)) {
    throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not a prime power");
  }
  std::vector<std::uint64_t> d(q - 1, 1);
  d.push_back(q - 1);
  d.insert(d.end(), q - 1, q);
  DegreePattern p{q, DegreeMultiset(std::move(d)), q * q * q - q};
  if (p.degrees.sum_of_squares() != p.order) {
    throw Error(ErrorCode::Mismatch, "degree pattern does not square-sum to q^3 - q");
  }
  return p;
}

QuotientScan quotient_degree_solutions(std::uint64_t q) {
  degree_pattern(q);
  QuotientScan scan;
  scan.q = q;
  scan.degenerate = q == 2;
  const std::uint64_t order = q * q * q - q;
  for (auto m : numth::divisors(order)) {
    if (m <= 1 || m >= order) continue;
    ++scan.divisors_scanned;
    for (std::uint64_t a = 0; a <= 1; ++a) {
      if (a == 1 && m % (q - 1) != 0) continue;
      for (std::uint64_t s = 0; s <= q - 1; ++s) {
        if (a + s == 0) continue;
        if (s > 0 && m % q != 0) continue;
        const std::uint64_t used = a * (q - 1) * (q - 1) + s * q * q;
        if (used >= m) break;
        const std::uint64_t r = m - used;
        if (r > q - 1 || m % r != 0) continue;
        scan.solutions.push_back({m, r, a, s});
      }
    }
  }
  scan.unique_expected = scan.solutions == std::vector<QuotientSolution>{{q * (q - 1), q - 1, 1, 0}};
  return scan;
}

MersenneVerdict mersenne_condition(std::uint64_t p, unsigned h) {
  if (p == 2 || !numth::is_prime(p)) throw Error(ErrorCode::InvalidArgument, "p must be an odd prime");
  if (h == 0) throw Error(ErrorCode::InvalidArgument, "h must be positive");
  MersenneVerdict v{p, h, numth::ipow(p, h) + 1, false, true};
  v.power_of_two = numth::is_power_of_two(v.value);
  v.consistent = !(h > 1 && v.power_of_two);
  return v;
}

MersenneSweep mersenne_sweep(std::uint64_t limit) {
  MersenneSweep sweep;
  sweep.limit = limit;
  for (std::uint64_t p = 3; p * p <= limit; p += 2) {
    if (!numth::is_prime(p)) continue;
    std::uint64_t ph = p * p;
    for (unsigned h = 2; ph <= limit; ++h, ph *= p) {
      ++sweep.pairs_checked;
      auto v = mersenne_condition(p, h);
      if (!v.consistent) sweep.counterexamples.push_back(v);
    }
  }
  return sweep;
}

const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::Realizable: return "realizable";
    case Verdict::Obstructed: return "obstructed by implemented checks";
    case Verdict::Undecided: return "not obstructed by implemented checks";
  }
  return "unknown";
}

ScreenReport screen_pattern(std::uint64_t q) {
  if (q > kMaxScreenQ) {
    throw Error(ErrorCode::CapExceeded, "screen supports q <= " + std::to_string(kMaxScreenQ));
  }
  ScreenReport rep;
  rep.pattern = degree_pattern(q);
  const std::uint64_t order = rep.pattern.order;
  rep.checks.push_back({"sum_of_squares", rep.pattern.degrees.sum_of_squares() == order,
                        "sum = " + std::to_string(rep.pattern.degrees.sum_of_squares()) + ", q^3 - q = " +
                            std::to_string(order)});
  bool divides = true;
  for (auto d : rep.pattern.degrees.values()) divides = divides && order % d == 0;
  rep.checks.push_back({"degrees_divide_order", divides, "every degree divides " + std::to_string(order)});

  rep.quotient = quotient_degree_solutions(q);
  rep.checks.push_back({"quotient_solutions", rep.quotient.degenerate || rep.quotient.unique_expected,
                        rep.quotient.degenerate
                            ? "degenerate pattern (q - 1 = 1)"
                            : std::to_string(rep.quotient.solutions.size()) + " proper nonabelian solution(s) over " +
                                  std::to_string(rep.quotient.divisors_scanned) + " divisors"});

  // The second derived subgroup would be elementary abelian of order q + 1.
  const auto g2 = numth::prime_power(q + 1);
  rep.conditions.push_back({"g2_elementary_abelian", g2.has_value(),
                            g2 ? std::to_string(q + 1) + " = " + std::to_string(g2->first) + "^" +
                                     std::to_string(g2->second)
                               : std::to_string(q + 1) + " is not a prime power"});

  const auto pp = *numth::prime_power(q);
  if (pp.first == 2) {
    if (g2) {
      // A faithful module of G/G'' of dimension n must contain the degree q - 1 constituent.
      const bool ok = g2->second >= q - 1;
      rep.conditions.push_back({"even_faithful_degree", ok,
                                "need n >= q - 1 where q + 1 = p^n: n = " + std::to_string(g2->second) +
                                    ", q - 1 = " + std::to_string(q - 1)});
    }
  } else {
    const auto mv = mersenne_condition(pp.first, pp.second);
    rep.checks.push_back({"mersenne_lemma", mv.consistent,
                          std::to_string(pp.first) + "^" + std::to_string(pp.second) + " + 1 = " +
                              std::to_string(mv.value) + (mv.power_of_two ? " is" : " is not") + " a power of 2"});
    rep.conditions.push_back({"mersenne", mv.power_of_two,
                              "q + 1 = " + std::to_string(mv.value) +
                                  (mv.power_of_two ? " is a power of 2" : " is not a power of 2")});
    if (mv.power_of_two) {
      unsigned n = 0;
      while ((std::uint64_t{1} << n) < q + 1) ++n;
      if (n >= 3) {
        const std::uint64_t formula = n * ((std::uint64_t{1} << n) - 1);
        std::uint64_t normalizer = formula;
        std::string source = "formula n(2^n - 1)";
        if (n <= 4) {
          normalizer = lin::singer_normalizer_order(n);
          source = "brute force in GL_" + std::to_string(n) + "(2)";
          rep.checks.push_back({"singer_normalizer_order", normalizer == formula,
                                "|N(S)| = " + std::to_string(normalizer) + ", n(2^n - 1) = " + std::to_string(formula)});
        }
        const std::uint64_t need = q * (q - 1);
        rep.conditions.push_back({"singer_normalizer", normalizer >= need,
                                  "|N(S)| = " + std::to_string(normalizer) + " (" + source + ") vs p(p - 1) = " +
                                      std::to_string(need)});
      }
    }
  }

  bool survives = true;
  for (const auto& c : rep.conditions) survives = survives && c.survives;
  if (!survives) {
    rep.verdict = Verdict::Obstructed;
    return rep;
  }
  if (q == 2 || q == 3) {
    const auto g = families::symmetric(q + 1);
    rep.witness = "S" + std::to_string(q + 1);
    rep.witness_degrees =
        wedderburn::group_character_degrees(g, wedderburn::select_prime(perm::exponent(g), g.order()));
    const bool match = rep.witness_degrees == rep.pattern.degrees;
    rep.checks.push_back({"witness_degrees", match, rep.witness + " has degrees " + rep.witness_degrees.to_string()});
    rep.verdict = match ? Verdict::Realizable : Verdict::Undecided;
    return rep;
  }
  rep.verdict = Verdict::Undecided;
  return rep;
}

}  // namespace smashkit::screen
