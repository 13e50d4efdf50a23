#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "smashkit/error.hpp"
#include "smashkit/permgrp.hpp"

using namespace smashkit;
using namespace smashkit::perm;

namespace {

Permutation cyc(std::string_view s, std::size_t n) { return Permutation::parse_cycles(s, n); }

Group gen(std::size_t n, std::initializer_list<std::string_view> gens) {
  std::vector<Permutation> v;
  for (auto s : gens) v.push_back(cyc(s, n));
  return Group::from_generators(n, v);
}

// Closure by breadth-first multiplication; independent of the stabilizer chain.
std::set<Permutation> brute_closure(const std::vector<Permutation>& gens, std::size_t n) {
  std::set<Permutation> seen{Permutation(n)};
  std::vector<Permutation> frontier{Permutation(n)};
  while (!frontier.empty()) {
    auto x = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      auto y = x * g;
      if (seen.insert(y).second) frontier.push_back(y);
    }
  }
  return seen;
}

// Heisenberg group over GF(p) acting on itself by right multiplication.
// (a, b, c)(a', b', c') = (a + a', b + b', c + c' + a b'); point = a p^2 + b p + c.
Group heisenberg(std::uint32_t p) {
  const std::size_t n = p * p * p;
  auto right_mult = [&](std::uint32_t a2, std::uint32_t b2, std::uint32_t c2) {
    std::vector<Point> img(n);
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b)
        for (std::uint32_t c = 0; c < p; ++c)
          img[a * p * p + b * p + c] = ((a + a2) % p) * p * p + ((b + b2) % p) * p + (c + c2 + a * b2) % p;
    return Permutation(std::move(img));
  };
  return Group::from_generators(n, {right_mult(1, 0, 0), right_mult(0, 1, 0)});
}

}  // namespace

TEST_CASE("composition applies the left factor first") {
  auto a = cyc("(1 2)", 3);
  auto b = cyc("(2 3)", 3);
  // a sends 0 -> 1, then b sends 1 -> 2.
  CHECK((a * b)(0) == 2);
  // Juxtaposed cycles apply right to left: (1 2)(2 3) applies (2 3) first.
  auto parsed = cyc("(1 2)(2 3)", 3);
  CHECK(parsed == b * a);
  CHECK(parsed.to_cycles() == "(1 2 3)");
}

TEST_CASE("cycle parser") {
  CHECK(cyc("", 4).is_identity());
  CHECK(cyc("()", 4).is_identity());
  CHECK(cyc(" (1 2 3) ( 4 ) ", 4) == Permutation(std::vector<Point>{1, 2, 0, 3}));
  CHECK(cyc("(1 2 3)(4 5)", 5).to_cycles() == "(1 2 3)(4 5)");

  auto offset_of = [](std::string_view s, std::size_t n) -> std::size_t {
    try {
      Permutation::parse_cycles(s, n);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return std::string::npos;
  };
  CHECK(offset_of("(1 2", 3) == 4);
  CHECK(offset_of("(1 4)", 3) == 3);
  CHECK(offset_of("(1 x)", 3) == 3);
  CHECK(offset_of("1 2)", 3) == 0);
  CHECK(offset_of("(1 2 1)", 3) == 5);
  CHECK(offset_of("(0 1)", 3) == 1);
  CHECK(offset_of("(1,2)", 3) == 2);
}

TEST_CASE("group_from_generators") {
  CHECK(gen(3, {"(1 2 3)", "(1 2)"}).order() == 6);
  CHECK(Group::trivial(5).order() == 1);
  CHECK(gen(4, {"(1 2 3 4)", "(1 2)"}).order() == 24);
  CHECK(gen(5, {"(1 2 3 4 5)", "(1 2)"}).order() == 120);
  CHECK(gen(7, {"(1 2 3)", "(3 4 5 6 7)"}).order() == 2520);
  CHECK_THROWS_AS(Group::from_generators(3, {Permutation(4)}), Error);
  try {
    Caps caps;
    caps.order = 100;
    Group::from_generators(5, {cyc("(1 2 3 4 5)", 5), cyc("(1 2)", 5)}, caps);
    FAIL("cap not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
}

TEST_CASE("contains") {
  auto s3 = gen(3, {"(1 2 3)", "(1 2)"});
  auto a3 = gen(3, {"(1 2 3)"});
  CHECK(s3.contains(cyc("(1 2)", 3)));
  CHECK_FALSE(a3.contains(cyc("(1 2)", 3)));
  CHECK(a3.contains(Permutation(3)));
  CHECK_THROWS_AS(a3.contains(Permutation(4)), Error);
}

TEST_CASE("BSGS order agrees with brute-force closure") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 3 + rng() % 5;
    std::vector<Permutation> gens;
    for (int k = 0; k < 2; ++k) {
      std::vector<Point> img(n);
      std::iota(img.begin(), img.end(), Point{0});
      for (std::size_t i = n; i > 1; --i) std::swap(img[i - 1], img[rng() % i]);
      // Keep some generators inside small subgroups.
      if (rng() % 3 == 0) img = Permutation(n).images();
      gens.emplace_back(img);
    }
    auto g = Group::from_generators(n, gens);
    auto brute = brute_closure(gens, n);
    CHECK(g.order() == brute.size());
    auto elems = g.elements();
    CHECK(std::set<Permutation>(elems.begin(), elems.end()) == brute);
    CHECK(elems.front().is_identity());
    for (std::uint64_t i = 0; i < elems.size(); ++i) CHECK(g.rank(elems[i]) == i);
    for (const auto& x : gens) CHECK(g.contains(x));
  }
}

TEST_CASE("enumerate_elements") {
  CHECK(Group::trivial(4).elements() == std::vector<Permutation>{Permutation(4)});
  CHECK(gen(3, {"(1 2 3)", "(1 2)"}).elements().size() == 6);
  Caps caps;
  caps.enumeration = 10;
  auto s4 = Group::from_generators(4, {cyc("(1 2 3 4)", 4), cyc("(1 2)", 4)}, caps);
  CHECK_THROWS_AS(s4.elements(), Error);
}

TEST_CASE("derived subgroup") {
  auto s3 = gen(3, {"(1 2 3)", "(1 2)"});
  auto d = derived_subgroup(s3);
  CHECK(d.order() == 3);
  CHECK(d.is_normal_in(s3));
  CHECK(derived_subgroup(gen(4, {"(1 2 3 4)"})).order() == 1);

  auto s4 = gen(4, {"(1 2 3 4)", "(1 2)"});
  auto a4 = derived_subgroup(s4);
  CHECK(a4.order() == 12);
  auto v4 = derived_subgroup(a4);
  CHECK(v4.order() == 4);
  CHECK(v4.contains(cyc("(1 2)(3 4)", 4)));
  CHECK(v4.contains(cyc("(1 3)(2 4)", 4)));
  CHECK_FALSE(v4.contains(cyc("(1 2 3)", 4)));
  CHECK(v4.is_normal_in(s4));
  auto series = derived_series(s4);
  REQUIRE(series.terms.size() == 4);
  CHECK(series.terms.back().order() == 1);
}

TEST_CASE("lower central series") {
  auto z6 = gen(6, {"(1 2 3 4 5 6)"});
  auto lcs = lower_central_series(z6);
  REQUIRE(lcs.terms.size() == 2);
  CHECK(lcs.terms[1].order() == 1);

  auto heis = heisenberg(7);
  CHECK(heis.order() == 343);
  auto series = lower_central_series(heis);
  std::vector<std::uint64_t> orders;
  for (const auto& t : series.terms) orders.push_back(t.order());
  CHECK(orders == std::vector<std::uint64_t>{343, 7, 1});
  // [N, gamma_i] lies in gamma_{i+1}.
  for (std::size_t i = 0; i + 1 < series.terms.size(); ++i) {
    for (const auto& a : heis.generators())
      for (const auto& b : series.terms[i].generators()) CHECK(series.terms[i + 1].contains(commutator(a, b)));
    CHECK(series.terms[i + 1].is_normal_in(heis));
  }

  try {
    lower_central_series(gen(3, {"(1 2 3)", "(1 2)"}));
    FAIL("S3 accepted as nilpotent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotNilpotent);
  }
}

TEST_CASE("abelian invariants of quotients") {
  auto z6 = gen(6, {"(1 2 3 4 5 6)"});
  CHECK(abelian_invariants_of_quotient(z6, Group::trivial(6)) == std::vector<std::uint64_t>{2, 3});

  auto heis = heisenberg(7);
  auto series = lower_central_series(heis);
  CHECK(abelian_invariants_of_quotient(series.terms[0], series.terms[1]) == std::vector<std::uint64_t>{7, 7});
  CHECK(abelian_invariants_of_quotient(series.terms[1], series.terms[2]) == std::vector<std::uint64_t>{7});

  auto s3 = gen(3, {"(1 2 3)", "(1 2)"});
  CHECK(abelian_invariants_of_quotient(s3, gen(3, {"(1 2 3)"})) == std::vector<std::uint64_t>{2});

  auto z8xz2 = gen(10, {"(1 2 3 4 5 6 7 8)", "(9 10)"});
  CHECK(abelian_invariants_of_quotient(z8xz2, Group::trivial(10)) == std::vector<std::uint64_t>{2, 8});

  try {
    abelian_invariants_of_quotient(s3, gen(3, {"(1 2)"}));
    FAIL("non-normal subgroup accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotNormal);
  }
  try {
    abelian_invariants_of_quotient(s3, Group::trivial(3));
    FAIL("nonabelian quotient accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAbelian);
  }
}

TEST_CASE("orbits and stabilizers") {
  auto a3 = gen(3, {"(1 2 3)"});
  CHECK(orbit(a3, natural_action(), 0) == std::vector<Point>{0, 1, 2});
  CHECK(orbit(Group::trivial(3), natural_action(), 1) == std::vector<Point>{1});

  auto s4 = gen(4, {"(1 2 3 4)", "(1 2)"});
  auto trivial_action = [](Point x, const Permutation&) { return x; };
  CHECK(stabilizer_by_filter(s4, trivial_action, 0).order() == 24);
  CHECK(stabilizer_by_filter(s4, natural_action(), 2).order() == 6);
}

TEST_CASE("orbit-stabilizer on random groups and actions") {
  std::mt19937_64 rng(2024);
  const std::vector<Group> pool = {
      gen(4, {"(1 2 3 4)", "(1 2)"}),
      gen(5, {"(1 2 3 4 5)", "(1 2)(3 4)"}),
      gen(6, {"(1 2 3)", "(4 5)", "(1 4)(2 5)(3 6)"}),
      gen(5, {"(1 2 3 4 5)", "(2 3 5 4)"}),
      heisenberg(3),
  };
  for (int trial = 0; trial < 40; ++trial) {
    const auto& g = pool[rng() % pool.size()];
    const auto elems = g.elements();
    // Conjugation action on element indices.
    Action conj = [&](Point x, const Permutation& s) { return static_cast<Point>(*g.rank(conjugate(elems[x], s))); };
    const Point x = static_cast<Point>(rng() % elems.size());
    const auto orb = orbit(g, conj, x);
    const auto stab = stabilizer_by_filter(g, conj, x);
    CHECK(orb.size() * stab.order() == g.order());
    const Point y = static_cast<Point>(rng() % g.degree());
    CHECK(orbit(g, natural_action(), y).size() * stabilizer_by_filter(g, natural_action(), y).order() == g.order());
  }
}

TEST_CASE("exponent") {
  CHECK(exponent(gen(3, {"(1 2 3)", "(1 2)"})) == 6);
  CHECK(exponent(gen(4, {"(1 2 3 4)"})) == 4);
  auto a5 = gen(5, {"(1 2 3 4 5)", "(1 2 3)"});
  CHECK(a5.order() == 60);
  std::uint64_t e = 1;
  for (const auto& x : brute_closure(a5.generators(), 5)) e = std::lcm(e, x.order());
  CHECK(exponent(a5) == e);
  CHECK(e == 30);
}
