// One line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "smashkit/bismash.hpp"
#include "smashkit/commands.hpp"
#include "smashkit/error.hpp"
#include "smashkit/families.hpp"
#include "smashkit/lingrp.hpp"
#include "smashkit/numth.hpp"
#include "smashkit/screen.hpp"
#include "smashkit/wedderburn.hpp"

using namespace smashkit;
using namespace smashkit::bismash;
using perm::Group;
using perm::Permutation;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// Every multiset produced during the run, with the dimension it should square-sum to.
std::vector<std::pair<DegreeMultiset, std::uint64_t>> g_emitted;

DegreeMultiset record(DegreeMultiset d, std::uint64_t dim) {
  g_emitted.emplace_back(d, dim);
  return d;
}

Group gen(std::size_t n, std::initializer_list<const char*> gens) {
  std::vector<Permutation> v;
  for (auto s : gens) v.push_back(Permutation::parse_cycles(s, n));
  return Group::from_generators(n, v);
}

DegreeMultiset ms(std::vector<std::uint64_t> v) { return DegreeMultiset(std::move(v)); }

DegreeMultiset repeat(const DegreeMultiset& d, std::size_t times) {
  DegreeMultiset out;
  for (std::size_t i = 0; i < times; ++i) out = out.merged(d);
  return out;
}

FactorizedGroup pgl_fg(std::uint64_t q) {
  auto pkg = lin::build_pgl2(q);
  return FactorizedGroup::create(pkg.G, pkg.C, pkg.S);
}

DegreeMultiset kmm(const FactorizedGroup& fg) { return record(kmm_dimensions(fg).dims, fg.G().order()); }

DegreeMultiset oracle(const FactorizedGroup& fg) {
  const MutualActions act(fg);
  const auto a = build_algebra(fg, act, oracle_prime(fg));
  return record(wedderburn::decompose(a).degrees, a.dim());
}

std::string str(std::uint64_t v) { return std::to_string(v); }

Outcome criterion1() {
  Outcome o;
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    const auto got = kmm(pgl_fg(q));
    if (got != pgl2_formula(q)) o.fail("q=" + str(q) + " got " + got.to_string());
  }
  if (o.pass) o.detail = "q in {2,3,4,5,7,8,9}";
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::size_t groups = 0;
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const auto fg = pgl_fg(q);
    const auto a = oracle(fg), b = kmm(fg);
    ++groups;
    if (a != b) o.fail("PGL2(" + str(q) + "): " + a.to_string() + " vs " + b.to_string());
  }
  std::size_t pool = 0;
  for (std::uint64_t seed : {0, 1}) {
    for (const auto& t : families::random_pool(seed)) {
      if (t.G.order() > 200) continue;
      const auto fg = FactorizedGroup::create(t.G, t.L, t.F);
      const auto a = oracle(fg), b = kmm(fg);
      ++pool;
      if (a != b) o.fail(t.name + " seed " + str(seed) + ": " + a.to_string() + " vs " + b.to_string());
    }
  }
  if (pool < 5) o.fail("only " + str(pool) + " pool groups");
  if (o.pass) o.detail = str(groups) + " PGL2 packages, " + str(pool) + " pool triples";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto s3 = families::symmetric(3), s4 = families::symmetric(4);
  const auto p3 = wedderburn::select_prime(perm::exponent(s3), s3.order());
  const auto p4 = wedderburn::select_prime(perm::exponent(s4), s4.order());
  const auto d3 = record(wedderburn::group_character_degrees(s3, p3), 6);
  const auto d4 = record(wedderburn::group_character_degrees(s4, p4), 24);
  if (d3 != ms({1, 1, 2})) o.fail("S3 over GF(" + str(p3) + "): " + d3.to_string());
  if (d4 != ms({1, 1, 2, 3, 3})) o.fail("S4 over GF(" + str(p4) + "): " + d4.to_string());
  if (d3 != pgl2_formula(2) || d4 != pgl2_formula(3)) o.fail("group algebras differ from the q = 2, 3 pattern");
  if (o.pass) o.detail = "S3 " + d3.to_string() + " over GF(" + str(p3) + "), S4 " + d4.to_string() + " over GF(" + str(p4) + ")";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::size_t checks = 0;
  for (std::uint64_t q : {2, 3}) {
    const auto fg = pgl_fg(q);
    const MutualActions act(fg);
    const auto r = check_hopf_axioms(build_algebra(fg, act, oracle_prime(fg)), HopfMaps(fg, act));
    checks += r.checks;
    if (!r.all())
      o.fail("q=" + str(q) + " failures: mult " + str(r.coproduct_multiplicative_failures) + ", counit " +
             str(r.counit_failures) + ", antipode " + str(r.antipode_failures));
  }
  if (o.pass) o.detail = str(checks) + " identities, 0 failures";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t count = 0;
  for (std::uint64_t q = 2; q <= 16; ++q) {
    if (!numth::prime_power(q)) continue;
    const auto pkg = lin::build_pgl2(q);
    const auto fg = FactorizedGroup::create(pkg.G, pkg.C, pkg.S);
    const auto r = singer_lemmas(pkg, fg, MutualActions(fg));
    ++count;
    if (r.orbit_size != q || !r.transitive_on_c_sharp) o.fail("q=" + str(q) + " not transitive on C#");
    if (r.stabilizer_order != q - 1) o.fail("q=" + str(q) + " |Stab| = " + str(r.stabilizer_order));
    if (!r.stabilizer_cyclic) o.fail("q=" + str(q) + " stabilizer not cyclic");
  }
  if (o.pass) o.detail = str(count) + " prime powers q <= 16";
  return o;
}

Outcome criterion6() {
  Outcome o;
  struct Case {
    const char* name;
    Group g, h, n;
  };
  const auto agl5 = families::agl1(5);
  const std::vector<Case> cases{
      {"S3", families::symmetric(3), gen(3, {"(1 2)"}), gen(3, {"(1 2 3)"})},
      {"D4", gen(4, {"(1 2 3 4)", "(2 4)"}), gen(4, {"(2 4)"}), gen(4, {"(1 2 3 4)"})},
      {"AGL(1,5)", agl5.G, agl5.H, agl5.N},
  };
  for (const auto& c : cases) {
    const auto fg = FactorizedGroup::create(c.g, c.h, c.n);
    const auto expected = repeat(wedderburn::group_character_degrees(c.n, oracle_prime(fg)), c.h.order());
    const auto got = kmm(fg);
    if (got != expected) o.fail(std::string(c.name) + ": " + got.to_string() + " vs " + expected.to_string());
  }
  if (o.pass) o.detail = "S3, D4, AGL(1,5)";
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::vector<families::FrobeniusGroup> groups{families::agl1(5), families::agl1(7), families::agl1(8),
                                               families::heis7_z3()};
  std::string summary;
  for (const auto& f : groups) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = frobenius_bismash_report(f.G, f.N, f.H);
    record(r.kmm.dims, f.G.order());
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!r.multiset_match) o.fail(f.name + ": multiset " + r.kmm.dims.to_string() + " vs " + r.predicted.to_string());
    if (!r.n_star_order_match) o.fail(f.name + ": |N*| = " + str(r.n_star_order));
    if (s > 120) o.fail(f.name + " took " + std::to_string(s) + " s");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%s %.2fs", summary.empty() ? "" : ", ", f.name.c_str(), s);
    summary += buf;
  }
  if (o.pass) o.detail = summary;
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto report = nlohmann::json::parse(commands::run_screen(2, 16, {}).json);
  const auto realizable = report.at("summary").at("realizable").get<std::vector<std::uint64_t>>();
  if (realizable != std::vector<std::uint64_t>{2, 3}) o.fail("realizable set " + report["summary"]["realizable"].dump());
  for (std::uint64_t q = 2; q <= 16; ++q) {
    if (!numth::prime_power(q)) continue;
    const auto r = screen::screen_pattern(q);
    const bool realizable_q = r.verdict == screen::Verdict::Realizable;
    if (realizable_q != (q <= 3)) o.fail("q=" + str(q) + " verdict " + screen::verdict_name(r.verdict));
  }
  const auto sweep = screen::mersenne_sweep(1'000'000);
  if (!sweep.counterexamples.empty()) o.fail(str(sweep.counterexamples.size()) + " Mersenne counterexamples");
  for (unsigned n : {2u, 3u, 4u}) {
    const auto order = lin::singer_normalizer_order(n);
    if (order != n * ((1u << n) - 1)) o.fail("n=" + str(n) + " normalizer order " + str(order));
  }
  if (o.pass)
    o.detail = "realizable {2,3}; " + str(sweep.pairs_checked) + " (p,h) pairs, 0 counterexamples; |N(S)| = 6, 21, 60";
  return o;
}

std::vector<families::Triple> bundled_triples() {
  std::vector<families::Triple> out;
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    auto pkg = lin::build_pgl2(q);
    out.push_back({"pgl2-" + str(q), pkg.G, pkg.C, pkg.S});
  }
  for (std::uint64_t seed : {0, 1, 2}) {
    for (auto& t : families::random_pool(seed)) out.push_back(std::move(t));
  }
  for (const auto& f : {families::agl1(5), families::agl1(7), families::agl1(8), families::agl1(9),
                        families::heis7_z3()}) {
    out.push_back({f.name + "/NH", f.G, f.N, f.H});
    out.push_back({f.name + "/HN", f.G, f.H, f.N});
  }
  return out;
}

Outcome criterion9() {
  Outcome o;
  const auto triples = bundled_triples();
  std::size_t pairs = 0;
  for (const auto& t : triples) {
    const auto fg = FactorizedGroup::create(t.G, t.L, t.F);
    const MutualActions act(fg);
    const auto r = act.check_axioms(fg);
    pairs += r.pairs_checked;
    if (!r.all()) o.fail(t.name + ": action axioms fail");
  }

  // Orbit-stabilizer on random points: the natural action of G and the
  // right action of F on L.
  std::mt19937_64 rng(2024);
  std::size_t orbit_checks = 0;
  for (; orbit_checks < 100; ++orbit_checks) {
    const auto& t = triples[rng() % triples.size()];
    if (orbit_checks % 2 == 0) {
      const auto x = static_cast<perm::Point>(rng() % t.G.degree());
      const auto act = perm::natural_action();
      const auto orb = perm::orbit(t.G, act, x);
      const auto stab = perm::stabilizer_by_filter(t.G, act, x);
      if (orb.size() * stab.order() != t.G.order()) o.fail(t.name + ": natural orbit-stabilizer");
    } else {
      const auto fg = FactorizedGroup::create(t.G, t.L, t.F);
      const MutualActions act(fg);
      const auto l = static_cast<std::uint32_t>(rng() % fg.l_count());
      std::set<std::uint32_t> orb;
      std::size_t stab = 0;
      for (std::uint32_t f = 0; f < fg.f_count(); ++f) {
        const auto image = act.right(l, f);
        orb.insert(image);
        stab += image == l;
      }
      if (orb.size() * stab != fg.f_count()) o.fail(t.name + ": F-orbit on L");
    }
  }

  std::size_t squares = 0;
  for (const auto& [d, dim] : g_emitted) {
    ++squares;
    if (d.sum_of_squares() != dim) o.fail(d.to_string() + " squares to " + str(d.sum_of_squares()) + " != " + str(dim));
  }
  if (o.pass)
    o.detail = str(squares) + " multisets square-sum to dim; " + str(orbit_checks) + " orbit-stabilizer checks; " +
               str(triples.size()) + " triples, " + str(pairs) + " action pairs";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"PGL2(q) dimensions follow the closed form", criterion1},
      {"Wedderburn oracle agrees with orbit dimensions", criterion2},
      {"S3 and S4 group algebras", criterion3},
      {"Hopf axioms for q = 2, 3", criterion4},
      {"Singer orbit and stabilizer for q <= 16", criterion5},
      {"normal complement gives |H| copies of degrees(N)", criterion6},
      {"Frobenius bismash reports", criterion7},
      {"screen, Mersenne sweep and Singer normalizers", criterion8},
      {"property suites", criterion9},
  };
  int failures = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (i == 1 && s > 60) o.fail("took " + std::to_string(s) + " s");
    failures += !o.pass;
    std::printf("[%s] criterion %zu: %s (%.2fs) %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, s,
                o.detail.c_str());
    std::fflush(stdout);
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria failed (%.2fs)\n", failures, criteria.size(), total);
  return failures == 0 ? 0 : 1;
}
