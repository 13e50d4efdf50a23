#include "smashkit/families.hpp"

#include <random>

#include "smashkit/error.hpp"
#include "smashkit/gf.hpp"
#include "smashkit/lingrp.hpp"
#include "smashkit/numth.hpp"

namespace smashkit::families {

using perm::Group;
using perm::Permutation;
using perm::Point;

namespace {

Permutation cycle_on(std::size_t n, std::size_t from, std::size_t len) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i < len; ++i) img[from + i] = static_cast<Point>(from + (i + 1) % len);
  return Permutation(std::move(img));
}

Permutation transposition(std::size_t n, Point a, Point b) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i);
  std::swap(img[a], img[b]);
  return Permutation(std::move(img));
}

bool exact(const Group& g, const Group& l, const Group& f) {
  if (l.order() * f.order() != g.order()) return false;
  for (const auto& x : l.elements())
    if (!x.is_identity() && f.contains(x)) return false;
  return true;
}

}  // namespace

Group symmetric(std::size_t n) {
  if (n <= 1) return Group::trivial(std::max<std::size_t>(n, 1));
  return Group::from_generators(n, {cycle_on(n, 0, n), transposition(n, 0, 1)});
}

Group alternating(std::size_t n) {
  if (n <= 2) return Group::trivial(std::max<std::size_t>(n, 1));
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i + 2 < n; ++i) gens.push_back(cycle_on(n, i, 3));
  return Group::from_generators(n, gens);
}

Group cyclic(std::size_t n) {
  if (n <= 1) return Group::trivial(1);
  return Group::from_generators(n, {cycle_on(n, 0, n)});
}

Group dihedral(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "dihedral group needs n >= 3");
  std::vector<Point> refl(n);
  for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
  return Group::from_generators(n, {cycle_on(n, 0, n), Permutation(std::move(refl))});
}

Group direct_product(const Group& a, const Group& b) {
  const std::size_t na = a.degree(), nb = b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    auto img = g.images();
    for (std::size_t i = 0; i < nb; ++i) img.push_back(static_cast<Point>(na + i));
    gens.emplace_back(std::move(img));
  }
  for (const auto& g : b.generators()) {
    std::vector<Point> img(na);
    for (std::size_t i = 0; i < na; ++i) img[i] = static_cast<Point>(i);
    for (auto x : g.images()) img.push_back(static_cast<Point>(na + x));
    gens.emplace_back(std::move(img));
  }
  return Group::from_generators(na + nb, gens);
}

FrobeniusGroup agl1(std::uint64_t q) {
  const auto pp = numth::prime_power(q);
  if (!pp || q < 2) throw Error(ErrorCode::InvalidArgument, "agl1 needs a prime power, got " + std::to_string(q));
  const auto field = gf::Field::create(pp->first, pp->second);
  const auto n = static_cast<std::size_t>(q);
  std::vector<Permutation> translations;
  for (unsigned i = 0; i < field->h(); ++i) {
    std::vector<Point> img(n);
    for (std::uint32_t x = 0; x < q; ++x) img[x] = field->add(x, field->basis_element(i));
    translations.emplace_back(std::move(img));
  }
  std::vector<Permutation> scalings;
  if (q > 2) {
    std::vector<Point> img(n);
    const auto xi = field->primitive_element();
    for (std::uint32_t x = 0; x < q; ++x) img[x] = field->mul(x, xi);
    scalings.emplace_back(std::move(img));
  }
  auto all = translations;
  all.insert(all.end(), scalings.begin(), scalings.end());
  return {"agl1-" + std::to_string(q), Group::from_generators(n, all), Group::from_generators(n, translations),
          Group::from_generators(n, scalings)};
}

FrobeniusGroup heis7_z3() {
  constexpr std::uint32_t p = 7;
  constexpr std::size_t n = p * p * p;
  auto index = [](std::uint32_t a, std::uint32_t b, std::uint32_t c) { return (a % p) * p * p + (b % p) * p + c % p; };
  // (a, b, c)(a', b', c') = (a + a', b + b', c + c' + a b'); N acts by right multiplication.
  auto right_mult = [&](std::uint32_t a2, std::uint32_t b2, std::uint32_t c2) {
    std::vector<Point> img(n);
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b)
        for (std::uint32_t c = 0; c < p; ++c) img[index(a, b, c)] = index(a + a2, b + b2, c + c2 + a * b2);
    return Permutation(std::move(img));
  };
  // (a, b, c) -> (2a, 2b, 4c): an automorphism of order 3 fixing only the identity.
  std::vector<Point> img(n);
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t c = 0; c < p; ++c) img[index(a, b, c)] = index(2 * a, 2 * b, 4 * c);
  const Permutation phi(std::move(img));
  const auto x = right_mult(1, 0, 0), y = right_mult(0, 1, 0);
  return {"heis7-z3", Group::from_generators(n, {x, y, phi}), Group::from_generators(n, {x, y}),
          Group::from_generators(n, {phi})};
}

std::vector<Triple> random_pool(std::uint64_t seed) {
  auto parse = [](std::size_t n, std::initializer_list<std::string_view> gens) {
    std::vector<Permutation> v;
    for (auto s : gens) v.push_back(Permutation::parse_cycles(s, n));
    return Group::from_generators(n, v);
  };

  std::vector<Triple> pool;
  const auto s4 = symmetric(4);
  pool.push_back({"S4 = S3 C4", s4, parse(4, {"(1 2 3)", "(1 2)"}), cyclic(4)});
  pool.push_back({"S4 = A4 C2", s4, alternating(4), parse(4, {"(1 2)"})});
  pool.push_back({"S4 = D4 C3", s4, parse(4, {"(1 2 3 4)", "(1 3)"}), parse(4, {"(1 2 3)"})});
  pool.push_back({"A4 = V4 C3", alternating(4), parse(4, {"(1 2)(3 4)", "(1 3)(2 4)"}), parse(4, {"(1 2 3)"})});
  pool.push_back({"S5 = S4 C5", symmetric(5), parse(5, {"(1 2 3 4)", "(1 2)"}), cyclic(5)});
  pool.push_back({"A5 = A4 C5", alternating(5), parse(5, {"(1 2 3)", "(2 3 4)"}), cyclic(5)});
  {
    auto f = agl1(8);
    pool.push_back({"AGL(1,8) = C7 E8", f.G, f.H, f.N});
  }
  {
    const auto s3 = symmetric(3);
    const auto g = direct_product(s3, s3);
    const auto diag = parse(6, {"(1 2 3)(4 5 6)", "(1 2)(4 5)"});
    const auto left = parse(6, {"(1 2 3)", "(1 2)"});
    pool.push_back({"S3 x S3 = diag S3", g, diag, left});
  }
  {
    auto gl = lin::build_gln2(3);
    auto stab = perm::stabilizer_by_filter(gl.G, perm::natural_action(), 0);
    pool.push_back({"GL3(2) = C7 S4", gl.G, gl.singer, stab});
  }

  std::mt19937_64 rng(seed);
  for (auto& t : pool) {
    if (rng() % 2) std::swap(t.L, t.F);
    const auto g = t.G.unrank(rng() % t.G.order());
    std::vector<Permutation> conj;
    for (const auto& x : t.L.generators()) conj.push_back(perm::conjugate(x, g));
    auto l2 = Group::from_generators(t.G.degree(), conj);
    if (exact(t.G, l2, t.F)) t.L = std::move(l2);
  }
  return pool;
}

}  // namespace smashkit::families
