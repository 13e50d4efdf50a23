#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smashkit/permgrp.hpp"

namespace smashkit::families {

perm::Group symmetric(std::size_t n);
perm::Group alternating(std::size_t n);
perm::Group cyclic(std::size_t n);
/// Symmetries of the n-gon, order 2n, on n points.
perm::Group dihedral(std::size_t n);
/// A x B acting on the disjoint union of their point sets.
perm::Group direct_product(const perm::Group& a, const perm::Group& b);

/// Frobenius group G = N x| H.
struct FrobeniusGroup {
  std::string name;
  perm::Group G, N, H;
};

/// x -> a x + b on GF(q); N the translations, H the multiplications.
FrobeniusGroup agl1(std::uint64_t q);

/// Heisenberg group of order 343 extended by a fixed-point-free
/// automorphism of order 3, acting on 343 points. Order 1029.
FrobeniusGroup heis7_z3();

/// An exactly factorized triple.
struct Triple {
  std::string name;
  perm::Group G, L, F;
};

/// Small exactly factorized groups (|G| <= 200). The seed picks the
/// orientation (L, F) or (F, L) and conjugates L inside G when the result is
/// still exact.
std::vector<Triple> random_pool(std::uint64_t seed);

}  // namespace smashkit::families
