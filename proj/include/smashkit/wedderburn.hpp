#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "smashkit/degrees.hpp"
#include "smashkit/permgrp.hpp"

namespace smashkit::wedderburn {

using Vec = std::vector<std::uint32_t>;

struct Term {
  std::uint32_t index;
  std::uint32_t coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

inline constexpr std::size_t kExhaustiveCheckDim = 256;

/// Finite-dimensional algebra over GF(prime) given by sparse structure
/// constants b_i b_j = sum_t coeff_t b_{index_t}.
class StructureConstantAlgebra {
 public:
  /// products[i * dim + j] lists the terms of b_i b_j. Associativity (all
  /// triples up to exhaustive_dim, sampled above) and the unit are verified.
  StructureConstantAlgebra(std::size_t dim, std::uint32_t prime, std::vector<std::vector<Term>> products, Vec unit,
                           std::size_t exhaustive_dim = kExhaustiveCheckDim);

  static StructureConstantAlgebra group_algebra(const perm::Group& g, std::uint32_t prime);

  std::size_t dim() const noexcept { return dim_; }
  std::uint32_t prime() const noexcept { return prime_; }
  const Vec& unit() const noexcept { return unit_; }

  std::span<const Term> product(std::size_t i, std::size_t j) const {
    const auto k = i * dim_ + j;
    return {terms_.data() + offsets_[k], terms_.data() + offsets_[k + 1]};
  }

  Vec multiply(const Vec& a, const Vec& b) const;
  /// a * b_j
  Vec multiply_right_basis(const Vec& a, std::size_t j) const;
  /// b_j * a
  Vec multiply_left_basis(std::size_t j, const Vec& a) const;

  Vec basis_vector(std::size_t i) const;

 private:
  void verify(std::size_t exhaustive_dim) const;

  std::size_t dim_;
  std::uint32_t prime_;
  std::vector<std::size_t> offsets_;
  std::vector<Term> terms_;
  Vec unit_;
};

/// {"dim", "prime", "entries": [[i, j, k, coeff], ...], "unit": [...]},
/// entries in (i, j, k) order.
std::string to_json(const StructureConstantAlgebra& a);
StructureConstantAlgebra algebra_from_json(std::string_view text);

/// Smallest prime l with l = 1 (mod exponent). Throws if l divides order or
/// none is found below the search limit.
std::uint32_t select_prime(std::uint64_t exponent, std::uint64_t order, std::uint64_t search_limit = 100'000'000);

/// Basis of the center, by exact elimination mod the algebra's prime.
std::vector<Vec> center(const StructureConstantAlgebra& a);

struct DecompositionResult {
  DegreeMultiset degrees;
  std::size_t center_dim = 0;
  std::uint32_t prime = 0;
  std::size_t idempotent_count = 0;
};

/// Simple-module dimensions of a split semisimple algebra.
DecompositionResult decompose(const StructureConstantAlgebra& a, std::uint64_t seed = 0, unsigned retries = 32);

/// Character degrees of G via its group algebra over GF(prime); abelian
/// groups short-circuit to all ones.
DegreeMultiset group_character_degrees(const perm::Group& g, std::uint32_t prime, std::uint64_t seed = 0);

namespace poly {

using Poly = std::vector<std::uint32_t>;  // constant term first, no trailing zeros

Poly mul(const Poly& a, const Poly& b, std::uint32_t p);
Poly rem(const Poly& a, const Poly& b, std::uint32_t p);
Poly div(const Poly& a, const Poly& b, std::uint32_t p);
Poly gcd(Poly a, Poly b, std::uint32_t p);
Poly derivative(const Poly& a, std::uint32_t p);
/// base^e mod m
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m, std::uint32_t p);

/// All roots in GF(p) of a squarefree polynomial that splits into linear
/// factors, ascending. Throws Decomposition otherwise.
std::vector<std::uint32_t> split_roots(const Poly& f, std::uint32_t p, std::uint64_t seed);

}  // namespace poly

}  // namespace smashkit::wedderburn
