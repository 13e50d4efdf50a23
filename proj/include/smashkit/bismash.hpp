#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "smashkit/degrees.hpp"
#include "smashkit/lingrp.hpp"
#include "smashkit/permgrp.hpp"
#include "smashkit/wedderburn.hpp"

namespace smashkit::bismash {

inline constexpr std::size_t kAlgebraDimCap = 2000;
inline constexpr std::size_t kHopfDimCap = 64;

/// (G, L, F) with L and F subgroups of G, L n F = 1 and G = F L.
///
/// Elements of L and F are indexed by their enumeration order (identity is
/// index 0). Every g in G is stored as its unique factorization g = f * l.
class FactorizedGroup {
 public:
  static FactorizedGroup create(perm::Group g, perm::Group l, perm::Group f);

  const perm::Group& G() const noexcept { return g_; }
  const perm::Group& L() const noexcept { return l_; }
  const perm::Group& F() const noexcept { return f_; }

  std::size_t l_count() const noexcept { return l_elems_.size(); }
  std::size_t f_count() const noexcept { return f_elems_.size(); }
  const perm::Permutation& l_element(std::size_t i) const { return l_elems_.at(i); }
  const perm::Permutation& f_element(std::size_t i) const { return f_elems_.at(i); }

  std::uint32_t l_index(const perm::Permutation& x) const;
  std::uint32_t f_index(const perm::Permutation& x) const;

  /// (f index, l index) with g = f * l.
  std::pair<std::uint32_t, std::uint32_t> split(const perm::Permutation& g) const;

  std::uint32_t l_mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t f_mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t l_inv(std::uint32_t a) const { return l_inv_[a]; }
  std::uint32_t f_inv(std::uint32_t a) const { return f_inv_[a]; }

 private:
  perm::Group g_, l_, f_;
  std::vector<perm::Permutation> l_elems_, f_elems_;
  std::vector<std::uint32_t> split_f_, split_l_;  // indexed by G rank
  std::vector<std::uint32_t> l_mul_, f_mul_, l_inv_, f_inv_;
};

/// l * f = (^[l] f) * (l^[f]).
class MutualActions {
 public:
  explicit MutualActions(const FactorizedGroup& fg);

  /// ^[l] f as an F index
  std::uint32_t left(std::uint32_t l, std::uint32_t f) const { return left_[l * nf_ + f]; }
  /// l^[f] as an L index
  std::uint32_t right(std::uint32_t l, std::uint32_t f) const { return right_[l * nf_ + f]; }

  struct AxiomReport {
    bool reconstruction = true;
    bool right_action = true;
    bool left_action = true;
    std::size_t pairs_checked = 0;
    bool all() const { return reconstruction && right_action && left_action; }
  };
  /// Exhaustive check of the defining identity and both action laws.
  AxiomReport check_axioms(const FactorizedGroup& fg) const;

 private:
  std::size_t nf_;
  std::vector<std::uint32_t> left_, right_;
};

/// Character degrees of a group; used for the point stabilizers.
using DegreeOracle = std::function<DegreeMultiset(const perm::Group&)>;

/// Oracle that decomposes group algebras over GF(prime).
DegreeOracle wedderburn_oracle(std::uint32_t prime, std::uint64_t seed = 0);

/// Splitting prime for every subgroup of fg.G().
std::uint32_t oracle_prime(const FactorizedGroup& fg);

struct OrbitInfo {
  std::uint32_t representative = 0;  ///< least L index in the orbit
  std::size_t size = 0;
  std::uint64_t stabilizer_order = 0;
  DegreeMultiset stabilizer_degrees;
};

struct KmmResult {
  std::vector<OrbitInfo> orbits;
  DegreeMultiset dims;
};

/// Simple-module dimensions of k^L # kF from F-orbits on L and the
/// character degrees of the stabilizers. Throws Mismatch if the squares do
/// not sum to |G|.
KmmResult kmm_dimensions(const FactorizedGroup& fg, const MutualActions& act, const DegreeOracle& oracle);
KmmResult kmm_dimensions(const FactorizedGroup& fg);

/// Basis (l # f) has index l * |F| + f.
wedderburn::StructureConstantAlgebra build_algebra(const FactorizedGroup& fg, const MutualActions& act,
                                                   std::uint32_t prime, std::size_t dim_cap = kAlgebraDimCap);

/// Coproduct, counit and antipode on the basis of k^L # kF.
class HopfMaps {
 public:
  HopfMaps(const FactorizedGroup& fg, const MutualActions& act, std::size_t dim_cap = kHopfDimCap);

  std::size_t dim() const noexcept { return nl_ * nf_; }
  std::uint32_t index(std::uint32_t l, std::uint32_t f) const { return static_cast<std::uint32_t>(l * nf_ + f); }

  /// Summands (left basis index, right basis index), each with coefficient 1.
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& coproduct(std::size_t b) const { return delta_.at(b); }
  std::uint32_t counit(std::size_t b) const { return b / nf_ == 0 ? 1 : 0; }
  std::uint32_t antipode(std::size_t b) const { return antipode_.at(b); }

 private:
  std::size_t nl_, nf_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> delta_;
  std::vector<std::uint32_t> antipode_;
};

struct HopfAxiomReport {
  std::size_t coproduct_multiplicative_failures = 0;
  std::size_t coproduct_unit_failures = 0;
  std::size_t coassociativity_failures = 0;
  std::size_t counit_failures = 0;
  std::size_t antipode_failures = 0;
  std::size_t checks = 0;
  bool all() const {
    return coproduct_multiplicative_failures + coproduct_unit_failures + coassociativity_failures + counit_failures +
               antipode_failures ==
           0;
  }
};

/// Exhaustive Hopf axiom checks over the algebra's prime field.
HopfAxiomReport check_hopf_axioms(const wedderburn::StructureConstantAlgebra& a, const HopfMaps& h);

struct CocommutativityReport {
  bool cocommutative = false;
  bool l_abelian_normal = false;
  bool agrees() const { return cocommutative == l_abelian_normal; }
};

CocommutativityReport cocommutativity_check(const FactorizedGroup& fg, const HopfMaps& h);

struct FrobeniusReport {
  KmmResult kmm;
  DegreeMultiset predicted;
  std::vector<std::uint64_t> lower_central_orders;
  std::vector<std::vector<std::uint64_t>> n_star_factors;  ///< invariants of gamma_i / gamma_{i+1}
  std::uint64_t n_star_order = 0;
  bool multiset_match = false;
  bool n_star_order_match = false;
  bool pass() const { return multiset_match && n_star_order_match; }
};

/// Kernel N, complement H. Throws NotFrobenius if H does not act
/// fixed-point-freely on N, NotNilpotent if N is not nilpotent.
FrobeniusReport frobenius_bismash_report(const perm::Group& g, const perm::Group& n, const perm::Group& h,
                                         const DegreeOracle& oracle);
FrobeniusReport frobenius_bismash_report(const perm::Group& g, const perm::Group& n, const perm::Group& h);

/// Orbit and stabilizer of the Singer generator under the right action of S.
struct SingerLemmaReport {
  std::size_t orbit_size = 0;         ///< expected q = |C#|
  bool transitive_on_c_sharp = false;
  bool u_images_distinct = false;     ///< x^[u] distinct for u in U
  std::uint64_t stabilizer_order = 0;  ///< expected q - 1
  bool stabilizer_cyclic = false;
};

SingerLemmaReport singer_lemmas(const lin::Pgl2Package& pkg, const FactorizedGroup& fg, const MutualActions& act);

/// {1 x (q-1), q-1, q x (q-1)}
DegreeMultiset pgl2_formula(std::uint64_t q);

}  // namespace smashkit::bismash
