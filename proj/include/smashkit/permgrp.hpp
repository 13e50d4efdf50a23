#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace smashkit::perm {

using Point = std::uint32_t;

/// A bijection of {0, ..., n-1}.
///
/// Products compose left to right: (a * b)(x) == b(a(x)), i.e. the left
/// factor is applied first. Every other module relies on this convention.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<Point> images);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(std::int64_t e) const;
  bool is_identity() const noexcept;
  std::uint64_t order() const;

  /// Disjoint cycles, 1-based; the identity prints as "()".
  std::string to_cycles() const;

  /// Parses 1-based cycle notation such as "(1 2 3)(4 5)". Cycles need not
  /// be disjoint and are applied right to left.
  static Permutation parse_cycles(std::string_view text, std::size_t degree);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// a^-1 b^-1 a b
Permutation commutator(const Permutation& a, const Permutation& b);

/// g^-1 a g
Permutation conjugate(const Permutation& a, const Permutation& g);

struct Caps {
  std::uint64_t order = 1'000'000;
  std::uint64_t enumeration = 100'000;
};

/// Permutation group with a base and strong generating set.
class Group {
 public:
  Group() = default;

  static Group from_generators(std::size_t degree, std::vector<Permutation> gens, const Caps& caps = {});
  static Group trivial(std::size_t degree, const Caps& caps = {});

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return gens_; }
  std::uint64_t order() const noexcept { return order_; }
  const Caps& caps() const noexcept { return caps_; }

  std::vector<Point> base() const;
  std::vector<Permutation> strong_generators() const;
  std::vector<std::size_t> basic_orbit_lengths() const;

  bool contains(const Permutation& x) const;

  /// Position of x in the enumeration order, or nullopt if x is not a member.
  std::optional<std::uint64_t> rank(const Permutation& x) const;
  Permutation unrank(std::uint64_t index) const;

  /// All elements in transversal-product order; the identity comes first.
  std::vector<Permutation> elements() const;

  Permutation identity() const { return Permutation(degree_); }

  bool is_subgroup_of(const Group& g) const;
  bool is_normal_in(const Group& g) const;
  bool is_abelian() const;

 private:
  struct Level {
    Point base = 0;
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    std::vector<std::int32_t> orbit_pos;
    std::vector<Permutation> transversal;
    std::vector<Permutation> transversal_inv;
  };

  void add_level(Point base);
  void rebuild_orbit(Level& level) const;
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t start) const;
  void schreier_sims();
  void check_order_cap() const;
  void check_degree(const Permutation& x) const;

  std::size_t degree_ = 0;
  Caps caps_;
  std::vector<Permutation> gens_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

/// Action of a group element on a finite set of points.
using Action = std::function<Point(Point, const Permutation&)>;

/// The natural action x -> g(x).
Action natural_action();

/// Orbit of x under the generators of G, sorted ascending.
std::vector<Point> orbit(const Group& g, const Action& act, Point x);

/// Subgroup generated by a list of elements of a common degree.
Group subgroup_from_elements(std::size_t degree, std::span<const Permutation> elements, const Caps& caps = {});

/// All elements of G fixing x under act, found by filtering G's element list.
Group stabilizer_by_filter(const Group& g, const Action& act, Point x);

/// Smallest normal subgroup of G containing the given elements.
Group normal_closure(const Group& g, std::vector<Permutation> seeds);

Group derived_subgroup(const Group& g);

struct SubgroupSeries {
  enum class Kind { Derived, LowerCentral };
  Kind kind;
  std::vector<Group> terms;
};

/// gamma_1 = N, gamma_{i+1} = [N, gamma_i], down to the trivial group.
/// Throws NotNilpotent if the series stalls above 1.
SubgroupSeries lower_central_series(const Group& n);

/// G, G', G'', ... until the series stabilizes.
SubgroupSeries derived_series(const Group& g);

/// Elementary divisors (prime powers, ascending) of the abelian quotient G/N.
std::vector<std::uint64_t> abelian_invariants_of_quotient(const Group& g, const Group& n);

/// lcm of element orders.
std::uint64_t exponent(const Group& g);

}  // namespace smashkit::perm
