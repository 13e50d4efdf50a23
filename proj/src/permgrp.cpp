#include "smashkit/permgrp.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "smashkit/error.hpp"
#include "smashkit/numth.hpp"

namespace smashkit::perm {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) throw Error(ErrorCode::InvalidArgument, "image table is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw Error(ErrorCode::InvalidArgument, "permutation degree mismatch");
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = rhs.images_[images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

Permutation Permutation::pow(std::int64_t e) const {
  Permutation base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Permutation r(degree());
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Permutation::to_cycles() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    os << '(';
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      if (x != i) os << ' ';
      os << x + 1;
    }
    os << ')';
  }
  const auto s = os.str();
  return s.empty() ? "()" : s;
}

Permutation Permutation::parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '('", i);
    ++i;
    std::vector<Point> cycle;
    std::vector<bool> used(degree, false);
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw ParseError("unterminated cycle", i);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected point or ')'", i);
      const std::size_t start = i;
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > degree) throw ParseError("point out of range 1.." + std::to_string(degree), start);
        ++i;
      }
      if (v == 0) throw ParseError("point out of range 1.." + std::to_string(degree), start);
      if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ')') {
        throw ParseError("expected whitespace or ')'", i);
      }
      const auto x = static_cast<Point>(v - 1);
      if (used[x]) throw ParseError("point repeated within a cycle", start);
      used[x] = true;
      cycle.push_back(x);
    }
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  Permutation result(degree);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    Permutation c(degree);
    for (std::size_t k = 0; k < it->size(); ++k) c.images_[(*it)[k]] = (*it)[(k + 1) % it->size()];
    result = result * c;
  }
  return result;
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

Permutation conjugate(const Permutation& a, const Permutation& g) { return g.inverse() * a * g; }

// ---------------------------------------------------------------------------
// Schreier-Sims

Group Group::trivial(std::size_t degree, const Caps& caps) { return from_generators(degree, {}, caps); }

Group Group::from_generators(std::size_t degree, std::vector<Permutation> gens, const Caps& caps) {
  Group g;
  g.degree_ = degree;
  g.caps_ = caps;
  for (const auto& x : gens) g.check_degree(x);
  g.gens_ = std::move(gens);
  g.schreier_sims();
  return g;
}

void Group::check_degree(const Permutation& x) const {
  if (x.degree() != degree_) {
    throw Error(ErrorCode::InvalidArgument, "permutation of degree " + std::to_string(x.degree()) +
                                                " used with group of degree " + std::to_string(degree_));
  }
}

void Group::add_level(Point base) {
  Level level;
  level.base = base;
  levels_.push_back(std::move(level));
}

void Group::rebuild_orbit(Level& level) const {
  level.orbit.assign(1, level.base);
  level.orbit_pos.assign(degree_, -1);
  level.orbit_pos[level.base] = 0;
  level.transversal.assign(1, Permutation(degree_));
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    const Point beta = level.orbit[k];
    for (const auto& s : level.gens) {
      const Point img = s(beta);
      if (level.orbit_pos[img] >= 0) continue;
      level.orbit_pos[img] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(img);
      level.transversal.push_back(level.transversal[k] * s);
    }
  }
  level.transversal_inv.clear();
  level.transversal_inv.reserve(level.transversal.size());
  for (const auto& t : level.transversal) level.transversal_inv.push_back(t.inverse());
}

std::pair<Permutation, std::size_t> Group::sift(Permutation g, std::size_t start) const {
  for (std::size_t l = start; l < levels_.size(); ++l) {
    const auto& level = levels_[l];
    const std::int32_t pos = level.orbit_pos[g(level.base)];
    if (pos < 0) return {std::move(g), l};
    g = g * level.transversal_inv[static_cast<std::size_t>(pos)];
  }
  return {std::move(g), levels_.size()};
}

void Group::check_order_cap() const {
  std::uint64_t ord = 1;
  for (const auto& level : levels_) {
    ord *= level.orbit.size();
    if (ord > caps_.order) {
      throw Error(ErrorCode::CapExceeded, "group order exceeds cap " + std::to_string(caps_.order));
    }
  }
}

namespace {

Point first_moved_point(const Permutation& g) {
  for (Point x = 0; x < g.degree(); ++x) {
    if (g(x) != x) return x;
  }
  return 0;
}

}  // namespace

void Group::schreier_sims() {
  levels_.clear();
  for (const auto& g : gens_) {
    if (g.is_identity()) continue;
    bool fixes_base = true;
    for (const auto& level : levels_) {
      if (g(level.base) != level.base) {
        fixes_base = false;
        break;
      }
    }
    if (fixes_base) add_level(first_moved_point(g));
  }
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    for (const auto& g : gens_) {
      if (g.is_identity()) continue;
      bool fixes = true;
      for (std::size_t m = 0; m < l && fixes; ++m) fixes = g(levels_[m].base) == levels_[m].base;
      if (fixes && std::find(levels_[l].gens.begin(), levels_[l].gens.end(), g) == levels_[l].gens.end()) {
        levels_[l].gens.push_back(g);
      }
    }
    rebuild_orbit(levels_[l]);
  }
  check_order_cap();

  // Holt's SCHREIERSIMS: verify <S_i>_{b_i} = <S_{i+1}> from the bottom up.
  std::size_t i = levels_.size();
  while (i-- > 0) {
    bool restarted = false;
    for (std::size_t k = 0; k < levels_[i].orbit.size() && !restarted; ++k) {
      for (std::size_t s = 0; s < levels_[i].gens.size(); ++s) {
        const Level& level = levels_[i];
        const Permutation& x = level.gens[s];
        const Point image = x(level.orbit[k]);
        const auto pos = static_cast<std::size_t>(level.orbit_pos[image]);
        Permutation y = level.transversal[k] * x * level.transversal_inv[pos];
        if (y.is_identity()) continue;
        auto [h, j] = sift(std::move(y), i + 1);
        if (j == levels_.size() && h.is_identity()) continue;
        if (j == levels_.size()) add_level(first_moved_point(h));
        for (std::size_t l = i + 1; l <= j; ++l) {
          levels_[l].gens.push_back(h);
          rebuild_orbit(levels_[l]);
        }
        check_order_cap();
        i = j + 1;  // the loop decrement lands on j
        restarted = true;
        break;
      }
    }
  }

  order_ = 1;
  for (const auto& level : levels_) order_ *= level.orbit.size();
}

std::vector<Point> Group::base() const {
  std::vector<Point> out;
  for (const auto& level : levels_) out.push_back(level.base);
  return out;
}

std::vector<Permutation> Group::strong_generators() const {
  std::vector<Permutation> out;
  for (const auto& level : levels_) {
    for (const auto& g : level.gens) {
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
  }
  return out;
}

std::vector<std::size_t> Group::basic_orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& level : levels_) out.push_back(level.orbit.size());
  return out;
}

bool Group::contains(const Permutation& x) const {
  check_degree(x);
  auto [h, j] = sift(x, 0);
  return j == levels_.size() && h.is_identity();
}

std::optional<std::uint64_t> Group::rank(const Permutation& x) const {
  check_degree(x);
  std::uint64_t index = 0;
  Permutation g = x;
  for (const auto& level : levels_) {
    const std::int32_t pos = level.orbit_pos[g(level.base)];
    if (pos < 0) return std::nullopt;
    index = index * level.orbit.size() + static_cast<std::uint64_t>(pos);
    g = g * level.transversal_inv[static_cast<std::size_t>(pos)];
  }
  if (!g.is_identity()) return std::nullopt;
  return index;
}

Permutation Group::unrank(std::uint64_t index) const {
  if (index >= order_) throw Error(ErrorCode::InvalidArgument, "element index out of range");
  // x = u_{k-1} * ... * u_1 * u_0, with the level-0 digit most significant.
  Permutation x(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    const auto& level = levels_[l];
    const std::uint64_t n = level.orbit.size();
    x = x * level.transversal[index % n];
    index /= n;
  }
  return x;
}

std::vector<Permutation> Group::elements() const {
  if (order_ > caps_.enumeration) {
    throw Error(ErrorCode::CapExceeded, "group of order " + std::to_string(order_) + " exceeds enumeration cap " +
                                            std::to_string(caps_.enumeration));
  }
  std::vector<Permutation> out;
  out.reserve(order_);
  for (std::uint64_t i = 0; i < order_; ++i) out.push_back(unrank(i));
  return out;
}

bool Group::is_subgroup_of(const Group& g) const {
  if (g.degree() != degree_) return false;
  return std::all_of(gens_.begin(), gens_.end(), [&](const Permutation& x) { return g.contains(x); });
}

bool Group::is_normal_in(const Group& g) const {
  if (!is_subgroup_of(g)) return false;
  for (const auto& h : gens_) {
    for (const auto& x : g.generators()) {
      if (!contains(conjugate(h, x))) return false;
    }
  }
  return true;
}

bool Group::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    for (std::size_t j = i + 1; j < gens_.size(); ++j) {
      if (gens_[i] * gens_[j] != gens_[j] * gens_[i]) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Derived constructions

Action natural_action() {
  return [](Point x, const Permutation& g) { return g(x); };
}

std::vector<Point> orbit(const Group& g, const Action& act, Point x) {
  std::unordered_set<Point> seen{x};
  std::vector<Point> frontier{x};
  while (!frontier.empty()) {
    const Point y = frontier.back();
    frontier.pop_back();
    for (const auto& s : g.generators()) {
      const Point z = act(y, s);
      if (seen.insert(z).second) frontier.push_back(z);
    }
  }
  std::vector<Point> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

Group subgroup_from_elements(std::size_t degree, std::span<const Permutation> elements, const Caps& caps) {
  Group h = Group::trivial(degree, caps);
  std::vector<Permutation> gens;
  for (const auto& x : elements) {
    if (h.contains(x)) continue;
    gens.push_back(x);
    h = Group::from_generators(degree, gens, caps);
  }
  return h;
}

Group stabilizer_by_filter(const Group& g, const Action& act, Point x) {
  std::vector<Permutation> fixing;
  for (auto& e : g.elements()) {
    if (act(x, e) == x) fixing.push_back(std::move(e));
  }
  Group stab = subgroup_from_elements(g.degree(), fixing, g.caps());
  if (stab.order() != fixing.size()) {
    throw Error(ErrorCode::Internal, "stabilizer filter is not closed; the supplied map is not an action");
  }
  return stab;
}

Group normal_closure(const Group& g, std::vector<Permutation> seeds) {
  std::vector<Permutation> gens;
  Group h = Group::trivial(g.degree(), g.caps());
  for (auto& s : seeds) {
    if (h.contains(s)) continue;
    gens.push_back(std::move(s));
    h = Group::from_generators(g.degree(), gens, g.caps());
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& x : g.generators()) {
      Permutation c = conjugate(gens[i], x);
      if (h.contains(c)) continue;
      gens.push_back(std::move(c));
      h = Group::from_generators(g.degree(), gens, g.caps());
    }
  }
  return h;
}

Group derived_subgroup(const Group& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(commutator(gens[i], gens[j]));
  }
  return normal_closure(g, std::move(comms));
}

SubgroupSeries lower_central_series(const Group& n) {
  SubgroupSeries series{SubgroupSeries::Kind::LowerCentral, {n}};
  while (series.terms.back().order() > 1) {
    const Group& current = series.terms.back();
    std::vector<Permutation> comms;
    for (const auto& a : n.generators()) {
      for (const auto& b : current.generators()) comms.push_back(commutator(a, b));
    }
    Group next = normal_closure(n, std::move(comms));
    if (next.order() == current.order()) {
      throw Error(ErrorCode::NotNilpotent, "lower central series stabilizes at order " + std::to_string(next.order()));
    }
    series.terms.push_back(std::move(next));
  }
  return series;
}

SubgroupSeries derived_series(const Group& g) {
  SubgroupSeries series{SubgroupSeries::Kind::Derived, {g}};
  for (;;) {
    Group next = derived_subgroup(series.terms.back());
    if (next.order() == series.terms.back().order()) break;
    series.terms.push_back(std::move(next));
  }
  return series;
}

std::vector<std::uint64_t> abelian_invariants_of_quotient(const Group& g, const Group& n) {
  if (!n.is_normal_in(g)) throw Error(ErrorCode::NotNormal, "subgroup is not normal");
  for (const auto& a : g.generators()) {
    for (const auto& b : g.generators()) {
      if (!n.contains(commutator(a, b))) throw Error(ErrorCode::NotAbelian, "quotient is not abelian");
    }
  }
  const auto elems = g.elements();
  const auto n_elems = n.elements();
  std::vector<std::int64_t> coset(elems.size(), -1);
  std::vector<std::uint64_t> coset_orders;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (coset[i] >= 0) continue;
    const auto id = static_cast<std::int64_t>(coset_orders.size());
    for (const auto& m : n_elems) coset[*g.rank(elems[i] * m)] = id;
    std::uint64_t k = 1;
    for (Permutation x = elems[i]; !n.contains(x); x = x * elems[i]) ++k;
    coset_orders.push_back(k);
  }
  const std::uint64_t quotient = coset_orders.size();

  std::vector<std::uint64_t> invariants;
  for (auto [r, e] : numth::factor(quotient)) {
    // |A[r^k]| = r^{sum_i min(k, e_i)}; successive differences count the e_i >= k.
    std::vector<unsigned> at_least;
    unsigned prev_log = 0;
    for (unsigned k = 1; k <= e; ++k) {
      const std::uint64_t bound = numth::ipow(r, k);
      const auto count = static_cast<std::uint64_t>(
          std::count_if(coset_orders.begin(), coset_orders.end(), [&](std::uint64_t o) { return bound % o == 0; }));
      unsigned lg = 0;
      for (std::uint64_t c = count; c > 1; c /= r) ++lg;
      at_least.push_back(lg - prev_log);
      prev_log = lg;
    }
    for (unsigned k = 1; k <= e; ++k) {
      const unsigned exactly = at_least[k - 1] - (k < e ? at_least[k] : 0);
      for (unsigned t = 0; t < exactly; ++t) invariants.push_back(numth::ipow(r, k));
    }
  }
  std::sort(invariants.begin(), invariants.end());
  std::uint64_t prod = 1;
  for (auto v : invariants) prod *= v;
  if (prod != quotient) throw Error(ErrorCode::Internal, "abelian invariants do not multiply to the quotient order");
  return invariants;
}

std::uint64_t exponent(const Group& g) {
  std::uint64_t e = 1;
  for (const auto& x : g.elements()) e = std::lcm(e, x.order());
  return e;
}

}  // namespace smashkit::perm
