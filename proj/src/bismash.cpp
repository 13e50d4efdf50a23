#include "smashkit/bismash.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "smashkit/error.hpp"

namespace smashkit::bismash {

using perm::Group;
using perm::Permutation;

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
constexpr std::size_t kTableLimit = 2048;

std::vector<std::uint32_t> mul_table(const Group& g, const std::vector<Permutation>& elems) {
  std::vector<std::uint32_t> t;
  if (elems.size() > kTableLimit) return t;
  t.reserve(elems.size() * elems.size());
  for (const auto& a : elems)
    for (const auto& b : elems) t.push_back(static_cast<std::uint32_t>(*g.rank(a * b)));
  return t;
}

std::vector<std::uint32_t> inv_table(const Group& g, const std::vector<Permutation>& elems) {
  std::vector<std::uint32_t> t;
  for (const auto& a : elems) t.push_back(static_cast<std::uint32_t>(*g.rank(a.inverse())));
  return t;
}

}  // namespace

// ---------------------------------------------------------------------------
// FactorizedGroup

FactorizedGroup FactorizedGroup::create(Group g, Group l, Group f) {
  if (l.degree() != g.degree() || f.degree() != g.degree()) {
    throw Error(ErrorCode::InvalidArgument, "G, L and F must act on the same number of points");
  }
  if (!l.is_subgroup_of(g) || !f.is_subgroup_of(g)) {
    throw Error(ErrorCode::NotFactorized, "L and F must be subgroups of G");
  }
  if (l.order() * f.order() != g.order()) {
    throw Error(ErrorCode::NotFactorized, "|L| |F| = " + std::to_string(l.order() * f.order()) + " differs from |G| = " +
                                              std::to_string(g.order()));
  }
  if (g.order() > g.caps().enumeration) {
    throw Error(ErrorCode::CapExceeded, "|G| = " + std::to_string(g.order()) + " exceeds the enumeration cap");
  }

  FactorizedGroup fg;
  fg.l_elems_ = l.elements();
  fg.f_elems_ = f.elements();
  fg.split_f_.assign(g.order(), kUnset);
  fg.split_l_.assign(g.order(), kUnset);
  for (std::uint32_t fi = 0; fi < fg.f_elems_.size(); ++fi) {
    for (std::uint32_t li = 0; li < fg.l_elems_.size(); ++li) {
      const auto r = *g.rank(fg.f_elems_[fi] * fg.l_elems_[li]);
      if (fg.split_f_[r] != kUnset) throw Error(ErrorCode::NotFactorized, "L and F intersect nontrivially");
      fg.split_f_[r] = fi;
      fg.split_l_[r] = li;
    }
  }
  fg.l_mul_ = mul_table(l, fg.l_elems_);
  fg.f_mul_ = mul_table(f, fg.f_elems_);
  fg.l_inv_ = inv_table(l, fg.l_elems_);
  fg.f_inv_ = inv_table(f, fg.f_elems_);
  fg.g_ = std::move(g);
  fg.l_ = std::move(l);
  fg.f_ = std::move(f);
  return fg;
}

std::uint32_t FactorizedGroup::l_index(const Permutation& x) const {
  const auto r = l_.rank(x);
  if (!r) throw Error(ErrorCode::InvalidArgument, "element is not in L");
  return static_cast<std::uint32_t>(*r);
}

std::uint32_t FactorizedGroup::f_index(const Permutation& x) const {
  const auto r = f_.rank(x);
  if (!r) throw Error(ErrorCode::InvalidArgument, "element is not in F");
  return static_cast<std::uint32_t>(*r);
}

std::pair<std::uint32_t, std::uint32_t> FactorizedGroup::split(const Permutation& g) const {
  const auto r = g_.rank(g);
  if (!r) throw Error(ErrorCode::InvalidArgument, "element is not in G");
  return {split_f_[*r], split_l_[*r]};
}

std::uint32_t FactorizedGroup::l_mul(std::uint32_t a, std::uint32_t b) const {
  if (!l_mul_.empty()) return l_mul_[a * l_count() + b];
  return static_cast<std::uint32_t>(*l_.rank(l_elems_[a] * l_elems_[b]));
}

std::uint32_t FactorizedGroup::f_mul(std::uint32_t a, std::uint32_t b) const {
  if (!f_mul_.empty()) return f_mul_[a * f_count() + b];
  return static_cast<std::uint32_t>(*f_.rank(f_elems_[a] * f_elems_[b]));
}

// ---------------------------------------------------------------------------
// MutualActions

MutualActions::MutualActions(const FactorizedGroup& fg) : nf_(fg.f_count()) {
  const std::size_t nl = fg.l_count();
  left_.resize(nl * nf_);
  right_.resize(nl * nf_);
  for (std::uint32_t l = 0; l < nl; ++l) {
    for (std::uint32_t f = 0; f < nf_; ++f) {
      const auto [fi, li] = fg.split(fg.l_element(l) * fg.f_element(f));
      left_[l * nf_ + f] = fi;
      right_[l * nf_ + f] = li;
    }
  }
}

MutualActions::AxiomReport MutualActions::check_axioms(const FactorizedGroup& fg) const {
  AxiomReport r;
  const auto nl = static_cast<std::uint32_t>(fg.l_count());
  const auto nf = static_cast<std::uint32_t>(nf_);
  for (std::uint32_t l = 0; l < nl; ++l) {
    for (std::uint32_t f = 0; f < nf; ++f) {
      ++r.pairs_checked;
      if (fg.l_element(l) * fg.f_element(f) != fg.f_element(left(l, f)) * fg.l_element(right(l, f))) {
        r.reconstruction = false;
      }
    }
  }
  for (std::uint32_t l = 0; l < nl; ++l) {
    if (right(l, 0) != l) r.right_action = false;
    for (std::uint32_t f = 0; f < nf && r.right_action; ++f)
      for (std::uint32_t f2 = 0; f2 < nf; ++f2)
        if (right(right(l, f), f2) != right(l, fg.f_mul(f, f2))) {
          r.right_action = false;
          break;
        }
  }
  for (std::uint32_t f = 0; f < nf; ++f) {
    if (left(0, f) != f) r.left_action = false;
    for (std::uint32_t l = 0; l < nl && r.left_action; ++l)
      for (std::uint32_t l2 = 0; l2 < nl; ++l2)
        if (left(fg.l_mul(l, l2), f) != left(l, left(l2, f))) {
          r.left_action = false;
          break;
        }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Dimensions

DegreeOracle wedderburn_oracle(std::uint32_t prime, std::uint64_t seed) {
  return [prime, seed](const Group& h) { return wedderburn::group_character_degrees(h, prime, seed); };
}

std::uint32_t oracle_prime(const FactorizedGroup& fg) {
  return wedderburn::select_prime(perm::exponent(fg.G()), fg.G().order());
}

KmmResult kmm_dimensions(const FactorizedGroup& fg, const MutualActions& act, const DegreeOracle& oracle) {
  const Group& f = fg.F();
  const perm::Action right = [&](perm::Point l, const Permutation& x) { return act.right(l, fg.f_index(x)); };

  KmmResult out;
  std::vector<bool> seen(fg.l_count(), false);
  std::vector<std::uint64_t> dims;
  for (std::uint32_t l = 0; l < fg.l_count(); ++l) {
    if (seen[l]) continue;
    const auto orb = perm::orbit(f, right, l);
    for (auto x : orb) seen[x] = true;
    const auto stab = perm::stabilizer_by_filter(f, right, l);
    if (orb.size() * stab.order() != f.order()) {
      throw Error(ErrorCode::Internal, "orbit-stabilizer identity fails for orbit of " + std::to_string(l));
    }
    OrbitInfo info{l, orb.size(), stab.order(), oracle(stab)};
    for (auto d : info.stabilizer_degrees.values()) dims.push_back(d * orb.size());
    out.orbits.push_back(std::move(info));
  }
  out.dims = DegreeMultiset(std::move(dims));
  if (out.dims.sum_of_squares() != fg.G().order()) {
    throw Error(ErrorCode::Mismatch, "simple-module dimensions " + out.dims.to_string() + " do not square-sum to |G| = " +
                                         std::to_string(fg.G().order()));
  }
  return out;
}

KmmResult kmm_dimensions(const FactorizedGroup& fg) {
  return kmm_dimensions(fg, MutualActions(fg), wedderburn_oracle(oracle_prime(fg)));
}

wedderburn::StructureConstantAlgebra build_algebra(const FactorizedGroup& fg, const MutualActions& act,
                                                   std::uint32_t prime, std::size_t dim_cap) {
  const std::size_t nl = fg.l_count(), nf = fg.f_count(), dim = nl * nf;
  if (dim > dim_cap) {
    throw Error(ErrorCode::CapExceeded,
                "algebra dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(dim_cap));
  }
  std::vector<std::vector<wedderburn::Term>> products(dim * dim);
  for (std::uint32_t l = 0; l < nl; ++l) {
    for (std::uint32_t f = 0; f < nf; ++f) {
      const std::size_t row = (l * nf + f) * dim;
      const std::size_t lb = act.right(l, f);
      for (std::uint32_t fb = 0; fb < nf; ++fb) {
        products[row + lb * nf + fb] = {{static_cast<std::uint32_t>(l * nf + fg.f_mul(f, fb)), 1}};
      }
    }
  }
  wedderburn::Vec unit(dim, 0);
  for (std::size_t l = 0; l < nl; ++l) unit[l * nf] = 1;
  return wedderburn::StructureConstantAlgebra(dim, prime, std::move(products), std::move(unit));
}

// ---------------------------------------------------------------------------
// Hopf structure

HopfMaps::HopfMaps(const FactorizedGroup& fg, const MutualActions& act, std::size_t dim_cap)
    : nl_(fg.l_count()), nf_(fg.f_count()) {
  if (dim() > dim_cap) {
    throw Error(ErrorCode::CapExceeded,
                "Hopf check dimension " + std::to_string(dim()) + " exceeds cap " + std::to_string(dim_cap));
  }
  delta_.resize(dim());
  antipode_.resize(dim());
  for (std::uint32_t l = 0; l < nl_; ++l) {
    for (std::uint32_t f = 0; f < nf_; ++f) {
      auto& d = delta_[index(l, f)];
      for (std::uint32_t lh = 0; lh < nl_; ++lh) {
        d.emplace_back(index(fg.l_mul(l, fg.l_inv(lh)), act.left(lh, f)), index(lh, f));
      }
      antipode_[index(l, f)] = index(fg.l_inv(act.right(l, f)), fg.f_inv(act.left(l, f)));
    }
  }
}

namespace {

// Sparse element of a tensor power, keyed by flattened multi-index.
using Tensor = std::vector<std::pair<std::uint64_t, std::uint32_t>>;

void canonicalize(Tensor& t, std::uint32_t p) {
  std::sort(t.begin(), t.end());
  std::size_t w = 0;
  for (std::size_t r = 0; r < t.size();) {
    const auto key = t[r].first;
    std::uint64_t c = 0;
    for (; r < t.size() && t[r].first == key; ++r) c += t[r].second;
    c %= p;
    if (c != 0) t[w++] = {key, static_cast<std::uint32_t>(c)};
  }
  t.resize(w);
}

Tensor from_vec(const wedderburn::Vec& v) {
  Tensor t;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) t.emplace_back(i, v[i]);
  return t;
}

}  // namespace

HopfAxiomReport check_hopf_axioms(const wedderburn::StructureConstantAlgebra& a, const HopfMaps& h) {
  const std::size_t n = a.dim();
  const std::uint32_t p = a.prime();
  if (h.dim() != n) throw Error(ErrorCode::InvalidArgument, "Hopf maps and algebra differ in dimension");
  auto mulc = [p](std::uint64_t x, std::uint64_t y) { return static_cast<std::uint32_t>(x * y % p); };

  HopfAxiomReport r;
  // Delta(b_x b_y) = Delta(b_x) Delta(b_y)
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Tensor lhs, rhs;
      for (const auto& t : a.product(x, y))
        for (const auto& [i, j] : h.coproduct(t.index)) lhs.emplace_back(std::uint64_t{i} * n + j, t.coeff);
      for (const auto& [i1, j1] : h.coproduct(x))
        for (const auto& [i2, j2] : h.coproduct(y))
          for (const auto& s : a.product(i1, i2))
            for (const auto& t : a.product(j1, j2))
              rhs.emplace_back(std::uint64_t{s.index} * n + t.index, mulc(s.coeff, t.coeff));
      canonicalize(lhs, p);
      canonicalize(rhs, p);
      ++r.checks;
      if (lhs != rhs) ++r.coproduct_multiplicative_failures;
    }
  }
  // Delta(1) = 1 (x) 1
  {
    Tensor lhs, rhs;
    const auto& u = a.unit();
    for (std::size_t b = 0; b < n; ++b) {
      if (u[b] == 0) continue;
      for (const auto& [i, j] : h.coproduct(b)) lhs.emplace_back(std::uint64_t{i} * n + j, u[b]);
      for (std::size_t c = 0; c < n; ++c)
        if (u[c] != 0) rhs.emplace_back(std::uint64_t{b} * n + c, mulc(u[b], u[c]));
    }
    canonicalize(lhs, p);
    canonicalize(rhs, p);
    ++r.checks;
    if (lhs != rhs) ++r.coproduct_unit_failures;
  }
  // (Delta (x) id) Delta = (id (x) Delta) Delta
  for (std::size_t b = 0; b < n; ++b) {
    Tensor lhs, rhs;
    for (const auto& [i, j] : h.coproduct(b)) {
      for (const auto& [i1, i2] : h.coproduct(i)) lhs.emplace_back((std::uint64_t{i1} * n + i2) * n + j, 1);
      for (const auto& [j1, j2] : h.coproduct(j)) rhs.emplace_back((std::uint64_t{i} * n + j1) * n + j2, 1);
    }
    canonicalize(lhs, p);
    canonicalize(rhs, p);
    ++r.checks;
    if (lhs != rhs) ++r.coassociativity_failures;
  }
  // (eps (x) id) Delta = id = (id (x) eps) Delta; eps multiplicative, eps(1) = 1
  for (std::size_t b = 0; b < n; ++b) {
    Tensor left, right;
    for (const auto& [i, j] : h.coproduct(b)) {
      if (h.counit(i)) left.emplace_back(j, 1);
      if (h.counit(j)) right.emplace_back(i, 1);
    }
    canonicalize(left, p);
    canonicalize(right, p);
    const Tensor expect{{b, 1}};
    r.checks += 2;
    if (left != expect) ++r.counit_failures;
    if (right != expect) ++r.counit_failures;
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::uint64_t e = 0;
      for (const auto& t : a.product(x, y)) e += std::uint64_t{t.coeff} * h.counit(t.index);
      ++r.checks;
      if (e % p != h.counit(x) * h.counit(y)) ++r.counit_failures;
    }
  }
  {
    std::uint64_t e = 0;
    for (std::size_t b = 0; b < n; ++b) e += std::uint64_t{a.unit()[b]} * h.counit(b);
    ++r.checks;
    if (e % p != 1) ++r.counit_failures;
  }
  // m (S (x) id) Delta = u eps = m (id (x) S) Delta
  const Tensor unit = from_vec(a.unit());
  for (std::size_t b = 0; b < n; ++b) {
    Tensor left, right;
    for (const auto& [i, j] : h.coproduct(b)) {
      for (const auto& t : a.product(h.antipode(i), j)) left.emplace_back(t.index, t.coeff);
      for (const auto& t : a.product(i, h.antipode(j))) right.emplace_back(t.index, t.coeff);
    }
    canonicalize(left, p);
    canonicalize(right, p);
    const Tensor expect = h.counit(b) ? unit : Tensor{};
    r.checks += 2;
    if (left != expect) ++r.antipode_failures;
    if (right != expect) ++r.antipode_failures;
  }
  return r;
}

CocommutativityReport cocommutativity_check(const FactorizedGroup& fg, const HopfMaps& h) {
  CocommutativityReport r;
  r.cocommutative = true;
  for (std::size_t b = 0; b < h.dim() && r.cocommutative; ++b) {
    auto d = h.coproduct(b);
    auto flipped = d;
    for (auto& [i, j] : flipped) std::swap(i, j);
    std::sort(d.begin(), d.end());
    std::sort(flipped.begin(), flipped.end());
    r.cocommutative = d == flipped;
  }
  r.l_abelian_normal = fg.L().is_abelian() && fg.L().is_normal_in(fg.G());
  return r;
}

// ---------------------------------------------------------------------------
// Families

FrobeniusReport frobenius_bismash_report(const Group& g, const Group& n, const Group& h, const DegreeOracle& oracle) {
  if (!n.is_normal_in(g)) throw Error(ErrorCode::NotFrobenius, "kernel N is not normal in G");
  const auto fg = FactorizedGroup::create(g, n, h);
  const MutualActions act(fg);
  for (std::uint32_t l = 1; l < fg.l_count(); ++l) {
    for (std::uint32_t f = 1; f < fg.f_count(); ++f) {
      if (act.right(l, f) == l) {
        throw Error(ErrorCode::NotFrobenius, "a nontrivial element of H fixes " + fg.l_element(l).to_cycles() + " in N");
      }
    }
  }

  FrobeniusReport r;
  r.kmm = kmm_dimensions(fg, act, oracle);
  const std::uint64_t hn = h.order(), nn = n.order();
  if ((nn - 1) % hn != 0) throw Error(ErrorCode::NotFrobenius, "|H| does not divide |N| - 1");
  r.predicted = oracle(h).merged(DegreeMultiset(std::vector<std::uint64_t>((nn - 1) / hn, hn)));
  r.multiset_match = r.kmm.dims == r.predicted;

  const auto lcs = perm::lower_central_series(n);
  r.n_star_order = 1;
  for (std::size_t i = 0; i < lcs.terms.size(); ++i) {
    r.lower_central_orders.push_back(lcs.terms[i].order());
    if (i + 1 == lcs.terms.size()) break;
    auto inv = perm::abelian_invariants_of_quotient(lcs.terms[i], lcs.terms[i + 1]);
    for (auto x : inv) r.n_star_order *= x;
    r.n_star_factors.push_back(std::move(inv));
  }
  r.n_star_order_match = r.n_star_order == nn;
  return r;
}

FrobeniusReport frobenius_bismash_report(const Group& g, const Group& n, const Group& h) {
  const auto prime = wedderburn::select_prime(perm::exponent(g), g.order());
  return frobenius_bismash_report(g, n, h, wedderburn_oracle(prime));
}

SingerLemmaReport singer_lemmas(const lin::Pgl2Package& pkg, const FactorizedGroup& fg, const MutualActions& act) {
  const perm::Action right = [&](perm::Point l, const Permutation& x) { return act.right(l, fg.f_index(x)); };
  const auto x = fg.l_index(pkg.xbar);

  SingerLemmaReport r;
  const auto orb = perm::orbit(fg.F(), right, x);
  r.orbit_size = orb.size();
  r.transitive_on_c_sharp = orb.size() + 1 == fg.l_count() && !std::binary_search(orb.begin(), orb.end(), 0u);

  std::set<std::uint32_t> images;
  for (const auto& u : pkg.U.elements()) images.insert(act.right(x, fg.f_index(u)));
  r.u_images_distinct = images.size() == pkg.U.order() && images.size() == pkg.q;

  const auto stab = perm::stabilizer_by_filter(fg.F(), right, x);
  r.stabilizer_order = stab.order();
  for (const auto& s : stab.elements()) {
    if (s.order() == stab.order()) {
      r.stabilizer_cyclic = true;
      break;
    }
  }
  return r;
}

DegreeMultiset pgl2_formula(std::uint64_t q) {
  std::vector<std::uint64_t> v(q - 1, 1);
  v.push_back(q - 1);
  v.insert(v.end(), q - 1, q);
  return DegreeMultiset(std::move(v));
}

}  // namespace smashkit::bismash
