#include "smashkit/wedderburn.hpp"

#include <algorithm>
#include <random>

#include "json.hpp"
#include "smashkit/error.hpp"
#include "smashkit/numth.hpp"

namespace smashkit::wedderburn {
namespace {

inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  const std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}
inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return a >= b ? a - b : a + (p - b); }
inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}
inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(numth::invmod(a, p));
}

// Incremental row echelon form over GF(p). Pivots are searched only in the
// first pivot_width columns; trailing columns ride along (used to track
// linear combinations).
class Echelon {
 public:
  Echelon(std::uint32_t p, std::size_t pivot_width) : p_(p), pivot_width_(pivot_width) {}

  /// Reduces v against the stored rows; true if the pivot region is now zero.
  bool reduce(Vec& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::uint32_t c = v[pivots_[r]];
      if (c == 0) continue;
      const Vec& row = rows_[r];
      for (std::size_t k = pivots_[r]; k < v.size(); ++k) {
        if (row[k] != 0) v[k] = sub_mod(v[k], mul_mod(c, row[k], p_), p_);
      }
    }
    for (std::size_t k = 0; k < pivot_width_; ++k) {
      if (v[k] != 0) return false;
    }
    return true;
  }

  /// Adds an already reduced, nonzero row.
  void insert_reduced(Vec v) {
    std::size_t piv = 0;
    while (v[piv] == 0) ++piv;
    const std::uint32_t inv = inv_mod(v[piv], p_);
    for (std::size_t k = piv; k < v.size(); ++k) v[k] = mul_mod(v[k], inv, p_);
    pivots_.push_back(piv);
    rows_.push_back(std::move(v));
  }

  /// Returns true if v was independent of the stored rows.
  bool insert(Vec v) {
    if (reduce(v)) return false;
    insert_reduced(std::move(v));
    return true;
  }

  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  std::uint32_t p_;
  std::size_t pivot_width_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

void append_scaled(std::vector<Term>& out, std::span<const Term> terms, std::uint32_t scale, std::uint32_t p) {
  for (const auto& t : terms) out.push_back({t.index, mul_mod(t.coeff, scale, p)});
}

void normalize(std::vector<Term>& terms, std::uint32_t p) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < terms.size();) {
    std::uint32_t idx = terms[r].index;
    std::uint32_t c = 0;
    for (; r < terms.size() && terms[r].index == idx; ++r) c = add_mod(c, terms[r].coeff, p);
    if (c != 0) terms[w++] = {idx, c};
  }
  terms.resize(w);
}

}  // namespace

// ---------------------------------------------------------------------------
// StructureConstantAlgebra

StructureConstantAlgebra::StructureConstantAlgebra(std::size_t dim, std::uint32_t prime,
                                                   std::vector<std::vector<Term>> products, Vec unit,
                                                   std::size_t exhaustive_dim)
    : dim_(dim), prime_(prime), unit_(std::move(unit)) {
  if (dim_ == 0) throw Error(ErrorCode::InvalidArgument, "algebra dimension must be positive");
  if (!numth::is_prime(prime_) || prime_ >= (1u << 31)) {
    throw Error(ErrorCode::InvalidArgument, "algebra field size must be a prime below 2^31");
  }
  if (products.size() != dim_ * dim_) throw Error(ErrorCode::InvalidArgument, "structure constant table has wrong size");
  if (unit_.size() != dim_) throw Error(ErrorCode::InvalidArgument, "unit vector has wrong length");
  offsets_.reserve(dim_ * dim_ + 1);
  offsets_.push_back(0);
  for (auto& cell : products) {
    for (auto& t : cell) {
      if (t.index >= dim_) throw Error(ErrorCode::InvalidArgument, "structure constant index out of range");
      t.coeff %= prime_;
    }
    normalize(cell, prime_);
    terms_.insert(terms_.end(), cell.begin(), cell.end());
    offsets_.push_back(terms_.size());
  }
  for (auto& u : unit_) u %= prime_;
  verify(exhaustive_dim);
}

Vec StructureConstantAlgebra::basis_vector(std::size_t i) const {
  Vec v(dim_, 0);
  v.at(i) = 1;
  return v;
}

Vec StructureConstantAlgebra::multiply(const Vec& a, const Vec& b) const {
  Vec out(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      const std::uint32_t s = mul_mod(a[i], b[j], prime_);
      for (const auto& t : product(i, j)) out[t.index] = add_mod(out[t.index], mul_mod(s, t.coeff, prime_), prime_);
    }
  }
  return out;
}

Vec StructureConstantAlgebra::multiply_right_basis(const Vec& a, std::size_t j) const {
  Vec out(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (const auto& t : product(i, j)) out[t.index] = add_mod(out[t.index], mul_mod(a[i], t.coeff, prime_), prime_);
  }
  return out;
}

Vec StructureConstantAlgebra::multiply_left_basis(std::size_t j, const Vec& a) const {
  Vec out(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (const auto& t : product(j, i)) out[t.index] = add_mod(out[t.index], mul_mod(a[i], t.coeff, prime_), prime_);
  }
  return out;
}

void StructureConstantAlgebra::verify(std::size_t exhaustive_dim) const {
  for (std::size_t i = 0; i < dim_; ++i) {
    const Vec b = basis_vector(i);
    if (multiply(unit_, b) != b || multiply(b, unit_) != b) {
      throw Error(ErrorCode::InvalidArgument, "unit is not a two-sided identity on basis element " + std::to_string(i));
    }
  }

  std::vector<Term> lhs, rhs;
  auto check = [&](std::size_t i, std::size_t j, std::size_t k) {
    lhs.clear();
    rhs.clear();
    for (const auto& t : product(i, j)) append_scaled(lhs, product(t.index, k), t.coeff, prime_);
    for (const auto& t : product(j, k)) append_scaled(rhs, product(i, t.index), t.coeff, prime_);
    if (lhs.size() > 1) normalize(lhs, prime_);
    if (rhs.size() > 1) normalize(rhs, prime_);
    if (lhs != rhs) {
      throw Error(ErrorCode::InvalidArgument, "structure constants are not associative at (" + std::to_string(i) + ", " +
                                                  std::to_string(j) + ", " + std::to_string(k) + ")");
    }
  };
  if (dim_ <= exhaustive_dim) {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) check(i, j, k);
  } else {
    std::mt19937_64 rng(0);
    for (int s = 0; s < 20000; ++s) check(rng() % dim_, rng() % dim_, rng() % dim_);
  }
}

StructureConstantAlgebra StructureConstantAlgebra::group_algebra(const perm::Group& g, std::uint32_t prime) {
  const auto elems = g.elements();
  const std::size_t n = elems.size();
  std::vector<std::vector<Term>> products(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      products[i * n + j] = {{static_cast<std::uint32_t>(*g.rank(elems[i] * elems[j])), 1}};
    }
  }
  Vec unit(n, 0);
  unit[0] = 1;
  return StructureConstantAlgebra(n, prime, std::move(products), std::move(unit));
}

std::string to_json(const StructureConstantAlgebra& a) {
  nlohmann::ordered_json j;
  j["dim"] = a.dim();
  j["prime"] = a.prime();
  auto entries = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k)
      for (const auto& t : a.product(i, k)) entries.push_back({i, k, t.index, t.coeff});
  j["entries"] = std::move(entries);
  j["unit"] = a.unit();
  return j.dump();
}

StructureConstantAlgebra algebra_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid algebra JSON: ") + e.what(), e.byte);
  }
  try {
    const auto dim = j.at("dim").get<std::size_t>();
    const auto prime = j.at("prime").get<std::uint32_t>();
    std::vector<std::vector<Term>> products(dim * dim);
    for (const auto& e : j.at("entries")) {
      if (!e.is_array() || e.size() != 4) throw Error(ErrorCode::InvalidArgument, "entry must be [i, j, k, coeff]");
      const auto i = e[0].get<std::size_t>();
      const auto k = e[1].get<std::size_t>();
      if (i >= dim || k >= dim) throw Error(ErrorCode::InvalidArgument, "entry index out of range");
      products[i * dim + k].push_back({e[2].get<std::uint32_t>(), e[3].get<std::uint32_t>()});
    }
    auto unit = j.at("unit").get<Vec>();
    return StructureConstantAlgebra(dim, prime, std::move(products), std::move(unit));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed algebra JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Polynomials over GF(p)

namespace poly {
namespace {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly monic(Poly f, std::uint32_t p) {
  trim(f);
  if (f.empty()) return f;
  const auto inv = inv_mod(f.back(), p);
  for (auto& c : f) c = mul_mod(c, inv, p);
  return f;
}

Poly sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = sub_mod(a[i], b[i], p);
  trim(a);
  return a;
}

std::pair<Poly, Poly> divmod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  if (b.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly quot(a.size() - b.size() + 1, 0);
  const auto lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const auto c = mul_mod(a.back(), lead_inv, p);
    quot[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = sub_mod(a[shift + i], mul_mod(c, b[i], p), p);
    trim(a);
  }
  return {quot, a};
}

}  // namespace

Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = add_mod(out[i + j], mul_mod(a[i], b[j], p), p);
  }
  trim(out);
  return out;
}

Poly rem(const Poly& a, const Poly& b, std::uint32_t p) { return divmod(a, b, p).second; }
Poly div(const Poly& a, const Poly& b, std::uint32_t p) { return divmod(a, b, p).first; }

Poly gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

Poly derivative(const Poly& a, std::uint32_t p) {
  Poly out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(mul_mod(static_cast<std::uint32_t>(i % p), a[i], p));
  trim(out);
  return out;
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly r = rem({1}, m, p);
  Poly b = rem(base, m, p);
  while (e > 0) {
    if (e & 1) r = rem(mul(r, b, p), m, p);
    b = rem(mul(b, b, p), m, p);
    e >>= 1;
  }
  return r;
}

namespace {

void equal_degree_split(const Poly& f, std::uint32_t p, std::mt19937_64& rng, std::vector<std::uint32_t>& roots) {
  if (f.size() == 2) {
    roots.push_back(mul_mod(p - f[0] % p == p ? 0 : p - f[0], inv_mod(f[1], p), p));
    return;
  }
  for (;;) {
    const Poly shifted{static_cast<std::uint32_t>(rng() % p), 1};
    Poly g = powmod(shifted, (std::uint64_t{p} - 1) / 2, f, p);
    g = sub(g, {1}, p);
    g = gcd(f, g, p);
    if (g.size() > 1 && g.size() < f.size()) {
      equal_degree_split(g, p, rng, roots);
      equal_degree_split(monic(div(f, g, p), p), p, rng, roots);
      return;
    }
  }
}

}  // namespace

std::vector<std::uint32_t> split_roots(const Poly& f_in, std::uint32_t p, std::uint64_t seed) {
  const Poly f = monic(f_in, p);
  if (f.empty()) throw Error(ErrorCode::Decomposition, "zero polynomial has no finite root set");
  if (f.size() == 1) return {};
  if (gcd(f, derivative(f, p), p).size() > 1) {
    throw Error(ErrorCode::Decomposition, "minimal polynomial is not squarefree; algebra is not semisimple");
  }
  // gcd(f, X^p - X) collects the linear factors.
  const Poly xp = sub(powmod({0, 1}, p, f, p), {0, 1}, p);
  if (gcd(f, xp, p).size() != f.size()) {
    throw Error(ErrorCode::Decomposition, "minimal polynomial does not split over GF(" + std::to_string(p) + ")");
  }
  std::vector<std::uint32_t> roots;
  if (p == 2) {
    for (std::uint32_t x = 0; x < 2; ++x) {
      std::uint32_t v = 0;
      for (std::size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % 2;
      if (v == 0) roots.push_back(x);
    }
  } else {
    std::mt19937_64 rng(seed);
    equal_degree_split(f, p, rng, roots);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace poly

// ---------------------------------------------------------------------------
// Prime selection, center, decomposition

std::uint32_t select_prime(std::uint64_t exponent, std::uint64_t order, std::uint64_t search_limit) {
  if (exponent == 0 || order == 0) throw Error(ErrorCode::InvalidArgument, "exponent and order must be positive");
  for (std::uint64_t l = exponent + 1; l <= search_limit; l += exponent) {
    if (!numth::is_prime(l)) continue;
    if (order % l == 0) throw Error(ErrorCode::Internal, "selected prime divides the group order");
    if (l >= (1u << 31)) break;
    return static_cast<std::uint32_t>(l);
  }
  throw Error(ErrorCode::CapExceeded, "no prime = 1 mod " + std::to_string(exponent) + " below search limit");
}

std::vector<Vec> center(const StructureConstantAlgebra& a) {
  const std::size_t dim = a.dim();
  const std::uint32_t p = a.prime();
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < dim; ++i) basis.push_back(a.basis_vector(i));

  for (std::size_t j = 0; j < dim && !basis.empty(); ++j) {
    // Restrict the current solution space to {v : v b_j = b_j v}.
    const std::size_t n = basis.size();
    Echelon ech(p, dim);
    std::vector<Vec> next;
    for (std::size_t t = 0; t < n; ++t) {
      Vec row = a.multiply_right_basis(basis[t], j);
      const Vec left = a.multiply_left_basis(j, basis[t]);
      for (std::size_t k = 0; k < dim; ++k) row[k] = sub_mod(row[k], left[k], p);
      row.resize(dim + n, 0);
      row[dim + t] = 1;
      if (!ech.reduce(row)) {
        ech.insert_reduced(std::move(row));
        continue;
      }
      Vec v(dim, 0);
      for (std::size_t s = 0; s <= t; ++s) {
        const std::uint32_t c = row[dim + s];
        if (c == 0) continue;
        for (std::size_t k = 0; k < dim; ++k) {
          if (basis[s][k] != 0) v[k] = add_mod(v[k], mul_mod(c, basis[s][k], p), p);
        }
      }
      next.push_back(std::move(v));
    }
    basis = std::move(next);
  }
  return basis;
}

namespace {

struct MinPoly {
  poly::Poly coeffs;        // monic, degree d
  std::vector<Vec> powers;  // e, w, ..., w^{d-1}
};

// Minimal polynomial of w inside the algebra e A e with identity e.
MinPoly minimal_polynomial(const StructureConstantAlgebra& a, const Vec& e, const Vec& w, std::size_t max_degree) {
  const std::size_t dim = a.dim();
  const std::uint32_t p = a.prime();
  Echelon ech(p, dim);
  MinPoly out;
  Vec power = e;
  for (std::size_t k = 0; k <= max_degree; ++k) {
    Vec row = power;
    row.resize(dim + max_degree + 1, 0);
    row[dim + k] = 1;
    if (ech.reduce(row)) {
      out.coeffs.assign(row.begin() + static_cast<std::ptrdiff_t>(dim),
                        row.begin() + static_cast<std::ptrdiff_t>(dim + k + 1));
      return out;
    }
    ech.insert_reduced(std::move(row));
    out.powers.push_back(power);
    power = a.multiply(power, w);
  }
  throw Error(ErrorCode::Decomposition, "minimal polynomial degree exceeds the center dimension");
}

}  // namespace

DecompositionResult decompose(const StructureConstantAlgebra& a, std::uint64_t seed, unsigned retries) {
  const std::size_t dim = a.dim();
  const std::uint32_t p = a.prime();
  const auto z_basis = center(a);
  const std::size_t c = z_basis.size();

  std::mt19937_64 rng(seed);
  std::vector<Vec> idempotents{a.unit()};
  unsigned failures = 0;
  while (idempotents.size() < c) {
    Vec z(dim, 0);
    for (const auto& b : z_basis) {
      const auto r = static_cast<std::uint32_t>(rng() % p);
      for (std::size_t k = 0; k < dim; ++k) z[k] = add_mod(z[k], mul_mod(r, b[k], p), p);
    }
    std::vector<Vec> refined;
    for (const auto& e : idempotents) {
      const Vec w = a.multiply(z, e);
      auto mp = minimal_polynomial(a, e, w, c);
      const std::size_t deg = mp.coeffs.size() - 1;
      if (deg <= 1) {
        refined.push_back(e);
        continue;
      }
      const auto roots = poly::split_roots(mp.coeffs, p, rng());
      for (std::size_t r = 0; r < roots.size(); ++r) {
        // Lagrange basis polynomial for roots[r], evaluated at w.
        poly::Poly lag{1};
        std::uint32_t denom = 1;
        for (std::size_t s = 0; s < roots.size(); ++s) {
          if (s == r) continue;
          lag = poly::mul(lag, {sub_mod(0, roots[s], p), 1}, p);
          denom = mul_mod(denom, sub_mod(roots[r], roots[s], p), p);
        }
        const std::uint32_t scale = inv_mod(denom, p);
        Vec idem(dim, 0);
        for (std::size_t k = 0; k < lag.size(); ++k) {
          const std::uint32_t coef = mul_mod(lag[k], scale, p);
          if (coef == 0) continue;
          for (std::size_t t = 0; t < dim; ++t) idem[t] = add_mod(idem[t], mul_mod(coef, mp.powers[k][t], p), p);
        }
        refined.push_back(std::move(idem));
      }
    }
    if (refined.size() == idempotents.size()) {
      if (++failures >= retries) {
        throw Error(ErrorCode::Decomposition,
                    "retry budget exhausted separating central idempotents; algebra may not be split semisimple");
      }
    } else {
      failures = 0;
    }
    idempotents = std::move(refined);
  }
  if (idempotents.size() != c) throw Error(ErrorCode::Internal, "more idempotents than the center dimension");

  std::vector<std::uint64_t> degrees;
  for (const auto& e : idempotents) {
    Echelon ech(p, dim);
    for (std::size_t j = 0; j < dim; ++j) ech.insert(a.multiply_left_basis(j, e));
    const auto d = numth::exact_sqrt(ech.rank());
    if (!d) {
      throw Error(ErrorCode::Decomposition, "simple component of non-square dimension " + std::to_string(ech.rank()));
    }
    degrees.push_back(*d);
  }
  DecompositionResult result{DegreeMultiset(std::move(degrees)), c, p, idempotents.size()};
  if (result.degrees.sum_of_squares() != dim) {
    throw Error(ErrorCode::Decomposition, "component dimensions do not add up to the algebra dimension");
  }
  return result;
}

DegreeMultiset group_character_degrees(const perm::Group& g, std::uint32_t prime, std::uint64_t seed) {
  if (g.is_abelian()) return DegreeMultiset(std::vector<std::uint64_t>(g.order(), 1));
  return decompose(StructureConstantAlgebra::group_algebra(g, prime), seed).degrees;
}

}  // namespace smashkit::wedderburn
