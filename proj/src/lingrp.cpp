#include "smashkit/lingrp.hpp"

#include "smashkit/error.hpp"
#include "smashkit/numth.hpp"

namespace smashkit::lin {

using perm::Group;
using perm::Permutation;
using perm::Point;

Mat2::Mat2(gf::FieldPtr field, std::array<std::uint32_t, 4> entries) : field_(std::move(field)), e_(entries) {
  for (auto v : e_) {
    if (v >= field_->q()) throw Error(ErrorCode::InvalidArgument, "matrix entry out of range");
  }
}

Mat2 Mat2::identity(gf::FieldPtr field) { return Mat2(std::move(field), {1, 0, 0, 1}); }

Mat2 Mat2::companion(const gf::QuadraticPoly& poly) {
  const auto& F = poly.mu.field();
  return Mat2(F, {0, 1, F->neg(poly.lambda.value()), F->neg(poly.mu.value())});
}

Mat2 Mat2::operator*(const Mat2& b) const {
  if (!field_->same_as(*b.field_)) throw Error(ErrorCode::ContextMismatch, "matrices over different fields");
  const auto& F = *field_;
  return Mat2(field_, {F.add(F.mul(e_[0], b.e_[0]), F.mul(e_[1], b.e_[2])),
                       F.add(F.mul(e_[0], b.e_[1]), F.mul(e_[1], b.e_[3])),
                       F.add(F.mul(e_[2], b.e_[0]), F.mul(e_[3], b.e_[2])),
                       F.add(F.mul(e_[2], b.e_[1]), F.mul(e_[3], b.e_[3]))});
}

std::uint32_t Mat2::det() const { return field_->sub(field_->mul(e_[0], e_[3]), field_->mul(e_[1], e_[2])); }

std::array<std::uint32_t, 2> ProjLine::point(Point i) const {
  if (i > field_->q()) throw Error(ErrorCode::InvalidArgument, "projective point index out of range");
  if (i == field_->q()) return {0, 1};
  return {1, i};
}

Point ProjLine::index_of(std::uint32_t x, std::uint32_t y) const {
  if (x == 0) {
    if (y == 0) throw Error(ErrorCode::InvalidArgument, "zero vector has no projective point");
    return field_->q();
  }
  return field_->mul(y, field_->inv(x));
}

Permutation mat_to_projective_perm(const Mat2& m, const ProjLine& line) {
  if (!m.is_invertible()) throw Error(ErrorCode::InvalidArgument, "singular matrix");
  if (!m.field()->same_as(*line.field())) throw Error(ErrorCode::ContextMismatch, "matrix and line over different fields");
  const auto& F = *m.field();
  std::vector<Point> images(line.size());
  for (Point i = 0; i < images.size(); ++i) {
    const auto [x, y] = line.point(i);
    const auto nx = F.add(F.mul(m.raw(0, 0), x), F.mul(m.raw(0, 1), y));
    const auto ny = F.add(F.mul(m.raw(1, 0), x), F.mul(m.raw(1, 1), y));
    images[i] = line.index_of(nx, ny);
  }
  return Permutation(std::move(images));
}

Pgl2Package build_pgl2(std::uint64_t q, const perm::Caps& caps) {
  const auto pp = numth::prime_power(q);
  if (!pp) throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not a prime power");
  auto field = gf::Field::create(pp->first, pp->second);
  Pgl2Package pkg{static_cast<std::uint32_t>(q), field, gf::find_primitive_quadratic(field), ProjLine(field), {}, {}, {}, {}, {}};
  const auto& F = pkg.field;
  const std::size_t degree = pkg.line.size();

  const std::uint32_t xi = F->primitive_element();
  std::vector<Permutation> unipotent;
  for (unsigned i = 0; i < F->h(); ++i) {
    unipotent.push_back(mat_to_projective_perm(Mat2(F, {1, F->basis_element(i), 0, 1}), pkg.line));
  }
  std::vector<Permutation> borel = unipotent;
  borel.push_back(mat_to_projective_perm(Mat2(F, {xi, 0, 0, 1}), pkg.line));

  pkg.xbar = mat_to_projective_perm(Mat2::companion(pkg.poly), pkg.line);
  std::vector<Permutation> all = borel;
  all.push_back(mat_to_projective_perm(Mat2(F, {0, 1, 1, 0}), pkg.line));
  all.push_back(pkg.xbar);

  pkg.G = Group::from_generators(degree, all, caps);
  pkg.C = Group::from_generators(degree, {pkg.xbar}, caps);
  pkg.S = Group::from_generators(degree, borel, caps);
  pkg.U = Group::from_generators(degree, unipotent, caps);

  if (pkg.G.order() != q * (q - 1) * (q + 1) || pkg.C.order() != q + 1 || pkg.S.order() != q * (q - 1) ||
      pkg.U.order() != q) {
    throw Error(ErrorCode::Internal, "PGL_2(" + std::to_string(q) + ") package has unexpected subgroup orders");
  }
  for (std::uint64_t k = 1; k <= q; ++k) {
    if (pkg.S.contains(pkg.xbar.pow(static_cast<std::int64_t>(k)))) {
      throw Error(ErrorCode::Internal, "Singer cycle meets the point stabilizer");
    }
  }
  return pkg;
}

namespace {

// Column j of a GF(2) matrix is the image of e_j, as a bitmask.
Permutation gl2_perm(const std::vector<std::uint32_t>& cols) {
  const std::uint32_t count = (1u << cols.size()) - 1;
  std::vector<Point> images(count);
  for (std::uint32_t v = 1; v <= count; ++v) {
    std::uint32_t w = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (v >> j & 1) w ^= cols[j];
    }
    images[v - 1] = w - 1;
  }
  return Permutation(std::move(images));
}

std::vector<std::uint32_t> companion_cols(std::uint32_t poly, unsigned n) {
  // Multiplication by X on GF(2)[X]/(poly) in the basis 1, X, ..., X^{n-1}.
  std::vector<std::uint32_t> cols(n);
  for (unsigned j = 0; j + 1 < n; ++j) cols[j] = 1u << (j + 1);
  cols[n - 1] = poly & ((1u << n) - 1);
  return cols;
}

}  // namespace

GlnPackage build_gln2(unsigned n, const perm::Caps& caps) {
  if (n < 2 || n > 4) throw Error(ErrorCode::InvalidArgument, "GL_n(2) supported for n in {2, 3, 4}");
  GlnPackage pkg;
  pkg.n = n;
  const std::size_t degree = (std::size_t{1} << n) - 1;

  std::vector<Permutation> gens;
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      if (i == j) continue;
      std::vector<std::uint32_t> cols(n);
      for (unsigned k = 0; k < n; ++k) cols[k] = 1u << k;
      cols[j] ^= 1u << i;
      gens.push_back(gl2_perm(cols));
    }
  }
  pkg.G = Group::from_generators(degree, gens, caps);

  for (std::uint32_t low = 1; low < (1u << n); low += 2) {
    const std::uint32_t poly = (1u << n) | low;
    auto x = gl2_perm(companion_cols(poly, n));
    if (x.order() == degree) {
      pkg.primitive_poly = poly;
      pkg.singer_generator = x;
      pkg.singer = Group::from_generators(degree, {x}, caps);
      return pkg;
    }
  }
  throw Error(ErrorCode::Internal, "no primitive polynomial over GF(2)");
}

std::uint64_t singer_normalizer_order(unsigned n, const perm::Caps& caps) {
  const auto pkg = build_gln2(n, caps);
  std::uint64_t count = 0;
  for (const auto& g : pkg.G.elements()) {
    if (pkg.singer.contains(perm::conjugate(pkg.singer_generator, g))) ++count;
  }
  return count;
}

}  // namespace smashkit::lin
