#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "smashkit/gf.hpp"
#include "smashkit/permgrp.hpp"

namespace smashkit::lin {

/// 2x2 matrix over GF(q), row-major.
class Mat2 {
 public:
  Mat2(gf::FieldPtr field, std::array<std::uint32_t, 4> entries);

  static Mat2 identity(gf::FieldPtr field);
  static Mat2 companion(const gf::QuadraticPoly& poly);

  const gf::FieldPtr& field() const noexcept { return field_; }
  std::uint32_t raw(std::size_t row, std::size_t col) const { return e_[row * 2 + col]; }
  gf::FieldElement at(std::size_t row, std::size_t col) const { return {field_, raw(row, col)}; }

  Mat2 operator*(const Mat2& rhs) const;
  std::uint32_t det() const;
  bool is_invertible() const { return det() != 0; }

  friend bool operator==(const Mat2& a, const Mat2& b) { return a.e_ == b.e_ && a.field_->same_as(*b.field_); }

 private:
  gf::FieldPtr field_;
  std::array<std::uint32_t, 4> e_;
};

/// Points of P^1(q): index t < q is [1 : t] (t a packed field element),
/// index q is [0 : 1]. Index 0 is therefore [1 : 0].
class ProjLine {
 public:
  explicit ProjLine(gf::FieldPtr field) : field_(std::move(field)) {}

  std::size_t size() const noexcept { return std::size_t{field_->q()} + 1; }
  const gf::FieldPtr& field() const noexcept { return field_; }

  /// Column vector (x, y) of the given point.
  std::array<std::uint32_t, 2> point(perm::Point i) const;
  /// Index of the point spanned by a nonzero (x, y).
  perm::Point index_of(std::uint32_t x, std::uint32_t y) const;

 private:
  gf::FieldPtr field_;
};

/// Permutation of the projective line induced by v -> m v.
perm::Permutation mat_to_projective_perm(const Mat2& m, const ProjLine& line);

struct Pgl2Package {
  std::uint32_t q = 0;
  gf::FieldPtr field;
  gf::QuadraticPoly poly;
  ProjLine line;
  perm::Group G;  ///< PGL_2(q) on q + 1 points
  perm::Group C;  ///< Singer cycle, order q + 1
  perm::Group S;  ///< stabilizer of [1 : 0], order q(q - 1)
  perm::Group U;  ///< unipotent radical of S, order q
  perm::Permutation xbar;
};

/// Builds PGL_2(q) with its Singer cycle and point stabilizer, verifying the
/// exact factorization G = S C.
Pgl2Package build_pgl2(std::uint64_t q, const perm::Caps& caps = {});

struct GlnPackage {
  unsigned n = 0;
  perm::Group G;       ///< GL_n(2) on the 2^n - 1 nonzero vectors
  perm::Group singer;  ///< cyclic of order 2^n - 1
  perm::Permutation singer_generator;
  std::uint32_t primitive_poly = 0;  ///< bit i = coefficient of X^i, including X^n
};

GlnPackage build_gln2(unsigned n, const perm::Caps& caps = {});

/// |N_G(S)| for G = GL_n(2) and S its Singer subgroup, by filtering all of G.
std::uint64_t singer_normalizer_order(unsigned n, const perm::Caps& caps = {});

}  // namespace smashkit::lin
