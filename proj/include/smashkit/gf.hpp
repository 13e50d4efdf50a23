#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace smashkit::gf {

inline constexpr std::uint64_t kDefaultFieldCap = std::uint64_t{1} << 16;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^h) in the polynomial basis over GF(p).
///
/// Elements are packed into [0, q) as base-p digit strings with the constant
/// coefficient least significant. The reduction modulus is the least monic
/// irreducible of degree h when candidates are ordered by that same packing.
/// Instances are immutable and safe to share across threads.
class Field {
 public:
  static FieldPtr create(std::uint64_t p, unsigned h, std::uint64_t cap = kDefaultFieldCap);

  std::uint32_t p() const noexcept { return p_; }
  unsigned h() const noexcept { return h_; }
  std::uint32_t q() const noexcept { return q_; }

  /// h + 1 coefficients, constant term first; the last one is 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  std::uint32_t zero() const noexcept { return 0; }
  std::uint32_t one() const noexcept { return 1; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  /// Multiplicative order by repeated multiplication.
  std::uint64_t order(std::uint32_t a) const;

  /// Least packed element of multiplicative order q - 1.
  std::uint32_t primitive_element() const;

  /// Packed X^i for i < h: the polynomial basis over GF(p).
  std::uint32_t basis_element(unsigned i) const { return pow_p_.at(i); }

  std::vector<std::uint32_t> coeffs(std::uint32_t a) const;
  std::uint32_t pack(std::span<const std::uint32_t> coeffs) const;

  std::string to_string(std::uint32_t a) const;

  bool same_as(const Field& other) const noexcept {
    return p_ == other.p_ && h_ == other.h_ && modulus_ == other.modulus_;
  }

 private:
  Field(std::uint32_t p, unsigned h, std::vector<std::uint32_t> modulus);

  std::uint32_t p_;
  unsigned h_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;
};

/// Value type binding a packed element to its field.
class FieldElement {
 public:
  FieldElement(FieldPtr field, std::uint32_t value);

  static FieldElement from_coeffs(FieldPtr field, std::span<const std::uint32_t> coeffs);

  const FieldPtr& field() const noexcept { return field_; }
  std::uint32_t value() const noexcept { return value_; }
  std::vector<std::uint32_t> coeffs() const { return field_->coeffs(value_); }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  std::uint64_t order() const;

  bool operator==(const FieldElement& o) const;

 private:
  void check_same(const FieldElement& o) const;

  FieldPtr field_;
  std::uint32_t value_;
};

/// X^2 + mu X + lambda over GF(q).
struct QuadraticPoly {
  FieldElement mu;
  FieldElement lambda;
  bool primitive = false;
};

/// Multiplicative order of the companion matrix [[0, 1], [-lambda, -mu]],
/// or 0 when it is singular.
std::uint64_t companion_order(const Field& field, std::uint32_t mu, std::uint32_t lambda);

/// Lexicographically least (mu, lambda) whose companion matrix has order q^2 - 1.
QuadraticPoly find_primitive_quadratic(const FieldPtr& field);

}  // namespace smashkit::gf
