#include "smashkit/gf.hpp"

#include <array>
#include <sstream>

#include "smashkit/error.hpp"
#include "smashkit/numth.hpp"

namespace smashkit::gf {
namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of a by monic-or-not b over GF(p); b nonzero.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = numth::invmod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * b[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

Poly digits(std::uint64_t k, std::uint32_t p, unsigned len) {
  Poly out(len);
  for (unsigned i = 0; i < len; ++i) {
    out[i] = static_cast<std::uint32_t>(k % p);
    k /= p;
  }
  return out;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    const std::uint64_t count = numth::ipow(p, d);
    for (std::uint64_t k = 0; k < count; ++k) {
      Poly g = digits(k, p, d);
      g.push_back(1);
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly least_irreducible(std::uint32_t p, unsigned h) {
  const std::uint64_t count = numth::ipow(p, h);
  for (std::uint64_t k = 0; k < count; ++k) {
    Poly f = digits(k, p, h);
    f.push_back(1);
    if (h == 1 || is_irreducible(f, p)) return f;
  }
  throw Error(ErrorCode::Internal, "no irreducible polynomial found");
}

using Mat = std::array<std::uint32_t, 4>;

Mat mat_mul(const Field& F, const Mat& a, const Mat& b) {
  return {F.add(F.mul(a[0], b[0]), F.mul(a[1], b[2])), F.add(F.mul(a[0], b[1]), F.mul(a[1], b[3])),
          F.add(F.mul(a[2], b[0]), F.mul(a[3], b[2])), F.add(F.mul(a[2], b[1]), F.mul(a[3], b[3]))};
}

Mat mat_pow(const Field& F, Mat a, std::uint64_t e) {
  Mat r{1, 0, 0, 1};
  while (e > 0) {
    if (e & 1) r = mat_mul(F, r, a);
    a = mat_mul(F, a, a);
    e >>= 1;
  }
  return r;
}

bool is_identity(const Mat& m) { return m[0] == 1 && m[1] == 0 && m[2] == 0 && m[3] == 1; }

}  // namespace

FieldPtr Field::create(std::uint64_t p, unsigned h, std::uint64_t cap) {
  if (!numth::is_prime(p)) {
    throw Error(ErrorCode::InvalidArgument, "field characteristic " + std::to_string(p) + " is not prime");
  }
  if (h < 1) throw Error(ErrorCode::InvalidArgument, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < h; ++i) {
    q *= p;
    if (q > cap) {
      throw Error(ErrorCode::CapExceeded,
                  "field size " + std::to_string(p) + "^" + std::to_string(h) + " exceeds cap " + std::to_string(cap));
    }
  }
  auto modulus = least_irreducible(static_cast<std::uint32_t>(p), h);
  return FieldPtr(new Field(static_cast<std::uint32_t>(p), h, std::move(modulus)));
}

Field::Field(std::uint32_t p, unsigned h, std::vector<std::uint32_t> modulus)
    : p_(p), h_(h), q_(static_cast<std::uint32_t>(numth::ipow(p, h))), modulus_(std::move(modulus)) {
  pow_p_.resize(h_ + 1);
  pow_p_[0] = 1;
  for (unsigned i = 1; i <= h_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;
}

std::vector<std::uint32_t> Field::coeffs(std::uint32_t a) const { return digits(a, p_, h_); }

std::uint32_t Field::pack(std::span<const std::uint32_t> c) const {
  if (c.size() > h_) throw Error(ErrorCode::InvalidArgument, "too many coefficients for field element");
  std::uint32_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= p_) throw Error(ErrorCode::InvalidArgument, "coefficient out of range");
    v = v * p_ + c[i];
  }
  return v;
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
  if (h_ == 1) return (a + b) % p_;
  std::uint32_t r = 0;
  for (unsigned i = 0; i < h_; ++i) {
    r += ((a % p_ + b % p_) % p_) * pow_p_[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

std::uint32_t Field::neg(std::uint32_t a) const {
  if (h_ == 1) return (p_ - a) % p_;
  std::uint32_t r = 0;
  for (unsigned i = 0; i < h_; ++i) {
    r += ((p_ - a % p_) % p_) * pow_p_[i];
    a /= p_;
  }
  return r;
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
  if (h_ == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  const Poly x = digits(a, p_, h_);
  const Poly y = digits(b, p_, h_);
  Poly prod(2 * h_ - 1, 0);
  for (unsigned i = 0; i < h_; ++i) {
    if (x[i] == 0) continue;
    for (unsigned j = 0; j < h_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{x[i]} * y[j]) % p_);
    }
  }
  const Poly r = poly_rem(prod, modulus_, p_);
  return pack(r);
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return pow(a, q_ - 2);
}

std::uint64_t Field::order(std::uint32_t a) const {
  if (a == 0) throw Error(ErrorCode::InvalidArgument, "order of zero is undefined");
  std::uint64_t k = 1;
  for (std::uint32_t x = a; x != 1; x = mul(x, a)) ++k;
  return k;
}

std::uint32_t Field::primitive_element() const {
  for (std::uint32_t a = 1; a < q_; ++a) {
    if (order(a) == q_ - 1) return a;
  }
  throw Error(ErrorCode::Internal, "no primitive element");
}

std::string Field::to_string(std::uint32_t a) const {
  if (h_ == 1) return std::to_string(a);
  const Poly c = coeffs(a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

FieldElement::FieldElement(FieldPtr field, std::uint32_t value) : field_(std::move(field)), value_(value) {
  if (!field_) throw Error(ErrorCode::InvalidArgument, "null field");
  if (value_ >= field_->q()) throw Error(ErrorCode::InvalidArgument, "element out of range");
}

FieldElement FieldElement::from_coeffs(FieldPtr field, std::span<const std::uint32_t> coeffs) {
  const auto v = field->pack(coeffs);
  return FieldElement(std::move(field), v);
}

void FieldElement::check_same(const FieldElement& o) const {
  if (field_ != o.field_ && !field_->same_as(*o.field_)) {
    throw Error(ErrorCode::ContextMismatch, "field elements belong to different fields");
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->sub(value_, o.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->mul(value_, o.value_)};
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }

FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }

std::uint64_t FieldElement::order() const { return field_->order(value_); }

bool FieldElement::operator==(const FieldElement& o) const {
  return value_ == o.value_ && (field_ == o.field_ || field_->same_as(*o.field_));
}

std::uint64_t companion_order(const Field& F, std::uint32_t mu, std::uint32_t lambda) {
  if (lambda == 0) return 0;
  const Mat x{0, 1, F.neg(lambda), F.neg(mu)};
  // The order divides |GL_2(q)|; reduce from that bound prime by prime.
  const std::uint64_t q = F.q();
  std::uint64_t n = q * (q - 1) * (q * q - 1);
  for (auto [r, e] : numth::factor(n)) {
    for (unsigned i = 0; i < e && n % r == 0; ++i) {
      if (!is_identity(mat_pow(F, x, n / r))) break;
      n /= r;
    }
  }
  return n;
}

QuadraticPoly find_primitive_quadratic(const FieldPtr& field) {
  const std::uint64_t target = std::uint64_t{field->q()} * field->q() - 1;
  for (std::uint32_t mu = 0; mu < field->q(); ++mu) {
    for (std::uint32_t lambda = 1; lambda < field->q(); ++lambda) {
      if (companion_order(*field, mu, lambda) == target) {
        return {FieldElement(field, mu), FieldElement(field, lambda), true};
      }
    }
  }
  throw Error(ErrorCode::Internal, "no primitive quadratic found");
}

}  // namespace smashkit::gf
