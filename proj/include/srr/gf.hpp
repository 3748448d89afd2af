#pragma once

#include "srr/rational.hpp"

#include <cstdint>
#include <optional>

namespace srr {

/// Characteristic of a prime field GF(q). Construction verifies q is a prime below 2^31.
class FieldModulus {
 public:
  explicit FieldModulus(std::int64_t q);

  std::int64_t value() const { return q_; }
  friend bool operator==(const FieldModulus&, const FieldModulus&) = default;

 private:
  std::int64_t q_;
};

bool is_prime(std::int64_t q);

class FieldElement {
 public:
  /// Reduces `value` into [0, q).
  FieldElement(std::int64_t value, FieldModulus modulus);

  std::int64_t value() const { return value_; }
  const FieldModulus& modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  std::int64_t value_;
  FieldModulus modulus_;
};

// All binary operations throw std::invalid_argument on modulus mismatch.
FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
/// Throws std::domain_error for zero.
FieldElement inv(const FieldElement& a);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return sub(a, b); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return mul(a, b); }

/// Column of field values, entries already reduced into [0, q).
using GfColumn = VectorX<std::int64_t>;

bool is_zero_column(const Eigen::Ref<const GfColumn>& v);

/// Nonzero c with u = c * v, if one exists. Throws std::invalid_argument if either
/// column is zero or the lengths differ.
std::optional<FieldElement> is_scalar_multiple(const Eigen::Ref<const GfColumn>& u,
                                               const Eigen::Ref<const GfColumn>& v,
                                               FieldModulus modulus);

/// a * u + b * v over GF(q).
GfColumn axpy(std::int64_t a, const Eigen::Ref<const GfColumn>& u, std::int64_t b,
              const Eigen::Ref<const GfColumn>& v, FieldModulus modulus);

}  // namespace srr
