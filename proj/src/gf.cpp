#include "srr/gf.hpp"

#include <stdexcept>
#include <string>

namespace srr {

bool is_prime(std::int64_t q) {
  if (q < 2) return false;
  for (std::int64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

FieldModulus::FieldModulus(std::int64_t q) : q_(q) {
  if (q >= (std::int64_t{1} << 31)) {
    throw std::invalid_argument("q must be below 2^31, got " + std::to_string(q));
  }
  if (!is_prime(q)) throw std::invalid_argument("q must be prime, got " + std::to_string(q));
}

namespace {

std::int64_t reduce(std::int64_t v, std::int64_t q) {
  v %= q;
  return v < 0 ? v + q : v;
}

void check_same(const FieldElement& a, const FieldElement& b) {
  if (!(a.modulus() == b.modulus())) {
    throw std::invalid_argument("field modulus mismatch: GF(" + std::to_string(a.modulus().value()) +
                                ") vs GF(" + std::to_string(b.modulus().value()) + ")");
  }
}

}  // namespace

FieldElement::FieldElement(std::int64_t value, FieldModulus modulus)
    : value_(reduce(value, modulus.value())), modulus_(modulus) {}

FieldElement add(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return {a.value() + b.value(), a.modulus()};
}

FieldElement sub(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return {a.value() - b.value(), a.modulus()};
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return {a.value() * b.value(), a.modulus()};
}

FieldElement neg(const FieldElement& a) { return {-a.value(), a.modulus()}; }

FieldElement inv(const FieldElement& a) {
  if (a.is_zero()) throw std::domain_error("zero has no multiplicative inverse");
  // Extended Euclid on (a, q); the Bezout coefficient of a is the inverse.
  std::int64_t r0 = a.modulus().value(), r1 = a.value();
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t quot = r0 / r1;
    std::int64_t tmp = r0 - quot * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - quot * s1;
    s0 = s1;
    s1 = tmp;
  }
  return {s0, a.modulus()};
}

bool is_zero_column(const Eigen::Ref<const GfColumn>& v) { return (v.array() == 0).all(); }

std::optional<FieldElement> is_scalar_multiple(const Eigen::Ref<const GfColumn>& u,
                                               const Eigen::Ref<const GfColumn>& v,
                                               FieldModulus modulus) {
  if (u.size() != v.size()) throw std::invalid_argument("column length mismatch");
  if (is_zero_column(u) || is_zero_column(v)) throw std::invalid_argument("zero column");
  Eigen::Index pivot = 0;
  while (v(pivot) == 0) ++pivot;
  const FieldElement c = mul(FieldElement(u(pivot), modulus), inv(FieldElement(v(pivot), modulus)));
  if (c.is_zero()) return std::nullopt;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if ((c.value() * v(i)) % modulus.value() != u(i)) return std::nullopt;
  }
  return c;
}

GfColumn axpy(std::int64_t a, const Eigen::Ref<const GfColumn>& u, std::int64_t b,
              const Eigen::Ref<const GfColumn>& v, FieldModulus modulus) {
  if (u.size() != v.size()) throw std::invalid_argument("column length mismatch");
  const std::int64_t q = modulus.value();
  GfColumn out(u.size());
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    out(i) = reduce(reduce(a * u(i), q) + reduce(b * v(i), q), q);
  }
  return out;
}

}  // namespace srr
