#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Dense>

#include <string>
#include <string_view>
#include <vector>

namespace srr {

/// Exact rational backed by GMP. Always canonical: reduced, positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalVector = std::vector<Rational>;

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Accepts "p", "-p" and "p/q". Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

/// Comma-separated list of rationals ("1,1/2,0").
RationalVector parse_rational_list(std::string_view text);

inline bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

}  // namespace srr
