#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <string>

namespace pmd {

/// Exact rational scalar used everywhere; no floating point in the core.
using Rational = boost::multiprecision::mpq_rational;

using MatrixXq = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXq = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Canonical reduced-fraction string: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& value);

/// Parses "p" or "p/q" (reduced or not); throws Errc::parse_error on malformed input.
Rational rational_from_string(const std::string& text);

} // namespace pmd
