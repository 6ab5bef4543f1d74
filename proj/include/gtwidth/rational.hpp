#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <string_view>

namespace gtwidth {

/// Exact rational scalar used throughout the lattice/polytope core.
using Rational = boost::multiprecision::mpq_rational;

using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using IntMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Parses "p", "-p" or "p/q". Anything float-like (".", "e") is rejected:
/// exactness is the point of this tool.
Rational parse_rational(std::string_view s);

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string rational_str(const Rational& q);

bool is_integer(const Rational& q);

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

}  // namespace gtwidth
