#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace sequiv {

/// Arbitrary-precision signed integer used for every matrix and polynomial entry.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an operation is called outside its domain (bad sizes, non-unimodular
/// basis change, invalid Seifert matrix, out-of-range strand index, ...).
class precondition_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a text file does not follow its line format.
class parse_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline int sign(const Integer &x) { return x.sign(); }

inline Integer abs_value(const Integer &x) { return x < 0 ? Integer(-x) : x; }

inline std::string to_string(const Integer &x) { return x.str(); }

} // namespace sequiv
