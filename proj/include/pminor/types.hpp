#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace pminor {

// Exact arithmetic everywhere; principal-minor equality is decided exactly.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when an operation would exceed a configured enumeration cap.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pminor
