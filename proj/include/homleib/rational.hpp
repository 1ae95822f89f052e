#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace homleib {

/// Exact rational scalar. Canonical form (reduced, positive denominator) is
/// maintained by the backend on every operation.
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

using BigInt = boost::multiprecision::cpp_int;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input (files, rational strings, bad shapes). CLI exit code 2.
struct parse_error : error {
    using error::error;
};

/// Computation refused because it would exceed the coordinate cap. CLI exit code 3.
struct cap_error : error {
    using error::error;
};

/// A typed construction whose validating axiom check failed. CLI exit code 1.
struct validation_error : error {
    using error::error;
};

/// Grammar: optional leading '-', digits, optionally '/' and a nonzero
/// unsigned denominator. No whitespace, no floats.
Rational parse_rational(std::string_view text);

/// Canonical form: "p" when the denominator is 1, else "p/q" with q > 0.
std::string format_rational(const Rational& value);

}  // namespace homleib
