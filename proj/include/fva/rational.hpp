#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace fva {

// Expression templates are off so that `auto` always yields a value.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses "p", "-p" or "p/q" (q > 0) exactly. Decimal notation is rejected.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rational& r);

inline Rational make_rational(long num, long den = 1) {
    return Rational(num) / Rational(den);
}

BigInt numerator_of(const Rational& r);
BigInt denominator_of(const Rational& r);

} // namespace fva
