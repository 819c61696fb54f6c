#include "fva/rational.hpp"

#include <cctype>

namespace fva {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                           : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("not an exact rational: '" + std::string(text) + "'");
    BigInt n{std::string(num)};
    BigInt d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    Rational r(n, d);
    return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) {
    return r.str();
}

BigInt numerator_of(const Rational& r) {
    return boost::multiprecision::numerator(r);
}

BigInt denominator_of(const Rational& r) {
    return boost::multiprecision::denominator(r);
}

} // namespace fva
