#include "gfrob/rational.hpp"

#include "gfrob/errors.hpp"

namespace gfrob {

namespace {

BigInt parse_integer(std::string_view s) {
    if (s.empty())
        throw ParseError("empty integer");
    size_t pos = 0;
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        pos = 1;
    }
    if (pos == s.size())
        throw ParseError("sign without digits in '" + std::string(s) + "'");
    BigInt value = 0;
    for (; pos < s.size(); ++pos) {
        if (s[pos] < '0' || s[pos] > '9')
            throw ParseError("bad integer '" + std::string(s) + "'");
        value = value * 10 + (s[pos] - '0');
    }
    return negative ? BigInt(-value) : value;
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

std::string rational_to_string(const Rational& value) {
    return value.str();
}

} // namespace gfrob
