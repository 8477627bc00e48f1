#include "eqc/numeric.hpp"

#include <cctype>
#include <limits>

#include "eqc/errors.hpp"

namespace eqc {

long mod_floor(const Integer& a, long m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r.get_si();
}

long mod_floor(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits_int64(const Integer& a) {
    static const Integer lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
    static const Integer hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
    return a >= lo && a <= hi;
}

std::int64_t to_int64(const Integer& a) {
    if (!fits_int64(a)) throw DomainError(ErrorCode::InvalidInput, "integer out of 64-bit range");
    return std::stoll(a.get_str());
}

std::string to_string(const Integer& a) { return a.get_str(); }

std::string to_string(const Rational& a) {
    Rational c(a);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {

bool valid_integer_text(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Integer parse_integer(const std::string& text) {
    if (!valid_integer_text(text)) throw DomainError(ErrorCode::InvalidInput, "not an integer: " + text);
    return Integer(text[0] == '+' ? text.substr(1) : text);
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw DomainError(ErrorCode::InvalidInput, "zero denominator: " + text);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational frac(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& a) {
    Rational c(a);
    c.canonicalize();
    return c.get_den() == 1;
}

}  // namespace eqc
