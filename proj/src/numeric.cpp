#include "latmut/numeric.hpp"

#include <limits>

namespace latmut {

Int gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(abs(a), abs(b));
}

Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw PreconditionError("division by zero");
    Int q = a / b;
    Int r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    return -floor_div(-a, b);
}

Int floor_rat(const Rat& q) {
    return floor_div(numerator(q), denominator(q));
}

Int ceil_rat(const Rat& q) {
    return ceil_div(numerator(q), denominator(q));
}

bool is_integral(const Rat& q) {
    return denominator(q) == 1;
}

Int binom(const Int& n, long k) {
    if (k < 0) return 0;
    if (n >= 0 && n < k) return 0;
    Int num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= (n - i);
        den *= (i + 1);
    }
    return num / den;
}

long to_long(const Int& v) {
    if (v > std::numeric_limits<long>::max() || v < std::numeric_limits<long>::min())
        throw PreconditionError("integer out of machine range: " + v.str());
    return v.convert_to<long>();
}

std::string to_string(const Int& v) {
    return v.str();
}

std::string to_string(const Rat& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

static Int parse_int_strict(const std::string& s) {
    if (s.empty()) throw ParseError("empty number");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw ParseError("bad number '" + s + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') throw ParseError("bad number '" + s + "'");
    Int v(s[0] == '+' ? s.substr(1) : s);
    return v;
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int_strict(s));
    Int p = parse_int_strict(s.substr(0, slash));
    Int q = parse_int_strict(s.substr(slash + 1));
    if (q == 0) throw ParseError("zero denominator in '" + s + "'");
    return make_rat(p, q);
}

Rat make_rat(const Int& n, const Int& d) {
    if (d == 0) throw PreconditionError("zero denominator");
    return Rat(n) / Rat(d);
}

}  // namespace latmut
