#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace latmut {

using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                          boost::multiprecision::et_off>;

// Raised when an operation is called outside its domain.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when input text or JSON cannot be parsed.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a relation certificate does not expand to zero.
struct CertificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Int gcd(const Int& a, const Int& b);
Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);
Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);
bool is_integral(const Rat& q);

// C(n, k) for any integer n (falling factorial over k!), zero for k < 0.
Int binom(const Int& n, long k);

long to_long(const Int& v);
std::string to_string(const Int& v);
// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rat& q);
Rat parse_rat(const std::string& s);
// n/d; avoids the two-argument constructor, which is unreliable in some Boost releases.
Rat make_rat(const Int& n, const Int& d);

}  // namespace latmut
