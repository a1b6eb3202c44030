#ifndef ALGC_RATIONAL_HPP
#define ALGC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace algc {

// Exact scalars. cpp_rational keeps fractions reduced with a positive
// denominator, which is exactly the canonical form the engine relies on.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct AlignmentError : Error {
    explicit AlignmentError(const std::string& what) : Error(what) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(what) {}
};

struct DegreeOverflow : Error {
    explicit DegreeOverflow(const std::string& what) : Error(what) {}
};

inline std::string to_string(const Rational& q) { return q.str(); }

// Parses "a" or "a/b" with optional sign.
Rational parse_rational(const std::string& text);

} // namespace algc

#endif
