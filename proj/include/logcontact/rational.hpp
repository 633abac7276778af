#ifndef LOGCONTACT_RATIONAL_HPP
#define LOGCONTACT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace logcontact {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed expression or file input; carries the byte offset when known.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " at offset " + std::to_string(offset)), offset(offset) {}
    explicit ParseError(const std::string& msg) : Error(msg), offset(0) {}
    std::size_t offset;
};

/// Domain violation in user-supplied data (division by zero, chart mismatch,
/// out-of-range parameters).
struct ValueError : Error {
    using Error::Error;
};

/// Breach of an internal structural invariant; signals a bug or a
/// mathematically impossible object (e.g. a rank-2 bundle with c3 != 0).
struct InvariantError : Error {
    using Error::Error;
};

inline Int rational_num(const Rational& q) { return numerator(q); }
inline Int rational_den(const Rational& q) { return denominator(q); }

inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const Int& n) { return n.str(); }

} // namespace logcontact

#endif
