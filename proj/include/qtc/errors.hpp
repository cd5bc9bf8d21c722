#ifndef QTC_ERRORS_HPP
#define QTC_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace qtc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// gf
struct NotPrimePower : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct ZeroElement : Error { using Error::Error; };

// poly
struct DivisionByZeroPoly : Error { using Error::Error; };
struct NotMonic : Error { using Error::Error; };
struct NotDivisible : Error {
    NotDivisible(const std::string& msg, std::vector<unsigned> rem)
        : Error(msg), remainder(std::move(rem)) {}
    std::vector<unsigned> remainder;  // canonical encodings, ascending degree
};

// twistulant
struct RingMismatch : Error { using Error::Error; };

// simplex
struct NotPrimitive : Error { using Error::Error; };
struct BadDegree : Error { using Error::Error; };
struct NotDivisor : Error { using Error::Error; };
struct NotSimplex : Error { using Error::Error; };

// qtconstruct
struct BadP : Error { using Error::Error; };
struct DuplicateSelection : Error { using Error::Error; };
struct NotCodeword : Error { using Error::Error; };

// analyze
struct TooLarge : Error {
    TooLarge(const std::string& msg, unsigned long long sz) : Error(msg), size(sz) {}
    unsigned long long size;  // the q^k that exceeded the cap
};
struct ZeroDimensional : Error { using Error::Error; };
struct BadGeometry : Error { using Error::Error; };

// bounds
struct BadInput : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct GapMismatch : Error { using Error::Error; };

// cli / serialization
struct ParseError : Error { using Error::Error; };

}  // namespace qtc

#endif
