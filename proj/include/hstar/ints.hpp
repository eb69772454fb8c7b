#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hstar {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Error kinds surfaced by the CLI as machine-parsable records.
enum class ErrorKind {
    Shape,         // malformed matrix/vector dimensions
    Singular,      // singular system where nonsingular required
    Simpliciality, // polytope is not simplicial where required
    Budget,        // combinatorial guard or search budget exceeded
    Domain,        // parameter outside a family's domain
    Format,        // malformed input document
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }
    const char* kind_name() const {
        switch (kind_) {
        case ErrorKind::Shape: return "shape";
        case ErrorKind::Singular: return "singular";
        case ErrorKind::Simpliciality: return "simpliciality";
        case ErrorKind::Budget: return "budget";
        case ErrorKind::Domain: return "domain";
        case ErrorKind::Format: return "format";
        }
        return "unknown";
    }

  private:
    ErrorKind kind_;
};

inline Int int_gcd(Int a, Int b) {
    using boost::multiprecision::abs;
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// Floor/ceil division with sign-correct rounding (C++ '/' truncates).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) == (b < 0))) ++q;
    return q;
}

inline std::int64_t floor_div_i64(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline std::int64_t ceil_div_i64(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b, r = a % b;
    if (r != 0 && ((r < 0) == (b < 0))) ++q;
    return q;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i; // exact at every step
    }
    return result;
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (Int p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

// Fractional part in [0,1).
inline Rat frac(const Rat& x) {
    Int fl = floor_div(boost::multiprecision::numerator(x),
                       boost::multiprecision::denominator(x));
    return x - Rat(fl);
}

} // namespace hstar
