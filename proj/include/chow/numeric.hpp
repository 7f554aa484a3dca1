#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace chow {

// expression templates off: plain value semantics for std::min and friends
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using BigRat =
    boost::multiprecision::number<boost::multiprecision::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

/// Error type for all contract violations in the engine.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline BigInt numerator(const BigRat& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const BigRat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const BigRat& q) { return denominator(q) == 1; }

/// Converts an exact rational to an integer, throwing if it is not one.
inline BigInt to_integer(const BigRat& q, const char* context = "value") {
    if (!is_integer(q))
        throw Error(std::string(context) + " is not an integer: " + q.str());
    return numerator(q);
}

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

/// Binomial coefficient with the usual conventions: zero for k < 0,
/// and the generalized falling-factorial definition for negative n.
inline BigInt binomial(long long n, long long k) {
    if (k < 0) return 0;
    BigInt num = 1;
    for (long long i = 0; i < k; ++i) num *= BigInt(n - i);
    return num / factorial(static_cast<unsigned>(k));
}

inline BigInt gcd_big(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt abs_big(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline BigInt pow_int(const BigInt& base, unsigned exp) {
    BigInt r = 1, b = base;
    for (unsigned e = exp; e != 0; e >>= 1) {
        if (e & 1) r *= b;
        if (e > 1) b *= b;
    }
    return r;
}

/// The field with two elements.
struct F2 {
    std::uint8_t v = 0;

    F2() = default;
    F2(int x) : v(static_cast<std::uint8_t>(((x % 2) + 2) % 2)) {}
    explicit F2(const BigInt& x) : v(static_cast<std::uint8_t>(x % 2 != 0)) {}

    friend F2 operator+(F2 a, F2 b) { return F2(a.v ^ b.v); }
    friend F2 operator-(F2 a, F2 b) { return F2(a.v ^ b.v); }
    friend F2 operator*(F2 a, F2 b) { return F2(a.v & b.v); }
    F2& operator+=(F2 o) { v ^= o.v; return *this; }
    F2& operator-=(F2 o) { v ^= o.v; return *this; }
    F2& operator*=(F2 o) { v &= o.v; return *this; }
    friend bool operator==(F2 a, F2 b) { return a.v == b.v; }
    friend bool operator!=(F2 a, F2 b) { return a.v != b.v; }

    std::string str() const { return v ? "1" : "0"; }
};

inline bool coeff_is_zero(const BigInt& c) { return c == 0; }
inline bool coeff_is_zero(const BigRat& c) { return c == 0; }
inline bool coeff_is_zero(F2 c) { return c.v == 0; }

inline std::string coeff_str(const BigInt& c) { return c.str(); }
inline std::string coeff_str(const BigRat& c) { return c.str(); }
inline std::string coeff_str(F2 c) { return c.str(); }

} // namespace chow
