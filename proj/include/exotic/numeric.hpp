#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <complex>
#include <optional>
#include <string>

#include "exotic/rational.hpp"

namespace exotic {

// ~166-bit mantissa; covers the >=128-bit high-precision mode.
using HighFloat = boost::multiprecision::cpp_bin_float_50;

struct ComplexHP {
    HighFloat re{0}, im{0};
};

inline ComplexHP operator+(const ComplexHP& a, const ComplexHP& b) { return {a.re + b.re, a.im + b.im}; }
inline ComplexHP operator*(const ComplexHP& a, const ComplexHP& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline HighFloat abs(const ComplexHP& z) {
    using boost::multiprecision::sqrt;
    return sqrt(z.re * z.re + z.im * z.im);
}

enum class Precision { F64, HP };

// Floating point configuration threaded explicitly through every numeric
// operation; there are no hidden tolerance defaults inside operations.
struct NumericConfig {
    Precision precision = Precision::F64;
    double tolerance = 1e-9;

    static NumericConfig f64() { return {Precision::F64, 1e-9}; }
    static NumericConfig hp() { return {Precision::HP, 1e-30}; }
};

struct SqrtRational {
    int sign = 1;  // +1 or -1 (sign of the represented value s*sqrt(p/q))
    Rat square;    // p/q >= 0
};

// Recognize x ~ s*sqrt(p/q) with bounded denominator, by running the
// continued fraction expansion of x^2.  Absent result is a valid outcome.
std::optional<SqrtRational> recognize_sqrt_rational(double x, long max_denominator,
                                                    const NumericConfig& cfg);
std::optional<SqrtRational> recognize_sqrt_rational(const HighFloat& x, long max_denominator,
                                                    const NumericConfig& cfg);

// Decimal rendering with a fixed number of significant digits (deterministic,
// used for byte-stable file output).
std::string decimal_string(const HighFloat& x, int significant_digits = 30);

HighFloat hp_from_rational(const Rat& q);
HighFloat hp_sqrt(const HighFloat& x);

} // namespace exotic
