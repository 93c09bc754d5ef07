#include "exotic/numeric.hpp"

#include <cmath>
#include <sstream>
#include <type_traits>

namespace exotic {

HighFloat hp_from_rational(const Rat& q) {
    // Through strings to keep full precision for big integers.
    HighFloat num(q.get_num().get_str());
    HighFloat den(q.get_den().get_str());
    return num / den;
}

HighFloat hp_sqrt(const HighFloat& x) {
    using boost::multiprecision::sqrt;
    return sqrt(x);
}

namespace {

template <typename Float>
Float to_float(const Rat& q) {
    if constexpr (std::is_same_v<Float, HighFloat>)
        return hp_from_rational(q);
    else
        return q.get_d();
}

template <typename Float>
Float fabs_any(Float x) {
    return x < 0 ? Float(-x) : x;
}

// First continued-fraction convergent of t with denominator <= max_den that
// lands within eps.
template <typename Float>
std::optional<Rat> rationalize(Float t, long max_den, Float eps) {
    if (t < 0) return std::nullopt;
    Int p0(0), q0(1), p1(1), q1(0);
    Float x = t;
    for (int iter = 0; iter < 64; ++iter) {
        Float fl = floor(x);
        if (fl > Float(1e18)) break;
        Int a(static_cast<long>(fl));
        Int p2 = a * p1 + p0;
        Int q2 = a * q1 + q0;
        if (q2 > max_den) break;
        Rat approx(p2, q2);
        approx.canonicalize();
        if (fabs_any<Float>(to_float<Float>(approx) - t) <= eps) return approx;
        Float frac = x - fl;
        if (frac <= Float(0)) break;
        x = Float(1) / frac;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    return std::nullopt;
}

template <typename Float>
std::optional<SqrtRational> recognize_impl(Float x, long max_den, double tolerance) {
    Float ax = fabs_any<Float>(x);
    Float tol(tolerance);
    if (ax <= tol) return SqrtRational{1, Rat(0)};
    int sign = x < 0 ? -1 : 1;
    auto sq = rationalize<Float>(ax * ax, max_den, tol);
    if (!sq) return std::nullopt;
    Float rec = sqrt(to_float<Float>(*sq));
    if (fabs_any<Float>(rec - ax) > tol) return std::nullopt;
    return SqrtRational{sign, *sq};
}

} // namespace

std::optional<SqrtRational> recognize_sqrt_rational(double x, long max_denominator,
                                                    const NumericConfig& cfg) {
    return recognize_impl<double>(x, max_denominator, cfg.tolerance);
}

std::optional<SqrtRational> recognize_sqrt_rational(const HighFloat& x, long max_denominator,
                                                    const NumericConfig& cfg) {
    return recognize_impl<HighFloat>(x, max_denominator, cfg.tolerance);
}

std::string decimal_string(const HighFloat& x, int significant_digits) {
    std::ostringstream os;
    os.precision(significant_digits);
    os << x;
    return os.str();
}

} // namespace exotic
