#pragma once

#include <complex>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "exotic/errors.hpp"
#include "exotic/numeric.hpp"
#include "exotic/rational.hpp"

namespace exotic {

/*
 * Exact arithmetic in the cyclotomic field Q(zeta_N).
 *
 * Elements are stored in the power basis 1, zeta, ..., zeta^(d-1) with
 * d = phi(N), reduced modulo the N-th cyclotomic polynomial.  One field
 * object exists per conductor (interned, immutable, safe to share across
 * threads); scalars hold a pointer to their field.
 */
class CycloField {
public:
    // Interned accessor; the returned reference lives for the whole program.
    static const CycloField& get(long conductor);

    long conductor() const { return n_; }
    long degree() const { return degree_; }

    // Monic cyclotomic polynomial Phi_N, coefficient vector of length degree+1.
    const std::vector<Int>& cyclotomic_polynomial() const { return phi_; }

    // Power-basis coordinates of zeta^t for degree <= t < N (integer rows).
    const std::vector<Int>& reduction_row(long t) const { return reduction_[t - degree_]; }

    std::complex<double> zeta_pow(long t) const;
    ComplexHP zeta_pow_hp(long t) const;

private:
    explicit CycloField(long n);

    long n_;
    long degree_;
    std::vector<Int> phi_;
    std::vector<std::vector<Int>> reduction_;
    std::vector<std::complex<double>> embed_;
    mutable std::vector<ComplexHP> embed_hp_;
    mutable std::once_flag hp_once_;
};

class Cyclo;
Cyclo operator+(const Cyclo& a, const Cyclo& b);
Cyclo operator-(const Cyclo& a, const Cyclo& b);
Cyclo operator*(const Cyclo& a, const Cyclo& b);
Cyclo operator/(const Cyclo& a, const Cyclo& b);

class Cyclo {
public:
    Cyclo() : field_(&CycloField::get(1)), coeffs_(1) {}
    Cyclo(const CycloField& f, std::vector<Rat> coeffs);

    static Cyclo zero(const CycloField& f) { return Cyclo(f, std::vector<Rat>(f.degree())); }
    static Cyclo from_rational(const CycloField& f, const Rat& q);
    static Cyclo from_rational(const CycloField& f, long q) { return from_rational(f, Rat(q)); }
    // zeta_N^t (t arbitrary, reduced mod N).
    static Cyclo zeta(const CycloField& f, long t = 1);

    const CycloField& field() const { return *field_; }
    long conductor() const { return field_->conductor(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;  // requires is_rational()
    bool is_real() const;

    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o) { *this = *this * o; return *this; }
    Cyclo operator-() const;

    Cyclo inv() const;  // extended Euclid mod Phi_N; throws DivisionByZero
    Cyclo conj() const;
    // Image under zeta -> zeta^k; requires gcd(k, N) = 1.
    Cyclo galois(long k) const;
    // Re-express in Q(zeta_M); requires N | M.
    Cyclo promote(const CycloField& target) const;

    std::complex<double> embed() const;
    ComplexHP embed_hp() const;
    // Sign of a real nonzero element (via high-precision embedding).
    int sign_real() const;

    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }
    // Total order for canonical sorting (lexicographic on coordinates).
    int compare(const Cyclo& o) const;

    std::string str() const;

private:
    friend class CycloAccum;
    struct raw_tag {};
    Cyclo(const CycloField& f, std::vector<Rat> coeffs, raw_tag)
        : field_(&f), coeffs_(std::move(coeffs)) {}
    const CycloField* field_;
    std::vector<Rat> coeffs_;
};

// Accumulator for fused sums of products: collects raw exponent coordinates
// and reduces modulo Phi_N once, when the value is taken.  This is the hot
// path of matrix products and projector sums.
class CycloAccum {
public:
    explicit CycloAccum(const CycloField& f) : field_(&f), raw_(f.conductor() > 0 ? f.conductor() : 1) {}

    void clear();
    void add(const Cyclo& a);
    void add_product(const Cyclo& a, const Cyclo& b);
    void add_product(const Cyclo& a, const Cyclo& b, const Cyclo& c);
    void add_monomial(long exponent, const Rat& coeff);
    Cyclo take();

private:
    const CycloField* field_;
    std::vector<Rat> raw_;  // indexed by zeta exponent mod N
};

// Throws ConductorMismatch unless both scalars live in the same field.
void require_same_field(const Cyclo& a, const Cyclo& b);

// Smallest common field of two scalars (lcm of conductors); promotes both.
std::pair<Cyclo, Cyclo> to_common_field(const Cyclo& a, const Cyclo& b);

// True iff a lies in the largest 2-power-conductor subfield of its field,
// i.e. is fixed by every automorphism fixing Q(zeta_{2^v}) pointwise.
bool in_two_power_subfield(const Cyclo& a);

// Named elements at a given conductor (conductor must admit them).
Cyclo sqrt2(const CycloField& f);        // zeta_8 + zeta_8^-1, needs 8 | N
Cyclo sqrt5(const CycloField& f);        // 1 + 2(zeta_5 + zeta_5^4), needs 5 | N
Cyclo golden_ratio(const CycloField& f); // (1 + sqrt5)/2
Cyclo imag_unit(const CycloField& f);    // zeta_4, needs 4 | N

} // namespace exotic
