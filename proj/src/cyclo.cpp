#include "exotic/cyclo.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace exotic {

namespace {

// Integer polynomial helpers used only for building Phi_N.
using IPoly = std::vector<Int>;

// Exact division of integer polynomials (remainder known to vanish).
IPoly ipoly_div(const IPoly& num, const IPoly& den) {
    IPoly r = num;
    IPoly q(num.size() - den.size() + 1);
    long dd = static_cast<long>(den.size()) - 1;
    for (long i = static_cast<long>(r.size()) - 1; i >= dd; --i) {
        if (r[i] == 0) continue;
        Int c = r[i] / den[dd];
        q[i - dd] = c;
        for (long k = 0; k <= dd; ++k) r[i - dd + k] -= c * den[k];
    }
    return q;
}

IPoly cyclotomic_poly(long n) {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, built for all divisors
    // in ascending order.
    std::map<long, IPoly> phi;
    std::vector<long> divisors;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    for (long d : divisors) {
        IPoly num(d + 1);
        num[0] = -1;
        num[d] = 1;
        IPoly acc{1};
        for (long e : divisors) {
            if (e >= d || d % e != 0) continue;
            IPoly next(acc.size() + phi[e].size() - 1);
            for (size_t i = 0; i < acc.size(); ++i)
                for (size_t j = 0; j < phi[e].size(); ++j) next[i + j] += acc[i] * phi[e][j];
            acc = std::move(next);
        }
        phi[d] = ipoly_div(num, acc);
    }
    return phi[n];
}

// Rational polynomial helpers for the extended Euclidean inverse.
using QPoly = std::vector<Rat>;

long qdeg(const QPoly& p) {
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

void qtrim(QPoly& p) { p.resize(static_cast<size_t>(std::max<long>(qdeg(p), 0)) + 1); }

QPoly qmul(const QPoly& a, const QPoly& b) {
    QPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
    QPoly r = a;
    if (b.size() > r.size()) r.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

// Division with remainder over Q[x].
std::pair<QPoly, QPoly> qdivmod(const QPoly& num, const QPoly& den) {
    long dd = qdeg(den);
    QPoly r = num;
    long dr = qdeg(r);
    if (dr < dd) return {QPoly{Rat(0)}, r};
    QPoly q(dr - dd + 1);
    for (long i = dr; i >= dd; --i) {
        if (r[i] == 0) continue;
        Rat c = r[i] / den[dd];
        q[i - dd] = c;
        for (long k = 0; k <= dd; ++k) r[i - dd + k] -= c * den[k];
    }
    qtrim(r);
    return {q, r};
}

std::mutex registry_mutex;

} // namespace

CycloField::CycloField(long n) : n_(n) {
    phi_ = cyclotomic_poly(n);
    degree_ = static_cast<long>(phi_.size()) - 1;
    // reduction rows: zeta^t for degree <= t < N
    if (n > degree_) {
        reduction_.resize(n - degree_);
        std::vector<Int>& base = reduction_[0];
        base.resize(degree_);
        for (long i = 0; i < degree_; ++i) base[i] = -phi_[i];
        for (long t = degree_ + 1; t < n; ++t) {
            std::vector<Int> row(degree_);
            const std::vector<Int>& prev = reduction_[t - 1 - degree_];
            const Int& carry = prev[degree_ - 1];
            for (long i = 0; i < degree_; ++i) {
                row[i] = (i > 0 ? prev[i - 1] : Int(0));
                if (carry != 0) row[i] += carry * base[i];
            }
            reduction_[t - degree_] = std::move(row);
        }
    }
    embed_.resize(n);
    for (long t = 0; t < n; ++t) {
        double arg = 2.0 * M_PI * static_cast<double>(t) / static_cast<double>(n);
        embed_[t] = {std::cos(arg), std::sin(arg)};
    }
}

const CycloField& CycloField::get(long conductor) {
    if (conductor < 1) throw Error("conductor must be a positive integer");
    static std::map<long, std::unique_ptr<CycloField>>* registry =
        new std::map<long, std::unique_ptr<CycloField>>();
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto it = registry->find(conductor);
    if (it == registry->end())
        it = registry->emplace(conductor, std::unique_ptr<CycloField>(new CycloField(conductor))).first;
    return *it->second;
}

std::complex<double> CycloField::zeta_pow(long t) const {
    t %= n_;
    if (t < 0) t += n_;
    return embed_[t];
}

ComplexHP CycloField::zeta_pow_hp(long t) const {
    std::call_once(hp_once_, [this] {
        embed_hp_.resize(n_);
        const HighFloat pi = boost::math::constants::pi<HighFloat>();
        for (long k = 0; k < n_; ++k) {
            HighFloat arg = 2 * pi * k / n_;
            embed_hp_[k] = {cos(arg), sin(arg)};
        }
    });
    t %= n_;
    if (t < 0) t += n_;
    return embed_hp_[t];
}

Cyclo::Cyclo(const CycloField& f, std::vector<Rat> coeffs) : field_(&f), coeffs_(std::move(coeffs)) {
    if (static_cast<long>(coeffs_.size()) != f.degree())
        throw Error("coefficient vector length must equal the field degree");
    // GMP comparisons require canonical rationals.
    for (Rat& c : coeffs_) c.canonicalize();
}

Cyclo Cyclo::from_rational(const CycloField& f, const Rat& q) {
    std::vector<Rat> c(f.degree());
    c[0] = q;
    return Cyclo(f, std::move(c));
}

Cyclo Cyclo::zeta(const CycloField& f, long t) {
    t %= f.conductor();
    if (t < 0) t += f.conductor();
    std::vector<Rat> c(f.degree());
    if (t < f.degree()) {
        c[t] = 1;
    } else {
        const std::vector<Int>& row = f.reduction_row(t);
        for (long i = 0; i < f.degree(); ++i) c[i] = row[i];
    }
    return Cyclo(f, std::move(c));
}

bool Cyclo::is_zero() const {
    for (const Rat& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rat Cyclo::rational_value() const {
    if (!is_rational()) throw Error("scalar is not rational");
    return coeffs_[0];
}

bool Cyclo::is_real() const { return conj() == *this; }

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    require_same_field(*this, o);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (o.coeffs_[i] != 0) coeffs_[i] += o.coeffs_[i];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    require_same_field(*this, o);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (o.coeffs_[i] != 0) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (Rat& c : r.coeffs_)
        if (c != 0) c = -c;
    return r;
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    Cyclo r = a;
    r += b;
    return r;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    Cyclo r = a;
    r -= b;
    return r;
}

namespace {
// Reused per-conductor accumulators; Cyclo values are immutable so scalar
// multiplication via a thread-local scratch buffer is safe.
CycloAccum& scratch_accum(const CycloField& f) {
    thread_local std::map<long, std::unique_ptr<CycloAccum>> cache;
    auto it = cache.find(f.conductor());
    if (it == cache.end())
        it = cache.emplace(f.conductor(), std::make_unique<CycloAccum>(f)).first;
    return *it->second;
}
} // namespace

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    require_same_field(a, b);
    CycloAccum& acc = scratch_accum(a.field());
    acc.add_product(a, b);
    return acc.take();
}

Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inv(); }

Cyclo Cyclo::inv() const {
    if (is_zero()) throw DivisionByZero("division by zero cyclotomic scalar");
    if (is_rational()) {
        std::vector<Rat> c(field_->degree());
        c[0] = Rat(coeffs_[0].get_den(), coeffs_[0].get_num());
        c[0].canonicalize();
        return Cyclo(*field_, std::move(c));
    }
    // Extended Euclid on (a, Phi_N) over Q[x]: u a + v Phi = gcd = const.
    QPoly r0(field_->cyclotomic_polynomial().size());
    for (size_t i = 0; i < r0.size(); ++i) r0[i] = field_->cyclotomic_polynomial()[i];
    QPoly r1 = coeffs_;
    qtrim(r1);
    QPoly t0{Rat(0)}, t1{Rat(1)};
    while (qdeg(r1) >= 0) {
        auto [q, rem] = qdivmod(r0, r1);
        QPoly t2 = qsub(t0, qmul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 is a nonzero constant (Phi_N is irreducible over Q).
    if (qdeg(r0) != 0) throw InternalInconsistency("cyclotomic inverse: non-constant gcd");
    std::vector<Rat> c(field_->degree());
    for (size_t i = 0; i < t0.size() && i < c.size(); ++i) c[i] = t0[i] / r0[0];
    return Cyclo(*field_, std::move(c));
}

Cyclo Cyclo::galois(long k) const {
    long n = field_->conductor();
    k %= n;
    if (k < 0) k += n;
    if (std::gcd(k, n) != 1) throw NotCoprime("galois exponent not coprime to the conductor");
    if (k == 1) return *this;
    CycloAccum acc(*field_);
    for (long i = 0; i < static_cast<long>(coeffs_.size()); ++i)
        if (coeffs_[i] != 0) acc.add_monomial((i * k) % n, coeffs_[i]);
    return acc.take();
}

Cyclo Cyclo::conj() const {
    if (field_->conductor() <= 2) return *this;
    return galois(field_->conductor() - 1);
}

Cyclo Cyclo::promote(const CycloField& target) const {
    if (&target == field_) return *this;
    long n = field_->conductor(), m = target.conductor();
    if (m % n != 0) throw ConductorMismatch("promotion target conductor is not a multiple");
    long ratio = m / n;
    CycloAccum acc(target);
    for (long i = 0; i < static_cast<long>(coeffs_.size()); ++i)
        if (coeffs_[i] != 0) acc.add_monomial(i * ratio, coeffs_[i]);
    return acc.take();
}

std::complex<double> Cyclo::embed() const {
    std::complex<double> r{0.0, 0.0};
    for (long i = 0; i < static_cast<long>(coeffs_.size()); ++i)
        if (coeffs_[i] != 0) r += coeffs_[i].get_d() * field_->zeta_pow(i);
    return r;
}

ComplexHP Cyclo::embed_hp() const {
    ComplexHP r;
    for (long i = 0; i < static_cast<long>(coeffs_.size()); ++i) {
        if (coeffs_[i] == 0) continue;
        HighFloat c = hp_from_rational(coeffs_[i]);
        ComplexHP z = field_->zeta_pow_hp(i);
        r.re += c * z.re;
        r.im += c * z.im;
    }
    return r;
}

int Cyclo::sign_real() const {
    if (is_rational()) return sgn(coeffs_[0]);
    HighFloat x = embed_hp().re;
    if (x > 1e-40) return 1;
    if (x < -1e-40) return -1;
    if (is_zero()) return 0;
    throw InternalInconsistency("sign of real scalar numerically ambiguous");
}

bool Cyclo::operator==(const Cyclo& o) const {
    return field_->conductor() == o.field_->conductor() && coeffs_ == o.coeffs_;
}

int Cyclo::compare(const Cyclo& o) const {
    require_same_field(*this, o);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        int c = cmp(coeffs_[i], o.coeffs_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string Cyclo::str() const {
    std::ostringstream os;
    bool first = true;
    for (long i = 0; i < static_cast<long>(coeffs_.size()); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        os << coeffs_[i].get_str();
        if (i > 0) os << "*z^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

void CycloAccum::clear() {
    for (Rat& r : raw_)
        if (r != 0) r = 0;
}

void CycloAccum::add(const Cyclo& a) {
    for (long i = 0; i < static_cast<long>(a.coeffs_.size()); ++i)
        if (a.coeffs_[i] != 0) raw_[i] += a.coeffs_[i];
}

void CycloAccum::add_product(const Cyclo& a, const Cyclo& b) {
    long n = field_->conductor();
    const std::vector<Rat>&ca = a.coeffs_, &cb = b.coeffs_;
    for (long i = 0; i < static_cast<long>(ca.size()); ++i) {
        if (ca[i] == 0) continue;
        for (long j = 0; j < static_cast<long>(cb.size()); ++j) {
            if (cb[j] == 0) continue;
            long e = i + j;
            if (e >= n) e -= n;
            raw_[e] += ca[i] * cb[j];
        }
    }
}

void CycloAccum::add_product(const Cyclo& a, const Cyclo& b, const Cyclo& c) {
    Cyclo ab = a * b;
    add_product(ab, c);
}

void CycloAccum::add_monomial(long exponent, const Rat& coeff) {
    long n = field_->conductor();
    exponent %= n;
    if (exponent < 0) exponent += n;
    raw_[exponent] += coeff;
}

Cyclo CycloAccum::take() {
    long d = field_->degree(), n = field_->conductor();
    std::vector<Rat> out(d);
    for (long i = 0; i < d; ++i) {
        if (raw_[i] != 0) {
            out[i] = raw_[i];
            raw_[i] = 0;
        }
    }
    for (long t = d; t < n; ++t) {
        if (raw_[t] == 0) continue;
        const std::vector<Int>& row = field_->reduction_row(t);
        for (long i = 0; i < d; ++i)
            if (row[i] != 0) out[i] += raw_[t] * row[i];
        raw_[t] = 0;
    }
    return Cyclo(*field_, std::move(out), Cyclo::raw_tag{});
}

void require_same_field(const Cyclo& a, const Cyclo& b) {
    if (a.conductor() != b.conductor())
        throw ConductorMismatch("scalars live in different cyclotomic fields");
}

std::pair<Cyclo, Cyclo> to_common_field(const Cyclo& a, const Cyclo& b) {
    long m = lcm_long(a.conductor(), b.conductor());
    const CycloField& f = CycloField::get(m);
    return {a.promote(f), b.promote(f)};
}

bool in_two_power_subfield(const Cyclo& a) {
    long n = a.conductor();
    long odd = n;
    while (odd % 2 == 0) odd /= 2;
    if (odd == 1) return true;  // whole field has 2-power conductor
    long two_part = n / odd;
    // Fixed-field test against every automorphism zeta -> zeta^k with
    // k = 1 mod 2^v: these fix Q(zeta_{2^v}) pointwise and generate
    // Gal(Q(zeta_N)/Q(zeta_{2^v})).
    for (long k = 1 + two_part; k < n; k += two_part) {
        if (std::gcd(k, n) != 1) continue;
        if (a.galois(k) != a) return false;
    }
    return true;
}

Cyclo sqrt2(const CycloField& f) {
    if (f.conductor() % 8 != 0) throw Error("sqrt2 needs 8 | conductor");
    long s = f.conductor() / 8;
    return Cyclo::zeta(f, s) + Cyclo::zeta(f, -s);
}

Cyclo sqrt5(const CycloField& f) {
    if (f.conductor() % 5 != 0) throw Error("sqrt5 needs 5 | conductor");
    long s = f.conductor() / 5;
    Cyclo r = Cyclo::from_rational(f, 1);
    Cyclo two = Cyclo::from_rational(f, 2);
    r += two * (Cyclo::zeta(f, s) + Cyclo::zeta(f, 4 * s));
    return r;
}

Cyclo golden_ratio(const CycloField& f) {
    Cyclo half = Cyclo::from_rational(f, Rat(1, 2));
    return half * (Cyclo::from_rational(f, 1) + sqrt5(f));
}

Cyclo imag_unit(const CycloField& f) {
    if (f.conductor() % 4 != 0) throw Error("imaginary unit needs 4 | conductor");
    return Cyclo::zeta(f, f.conductor() / 4);
}

} // namespace exotic
