#include "exotic/spin.hpp"

#include <sstream>

namespace exotic {

SpinOperator::SpinOperator(long twoj, CycloMat monomial_frame)
    : twoj_(twoj), mat_(std::move(monomial_frame)) {
    if (mat_.rows() != twoj + 1 || mat_.cols() != twoj + 1)
        throw Error("spin operator dimension must be 2j+1");
}

Int SpinOperator::gram_weight(long twoj, long r) { return factorial(twoj - r) * factorial(r); }

std::pair<Cyclo, Rat> SpinOperator::unitary_entry(long r, long c) const {
    Rat rad(gram_weight(twoj_, r), gram_weight(twoj_, c));
    rad.canonicalize();
    return {mat_.at(r, c), rad};
}

std::complex<double> SpinOperator::unitary_entry_numeric(long r, long c) const {
    auto [val, rad] = unitary_entry(r, c);
    return val.embed() * std::sqrt(rad.get_d());
}

SpinOperator SpinOperator::operator*(const SpinOperator& o) const {
    if (twoj_ != o.twoj_) throw Error("spin mismatch");
    return SpinOperator(twoj_, mat_ * o.mat_);
}

SpinOperator SpinOperator::operator+(const SpinOperator& o) const {
    if (twoj_ != o.twoj_) throw Error("spin mismatch");
    return SpinOperator(twoj_, mat_ + o.mat_);
}

SpinOperator SpinOperator::operator-(const SpinOperator& o) const {
    if (twoj_ != o.twoj_) throw Error("spin mismatch");
    return SpinOperator(twoj_, mat_ - o.mat_);
}

SpinOperator SpinOperator::scaled(const Cyclo& s) const {
    return SpinOperator(twoj_, mat_.scaled(s));
}

SpinOperator SpinOperator::adjoint() const {
    // Gram adjoint: entrywise (F_c / F_r) conj(M_cr)
    const CycloField& f = field();
    CycloMat r(f, dim(), dim());
    for (long i = 0; i < dim(); ++i) {
        for (long c = 0; c < dim(); ++c) {
            Rat scale(gram_weight(twoj_, c), gram_weight(twoj_, i));
            scale.canonicalize();
            r.at(i, c) = mat_.at(c, i).conj() * Cyclo::from_rational(f, scale);
        }
    }
    return SpinOperator(twoj_, std::move(r));
}

bool SpinOperator::is_gram_unitary() const {
    // M^dag G M = G with G = diag(F_r)
    const CycloField& f = field();
    long n = dim();
    CycloAccum acc(f);
    for (long a = 0; a < n; ++a) {
        for (long b = 0; b < n; ++b) {
            for (long r = 0; r < n; ++r) {
                if (mat_.at(r, a).is_zero() || mat_.at(r, b).is_zero()) continue;
                Cyclo term = mat_.at(r, a).conj() * mat_.at(r, b);
                acc.add_product(term, Cyclo::from_rational(f, Rat(gram_weight(twoj_, r))));
            }
            Cyclo got = acc.take();
            if (a == b) {
                if (!(got.is_rational() && got.rational_value() == Rat(gram_weight(twoj_, a))))
                    return false;
            } else if (!got.is_zero()) {
                return false;
            }
        }
    }
    return true;
}

bool SpinOperator::is_real_symmetric_unitary() const {
    const CycloField& f = field();
    for (long r = 0; r < dim(); ++r) {
        for (long c = 0; c < dim(); ++c) {
            if (!mat_.at(r, c).is_real()) return false;
            Cyclo lhs = mat_.at(r, c) * Cyclo::from_rational(f, Rat(gram_weight(twoj_, r)));
            Cyclo rhs = mat_.at(c, r) * Cyclo::from_rational(f, Rat(gram_weight(twoj_, c)));
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

namespace {

// pows[p][k] = coefficient of x^(p-k) y^k in (a x + c y)^p.
std::vector<std::vector<Cyclo>> binomial_powers(const Cyclo& a, const Cyclo& c, long n) {
    const CycloField& f = a.field();
    std::vector<std::vector<Cyclo>> pows(n + 1);
    pows[0] = {Cyclo::from_rational(f, 1)};
    for (long p = 1; p <= n; ++p) {
        std::vector<Cyclo> cur(p + 1, Cyclo::zero(f));
        const auto& prev = pows[p - 1];
        for (long k = 0; k < p; ++k) {
            if (prev[k].is_zero()) continue;
            cur[k] += prev[k] * a;
            cur[k + 1] += prev[k] * c;
        }
        pows[p] = std::move(cur);
    }
    return pows;
}

CycloMat wigner_monomial(const CycloMat& g, long twoj) {
    const CycloField& f = g.field();
    long n = twoj, dim = twoj + 1;
    auto apow = binomial_powers(g.at(0, 0), g.at(1, 0), n);
    auto bpow = binomial_powers(g.at(0, 1), g.at(1, 1), n);
    CycloMat m(f, dim, dim);
    CycloAccum acc(f);
    for (long col = 0; col < dim; ++col) {
        // image of x^(n-col) y^col under x -> ax + cy, y -> bx + dy
        const auto& A = apow[n - col];
        const auto& B = bpow[col];
        for (long row = 0; row < dim; ++row) {
            long lo = std::max(0L, row - col), hi = std::min(n - col, row);
            for (long k = lo; k <= hi; ++k) {
                if (A[k].is_zero() || B[row - k].is_zero()) continue;
                acc.add_product(A[k], B[row - k]);
            }
            m.at(row, col) = acc.take();
        }
    }
    return m;
}

} // namespace

SpinOperator wigner_d(const GroupElement& g, long twoj) {
    if (twoj < 0) throw Error("need 2j >= 0");
    return SpinOperator(twoj, wigner_monomial(g.matrix(), twoj));
}

std::vector<SpinOperator> wigner_d_all(const FiniteSubgroup& g, long twoj) {
    std::vector<SpinOperator> out;
    out.reserve(g.order());
    std::vector<SpinOperator> gens;
    for (const GroupElement& gen : g.generators()) gens.push_back(wigner_d(gen, twoj));
    for (long i = 0; i < g.order(); ++i) {
        auto [parent, gen] = g.bfs_parent(i);
        if (parent < 0)
            out.push_back(SpinOperator(twoj, CycloMat::identity(g.field(), twoj + 1)));
        else
            out.push_back(SpinOperator(twoj, out[parent].monomial() * gens[gen].monomial()));
    }
    return out;
}

SpinOperator angular_momentum(const CycloField& f, long twoj, char alpha) {
    long dim = twoj + 1;
    CycloMat m(f, dim, dim);
    switch (alpha) {
        case '+':
            for (long r = 1; r < dim; ++r) m.at(r - 1, r) = Cyclo::from_rational(f, Rat(r));
            break;
        case '-':
            for (long r = 0; r + 1 < dim; ++r)
                m.at(r + 1, r) = Cyclo::from_rational(f, Rat(twoj - r));
            break;
        case 'z':
            for (long r = 0; r < dim; ++r)
                m.at(r, r) = Cyclo::from_rational(f, Rat(twoj - 2 * r, 2));
            break;
        default:
            throw Error("alpha must be one of +, z, -");
    }
    return SpinOperator(twoj, std::move(m));
}

long dicke_weight(long twoj, long twom) {
    if ((twoj + twom) % 2 != 0 || twom > twoj || twom < -twoj)
        throw Error("invalid (j, m) pair");
    return (twoj - twom) / 2;
}

SpinOperator LieAlgebraElement::realize(long twoj) const {
    const CycloField& f = cp.field();
    SpinOperator jp = angular_momentum(f, twoj, '+');
    SpinOperator jz = angular_momentum(f, twoj, 'z');
    SpinOperator jm = angular_momentum(f, twoj, '-');
    return jp.scaled(cp) + jz.scaled(c0) + jm.scaled(cm);
}

CycloMat LieAlgebraElement::fundamental() const {
    const CycloField& f = cp.field();
    CycloMat m(f, 2, 2);
    Cyclo half = Cyclo::from_rational(f, Rat(1, 2));
    m.at(0, 0) = c0 * half;
    m.at(1, 1) = -(c0 * half);
    m.at(0, 1) = cp;
    m.at(1, 0) = cm;
    return m;
}

LieAlgebraElement LieAlgebraElement::from_fundamental(const CycloMat& m) {
    const CycloField& f = m.field();
    Cyclo tr = m.at(0, 0) + m.at(1, 1);
    if (!tr.is_zero()) throw Error("Lie algebra element must be traceless");
    LieAlgebraElement e;
    e.cp = m.at(0, 1);
    e.cm = m.at(1, 0);
    e.c0 = m.at(0, 0) * Cyclo::from_rational(f, 2);
    return e;
}

Cyclo spin_character(const GroupElement& g, long twoj) { return wigner_d(g, twoj).trace(); }

std::vector<Cyclo> spin_character_table(const FiniteSubgroup& g, long twoj) {
    const CycloField& f = g.field();
    const auto& classes = g.conjugacy_classes();
    size_t nc = classes.size();
    std::vector<Cyclo> cur(nc, Cyclo::from_rational(f, 1));  // chi at 2j = 0
    std::vector<Cyclo> fund(nc, Cyclo::zero(f));
    for (size_t c = 0; c < nc; ++c) fund[c] = g.element(classes[c].representative).trace();
    if (twoj == 0) return cur;
    std::vector<Cyclo> prev = cur;
    cur = fund;  // chi at 2j = 1
    for (long t = 2; t <= twoj; ++t) {
        std::vector<Cyclo> next(nc, Cyclo::zero(f));
        for (size_t c = 0; c < nc; ++c) next[c] = fund[c] * cur[c] - prev[c];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace {
long integer_multiplicity(const Cyclo& value, const char* what) {
    if (!value.is_rational())
        throw InternalInconsistency(std::string(what) + ": non-rational multiplicity");
    Rat q = value.rational_value();
    if (q.get_den() != 1 || q < 0)
        throw InternalInconsistency(std::string(what) + ": multiplicity not a nonnegative integer");
    return static_cast<long>(q.get_num().get_si());
}
} // namespace

long irrep_multiplicity(const FiniteSubgroup& g, const Character2D& chi, long twoj) {
    std::vector<Cyclo> chij = spin_character_table(g, twoj);
    Cyclo ip = class_function_inner(g, chij, chi.values);
    return integer_multiplicity(ip, "irrep_multiplicity");
}

long tensor_multiplicity(const FiniteSubgroup& g, const Character2D& chi, long n) {
    const CycloField& f = g.field();
    const auto& classes = g.conjugacy_classes();
    std::vector<Cyclo> tensor(classes.size(), Cyclo::zero(f));
    for (size_t c = 0; c < classes.size(); ++c) {
        Cyclo tr = g.element(classes[c].representative).trace();
        Cyclo p = Cyclo::from_rational(f, 1);
        for (long k = 0; k < n; ++k) p = p * tr;
        tensor[c] = p;
    }
    Cyclo ip = class_function_inner(g, tensor, chi.values);
    return integer_multiplicity(ip, "tensor_multiplicity");
}

Int schur_weyl_multiplicity(long n, long twoj) {
    if (n < 1 || twoj < 0 || twoj > n || (n - twoj) % 2 != 0)
        throw Error("invalid (n, j) pairing for Schur-Weyl multiplicity");
    long k = (n - twoj) / 2;
    return binomial(n, k) - binomial(n, k - 1);
}

std::string format_half_integer(long twoj) {
    if (twoj % 2 == 0) return std::to_string(twoj / 2);
    return std::to_string(twoj) + "/2";
}

long parse_half_integer(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return 2 * std::stol(text);
    long num = std::stol(text.substr(0, slash));
    long den = std::stol(text.substr(slash + 1));
    if (den != 2) throw Error("half-integers must have denominator 2");
    return num;
}

} // namespace exotic
