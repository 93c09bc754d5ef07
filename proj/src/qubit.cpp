#include "exotic/qubit.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

namespace exotic {

namespace {
long popcount_long(unsigned long x) { return static_cast<long>(std::popcount(x)); }
} // namespace

std::vector<std::complex<double>> QubitCode::dicke_coefficients(int which) const {
    const CycloVec& ket = which == 0 ? spin.ket0 : spin.ket1;
    double norm = std::sqrt(spin.norm_sq.embed().real());
    std::vector<std::complex<double>> out(n() + 1);
    for (long w = 0; w <= n(); ++w) {
        double fw = SpinOperator::gram_weight(n(), w).get_d();
        out[w] = ket[w].embed() * std::sqrt(fw) / norm;
    }
    return out;
}

CycloVec QubitCode::amplitude_numerators(int which) const {
    const CycloVec& ket = which == 0 ? spin.ket0 : spin.ket1;
    const CycloField& f = spin.field();
    CycloVec out;
    out.reserve(n() + 1);
    for (long w = 0; w <= n(); ++w)
        out.push_back(ket[w] *
                      Cyclo::from_rational(f, Rat(SpinOperator::gram_weight(n(), w))));
    return out;
}

std::vector<double> QubitCode::expand(int which) const {
    if (n() > 21) throw SizeBoundExceeded("full statevector expansion is limited to n <= 21");
    auto dicke = dicke_coefficients(which);
    std::vector<double> per_weight(n() + 1);
    for (long w = 0; w <= n(); ++w)
        per_weight[w] = dicke[w].real() / std::sqrt(binomial(n(), w).get_d());
    std::vector<double> state(1ull << n());
    for (unsigned long s = 0; s < state.size(); ++s) state[s] = per_weight[popcount_long(s)];
    return state;
}

QubitCode to_multiqubit(const SpinCode& code) {
    if (code.twoj < 1) throw Error("need at least one qubit");
    return QubitCode{code};
}

KLReport pauli_kl_oracle(const QubitCode& code, long max_weight, const NumericConfig& cfg) {
    long n = code.n();
    if (n > 21) throw SizeBoundExceeded("oracle expansion is limited to n <= 21");
    std::vector<double> u0 = code.expand(0), u1 = code.expand(1);
    const std::vector<double>* kets[2] = {&u0, &u1};
    double tol = cfg.tolerance;

    KLReport report;
    report.max_rank_checked = max_weight;

    // rank 0: orthonormality
    {
        KLEntry e;
        e.op_label = "identity";
        e.rank = 0;
        double m[2][2];
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) {
                double s = 0;
                for (size_t i = 0; i < u0.size(); ++i) s += (*kets[k])[i] * (*kets[l])[i];
                m[k][l] = s;
            }
        e.deviation = std::max({std::abs(m[0][1]), std::abs(m[1][0]), std::abs(m[0][0] - m[1][1])});
        e.scalar = e.deviation < tol;
        e.exactly_zero = false;
        report.entries.push_back(e);
    }

    std::vector<long> support(max_weight);
    const char letters[3] = {'X', 'Y', 'Z'};
    for (long w = 1; w <= max_weight; ++w) {
        // combinations of w positions out of n
        std::vector<long> pos(w);
        for (long i = 0; i < w; ++i) pos[i] = i;
        while (true) {
            // letters odometer
            std::vector<int> let(w, 0);
            while (true) {
                unsigned long xmask = 0, zmask = 0;
                int ny = 0;
                for (long i = 0; i < w; ++i) {
                    if (let[i] == 0) xmask |= 1ul << pos[i];
                    if (let[i] == 1) {
                        xmask |= 1ul << pos[i];
                        zmask |= 1ul << pos[i];
                        ++ny;
                    }
                    if (let[i] == 2) zmask |= 1ul << pos[i];
                }
                double m[2][2];
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l) m[k][l] = 0;
                for (unsigned long s = 0; s < u0.size(); ++s) {
                    double sign = (popcount_long(s & zmask) & 1) ? -1.0 : 1.0;
                    unsigned long t = s ^ xmask;
                    for (int k = 0; k < 2; ++k) {
                        double a = (*kets[k])[t];
                        if (a == 0.0) continue;
                        for (int l = 0; l < 2; ++l) m[k][l] += sign * a * (*kets[l])[s];
                    }
                }
                KLEntry e;
                e.rank = static_cast<int>(w);
                for (long i = 0; i < w; ++i) {
                    if (i) e.op_label += ' ';
                    e.op_label += letters[let[i]];
                    e.op_label += '@';
                    e.op_label += std::to_string(pos[i]);
                }
                e.deviation =
                    std::max({std::abs(m[0][1]), std::abs(m[1][0]), std::abs(m[0][0] - m[1][1])});
                e.scalar = e.deviation < tol;
                e.exactly_zero = false;
                report.entries.push_back(std::move(e));

                long d = w - 1;
                while (d >= 0 && let[d] == 2) let[d--] = 0;
                if (d < 0) break;
                ++let[d];
            }
            long d = w - 1;
            while (d >= 0 && pos[d] == n - w + d) --d;
            if (d < 0) break;
            ++pos[d];
            for (long i = d + 1; i < w; ++i) pos[i] = pos[i - 1] + 1;
        }
    }
    report.pass = true;
    for (const KLEntry& e : report.entries)
        if (!e.scalar) report.pass = false;
    long certified = 0;
    for (long p = 0; p <= max_weight; ++p) {
        if (!report.rank_passes(static_cast<int>(p))) break;
        certified = p + 1;
    }
    report.distance_certified = certified;
    return report;
}

namespace {

// Collective (permutation-symmetrized) ladder operators acting on the
// reduced Dicke coefficients: the images of sum_i J_alpha^(i) under the
// Dicke mapping, with the radical parts absorbed by the weight frame.
CycloMat collective_op(const CycloField& f, long n, char alpha) {
    CycloMat m(f, n + 1, n + 1);
    switch (alpha) {
        case '-':
            // sum_i J-^(i) |D_w> = sqrt((n-w)(w+1)) |D_{w+1}>
            for (long w = 0; w < n; ++w) m.at(w + 1, w) = Cyclo::from_rational(f, Rat(n - w));
            break;
        case '+':
            // sum_i J+^(i) |D_w> = sqrt(w(n-w+1)) |D_{w-1}>
            for (long w = 1; w <= n; ++w) m.at(w - 1, w) = Cyclo::from_rational(f, Rat(w));
            break;
        case 'z':
            for (long w = 0; w <= n; ++w) m.at(w, w) = Cyclo::from_rational(f, Rat(n - 2 * w, 2));
            break;
        default:
            throw Error("alpha must be one of +, z, -");
    }
    return m;
}

} // namespace

KLReport symmetrized_kl_check(const QubitCode& code, long max_weight) {
    const SpinCode& spin = code.spin;
    const CycloField& f = spin.field();
    long n = code.n();
    const std::array<char, 3> alphas{'+', 'z', '-'};
    std::vector<CycloMat> js;
    for (char a : alphas) js.push_back(collective_op(f, n, a));
    const CycloVec* kets[2] = {&spin.ket0, &spin.ket1};

    KLReport report;
    report.max_rank_checked = max_weight;
    for (long p = 0; p <= max_weight; ++p) {
        long count = 1;
        for (long t = 0; t < p; ++t) count *= 3;
        for (long word = 0; word < count; ++word) {
            std::string label = "sym(";
            std::optional<CycloMat> op;
            long w = word;
            for (long t = 0; t < p; ++t) {
                long letter = w % 3;
                w /= 3;
                if (t) label += ' ';
                label += 'J';
                label += alphas[letter];
                op = op ? (*op * js[letter]) : js[letter];
            }
            label += p == 0 ? "identity)" : ")";

            Cyclo m[2][2] = {{Cyclo::zero(f), Cyclo::zero(f)}, {Cyclo::zero(f), Cyclo::zero(f)}};
            for (int l = 0; l < 2; ++l) {
                CycloVec image = op ? op->apply(*kets[l]) : *kets[l];
                for (int k = 0; k < 2; ++k) m[k][l] = gram_inner(n, *kets[k], image);
            }
            KLEntry entry;
            entry.op_label = std::move(label);
            entry.rank = static_cast<int>(p);
            bool off_zero = m[0][1].is_zero() && m[1][0].is_zero();
            entry.scalar = off_zero && m[0][0] == m[1][1];
            entry.exactly_zero = off_zero && m[0][0].is_zero() && m[1][1].is_zero();
            double dev = 0.0;
            Cyclo diff = m[0][0] - m[1][1];
            for (const Cyclo* x : {&m[0][1], &m[1][0], &diff})
                dev = std::max(dev, std::abs(x->embed()) / std::abs(spin.norm_sq.embed()));
            entry.deviation = dev;
            report.entries.push_back(std::move(entry));
        }
    }
    report.pass = true;
    for (const KLEntry& e : report.entries)
        if (!e.scalar) report.pass = false;
    long certified = 0;
    for (long p = 0; p <= max_weight; ++p) {
        if (!report.rank_passes(static_cast<int>(p))) break;
        certified = p + 1;
    }
    report.distance_certified = certified;
    return report;
}

long WeightEnumerator::distance() const {
    long d = 0;
    for (long i = 0; i <= n; ++i) {
        if (A[i] != B[i]) break;
        d = i + 1;
    }
    return d;
}

WeightEnumerator weight_enumerators(const QubitCode& code, bool force_large) {
    long n = code.n();
    if (n > (force_large ? 13 : 9))
        throw SizeBoundExceeded("weight enumerators enumerate 4^n terms; n = " + std::to_string(n) +
                                (force_large ? " exceeds 13" : " needs --force-large up to 13"));
    const CycloField& f = code.spin.field();
    CycloVec w0 = code.amplitude_numerators(0);
    CycloVec w1 = code.amplitude_numerators(1);
    const CycloVec* W[2] = {&w0, &w1};

    // global normalization: amplitudes are W_w / sqrt(norm_sq * n!)
    Cyclo norm_tot = code.spin.norm_sq * Cyclo::from_rational(f, Rat(factorial(n)));
    Cyclo inv_sq = (norm_tot * norm_tot).inv();

    std::vector<Cyclo> a_acc(n + 1, Cyclo::zero(f)), b_acc(n + 1, Cyclo::zero(f));

    // enumerate Pauli strings grouped by letter type (nx, ny, nz); Tr(E Pi)
    // and Tr(E Pi E Pi) are permutation invariants, so one representative
    // per type carries the whole class
    for (long nx = 0; nx <= n; ++nx) {
        for (long ny = 0; ny + nx <= n; ++ny) {
            for (long nz = 0; nz + ny + nx <= n; ++nz) {
                long weight = nx + ny + nz;
                unsigned long xmask = 0, zmask = 0;
                for (long i = 0; i < nx + ny; ++i) xmask |= 1ul << i;
                for (long i = nx; i < nx + ny + nz; ++i) zmask |= 1ul << i;

                // integer kernels K[w][w'] = sum over s of (-1)^(s.z)
                // with wt(s) = w, wt(s^x) = w'
                std::vector<std::vector<long>> kern(n + 1, std::vector<long>(n + 1, 0));
                for (unsigned long s = 0; s < (1ul << n); ++s) {
                    long sign = (popcount_long(s & zmask) & 1) ? -1 : 1;
                    kern[popcount_long(s)][popcount_long(s ^ xmask)] += sign;
                }

                Cyclo m[2][2] = {{Cyclo::zero(f), Cyclo::zero(f)},
                                 {Cyclo::zero(f), Cyclo::zero(f)}};
                CycloAccum acc(f);
                for (int k = 0; k < 2; ++k) {
                    for (int l = 0; l < 2; ++l) {
                        for (long w = 0; w <= n; ++w) {
                            if ((*W[l])[w].is_zero()) continue;
                            for (long wp = 0; wp <= n; ++wp) {
                                if (kern[w][wp] == 0 || (*W[k])[wp].is_zero()) continue;
                                Cyclo t = (*W[k])[wp] * Cyclo::from_rational(f, Rat(kern[w][wp]));
                                acc.add_product(t, (*W[l])[w]);
                            }
                        }
                        m[k][l] = acc.take();
                    }
                }
                // number of strings of this type
                Rat count(factorial(n) / (factorial(nx) * factorial(ny) * factorial(nz) *
                                          factorial(n - weight)));
                Cyclo countc = Cyclo::from_rational(f, count);
                Cyclo tr = m[0][0] + m[1][1];
                a_acc[weight] += countc * tr * tr * inv_sq;
                Cyclo frob = Cyclo::zero(f);
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l) frob += m[k][l] * m[k][l];
                b_acc[weight] += countc * frob * inv_sq;
            }
        }
    }

    WeightEnumerator we;
    we.n = n;
    we.K = 2;
    we.A.resize(n + 1);
    we.B.resize(n + 1);
    for (long i = 0; i <= n; ++i) {
        Cyclo a = a_acc[i] * Cyclo::from_rational(f, Rat(1, 4));
        Cyclo b = b_acc[i] * Cyclo::from_rational(f, Rat(1, 2));
        if (!a.is_rational() || !b.is_rational())
            throw InternalInconsistency("weight enumerator coefficients must be rational");
        we.A[i] = a.rational_value();
        we.B[i] = b.rational_value();
        if (we.A[i] < 0 || we.B[i] < we.A[i])
            throw InternalInconsistency("weight enumerators violate 0 <= A_i <= B_i");
    }
    return we;
}

namespace {

LogicalAction logical_action_on_basis(const SpinCode& spin, const GroupElement& u,
                                      const CycloVec& k0, const CycloVec& k1) {
    const CycloField& f = spin.field();
    long twoj = spin.twoj;
    GroupElement up = u.field().conductor() == f.conductor() ? u : u.promote(f);
    SpinOperator d = wigner_d(up, twoj);

    const CycloVec* kets[2] = {&k0, &k1};
    LogicalAction result;
    result.logical = CycloMat(f, 2, 2);
    Cyclo inv_norm = spin.norm_sq.inv();
    double residual = 0.0;
    bool preserved = true;
    for (int l = 0; l < 2; ++l) {
        CycloVec image = d.monomial().apply(*kets[l]);
        for (int k = 0; k < 2; ++k)
            result.logical.at(k, l) = gram_inner(twoj, *kets[k], image) * inv_norm;
        // exact leakage test: image - sum_k L_kl ket_k = 0
        double res_sq = 0.0;
        for (long r = 0; r <= twoj; ++r) {
            Cyclo res = image[r] - result.logical.at(0, l) * k0[r] - result.logical.at(1, l) * k1[r];
            if (!res.is_zero()) {
                preserved = false;
                double fr = SpinOperator::gram_weight(twoj, r).get_d();
                res_sq += std::norm(res.embed()) * fr;
            }
        }
        residual = std::max(residual, std::sqrt(res_sq / std::abs(spin.norm_sq.embed())));
    }
    result.preserved = preserved;
    result.residual = residual;
    return result;
}

} // namespace

LogicalAction logical_action(const QubitCode& code, const GroupElement& u) {
    return logical_action_on_basis(code.spin, u, code.spin.ket0, code.spin.ket1);
}

LogicalAction logical_action_display_basis(const QubitCode& code, const GroupElement& u) {
    // display basis uses ket1' = X^(x n) ket0 = i^(n-1) * stored ket1
    long n = code.n();
    CycloVec k1 = code.spin.ket1;
    if (((n - 1) / 2) % 2 == 1) {
        const CycloField& f = code.spin.field();
        Cyclo minus = Cyclo::from_rational(f, -1);
        for (Cyclo& x : k1)
            if (!x.is_zero()) x = x * minus;
    }
    return logical_action_on_basis(code.spin, u, code.spin.ket0, k1);
}

TransversalReport certify_transversal_group(const QubitCode& code, const FiniteSubgroup& g,
                                            const Character2D& chi) {
    const SpinCode& spin = code.spin;
    const CycloField& f = spin.field();
    if (g.field().conductor() != f.conductor())
        throw Error("group and code must share a conductor");
    long twoj = spin.twoj;
    std::vector<SpinOperator> reps = wigner_d_all(g, twoj);
    Cyclo inv_norm = spin.norm_sq.inv();
    const CycloVec* kets[2] = {&spin.ket0, &spin.ket1};

    TransversalReport report;
    report.pairing.assign(g.order(), {-1, 0});
    for (long i = 0; i < g.order(); ++i) {
        CycloMat logical(f, 2, 2);
        bool preserved = true;
        for (int l = 0; l < 2 && preserved; ++l) {
            CycloVec image = reps[i].monomial().apply(*kets[l]);
            for (int k = 0; k < 2; ++k)
                logical.at(k, l) = gram_inner(twoj, *kets[k], image) * inv_norm;
            for (long r = 0; r <= twoj; ++r) {
                Cyclo res =
                    image[r] - logical.at(0, l) * spin.ket0[r] - logical.at(1, l) * spin.ket1[r];
                if (!res.is_zero()) {
                    preserved = false;
                    break;
                }
            }
        }
        bool ok = preserved;
        if (ok) {
            Cyclo tr = logical.trace();
            ok = tr == chi.on_element(i).promote(f);
        }
        if (ok) {
            // record the strong-transversality pairing g -> logical partner
            try {
                GroupElement lg{logical};
                if (auto idx = g.index_of(lg)) {
                    report.pairing[i] = {*idx, 1};
                } else if (auto idx2 = g.index_of(-lg)) {
                    report.pairing[i] = {*idx2, -1};
                }
            } catch (const Error&) {
                // logical matrix outside SU(2): leave the pairing empty
            }
        } else {
            report.failed_elements.push_back(i);
        }
        ++report.checked;
    }
    report.pass = report.failed_elements.empty();
    return report;
}

} // namespace exotic
