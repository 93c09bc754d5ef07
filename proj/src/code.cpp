#include "exotic/code.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <thread>

namespace exotic {

Cyclo gram_inner(long twoj, const CycloVec& u, const CycloVec& v) {
    const CycloField& f = u.front().field();
    CycloAccum acc(f);
    for (long r = 0; r <= twoj; ++r) {
        if (u[r].is_zero() || v[r].is_zero()) continue;
        Cyclo t = u[r].conj() * v[r];
        acc.add_product(t, Cyclo::from_rational(f, Rat(SpinOperator::gram_weight(twoj, r))));
    }
    return acc.take();
}

SpinOperator group_projector(const FiniteSubgroup& g, const Character2D& chi, long twoj) {
    long nv = lcm_long(g.field().conductor(), chi.values.front().conductor());
    const CycloField& f = CycloField::get(nv);
    std::vector<SpinOperator> reps = wigner_d_all(g, twoj);
    long dim = twoj + 1;

    // conjugate of the character per class, promoted to the common field
    std::vector<Cyclo> coeff;
    const auto& classes = g.conjugacy_classes();
    for (size_t c = 0; c < classes.size(); ++c) coeff.push_back(chi.values[c].promote(f).conj());

    CycloMat sum(f, dim, dim);
    CycloAccum acc(f);
    bool same_field = (nv == g.field().conductor());
    for (long r = 0; r < dim; ++r) {
        for (long c = 0; c < dim; ++c) {
            for (long i = 0; i < g.order(); ++i) {
                const Cyclo& x = coeff[g.class_of(i)];
                if (x.is_zero()) continue;
                const Cyclo& entry = reps[i].monomial().at(r, c);
                if (entry.is_zero()) continue;
                if (same_field)
                    acc.add_product(x, entry);
                else
                    acc.add_product(x, entry.promote(f));
            }
            sum.at(r, c) = acc.take();
        }
    }
    Cyclo scale = Cyclo::from_rational(f, Rat(2, g.order()));
    return SpinOperator(twoj, sum.scaled(scale));
}

SpinOperator logical_z_projector(const CycloField& f, long twoj) {
    if (twoj % 2 == 0) throw Error("logical Z projector needs odd 2j");
    long dim = twoj + 1;
    CycloMat m(f, dim, dim);
    for (long r = 0; r < dim; r += 2) m.at(r, r) = Cyclo::from_rational(f, 1);
    return SpinOperator(twoj, std::move(m));
}

namespace {

// Scale a real kernel vector to a canonical representative: primitive
// integer-like content and positive leading (lowest-weight) coefficient.
void canonicalize_ket(CycloVec& v) {
    const CycloField& f = v.front().field();
    Int lcm_den(1), gcd_num(0);
    for (const Cyclo& x : v) {
        for (const Rat& q : x.coeffs()) {
            if (q == 0) continue;
            Int den = q.get_den();
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
        }
    }
    for (const Cyclo& x : v) {
        for (const Rat& q : x.coeffs()) {
            if (q == 0) continue;
            Int n = q.get_num() * (lcm_den / q.get_den());
            mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), n.get_mpz_t());
        }
    }
    if (gcd_num == 0) return;
    Rat scale(lcm_den, gcd_num);
    scale.canonicalize();
    int lead_sign = 0;
    for (const Cyclo& x : v) {
        if (!x.is_zero()) {
            lead_sign = x.sign_real();
            break;
        }
    }
    if (lead_sign < 0) scale = -scale;
    if (scale == 1) return;
    Cyclo s = Cyclo::from_rational(f, scale);
    for (Cyclo& x : v)
        if (!x.is_zero()) x = x * s;
}

} // namespace

SpinCode extract_codewords(const FiniteSubgroup& g, const Character2D& chi, long twoj,
                           const std::vector<Rat>& selector) {
    long mu = irrep_multiplicity(g, chi, twoj);
    if (mu == 0)
        throw NoIrrepAvailable("irrep " + chi.label + " has multiplicity 0 at j = " +
                               format_half_integer(twoj));
    std::vector<Rat> sel = selector;
    if (sel.empty()) {
        sel.assign(mu, Rat(0));
        sel[0] = 1;
    }
    if (static_cast<long>(sel.size()) != mu)
        throw Error("selector length must equal the multiplicity mu = " + std::to_string(mu));
    bool all_zero = true;
    for (const Rat& q : sel)
        if (q != 0) all_zero = false;
    if (all_zero) throw Error("selector must not be identically zero");

    SpinOperator pg = group_projector(g, chi, twoj);
    SpinOperator pz = logical_z_projector(pg.field(), twoj);
    SpinOperator m = pg * pz;

    const CycloField& f = m.field();
    long dim = twoj + 1;
    CycloMat shifted = m.monomial() - CycloMat::identity(f, dim);
    std::vector<CycloVec> eigen = kernel_basis(shifted);
    if (static_cast<long>(eigen.size()) != mu)
        throw InternalInconsistency("+1 eigenspace dimension disagrees with multiplicity");

    for (const CycloVec& v : eigen)
        for (const Cyclo& x : v)
            if (!x.is_real()) throw InternalInconsistency("eigenvector entries must be real");

    CycloVec ket0(dim, Cyclo::zero(f));
    for (long i = 0; i < mu; ++i) {
        if (sel[i] == 0) continue;
        Cyclo c = Cyclo::from_rational(f, sel[i]);
        for (long r = 0; r < dim; ++r)
            if (!eigen[i][r].is_zero()) ket0[r] += eigen[i][r] * c;
    }
    canonicalize_ket(ket0);

    // ket1 = i D^j(X) ket0
    SpinOperator dx = wigner_d(GroupElement(gate_x(g.field())).promote(f), twoj);
    CycloVec ket1 = dx.monomial().apply(ket0);
    Cyclo i_unit = imag_unit(f);
    for (Cyclo& x : ket1)
        if (!x.is_zero()) x = x * i_unit;

    SpinCode code;
    code.twoj = twoj;
    code.group_label = g.name();
    code.irrep_label = chi.label;
    code.selector = std::move(sel);
    code.mu = mu;
    code.norm_sq = gram_inner(twoj, ket0, ket0);
    Cyclo n1 = gram_inner(twoj, ket1, ket1);
    Cyclo cross = gram_inner(twoj, ket0, ket1);
    if (!(code.norm_sq == n1) || !cross.is_zero() || code.norm_sq.is_zero())
        throw InternalInconsistency("codewords are not an orthogonal equal-norm pair");
    for (const Cyclo& x : ket1)
        if (!x.is_real()) throw InternalInconsistency("ket1 must be real");
    code.ket0 = std::move(ket0);
    code.ket1 = std::move(ket1);
    return code;
}

const std::vector<long>& family_exceptions() {
    static const std::vector<long> ex{1, 3, 5, 9, 11, 15, 21};
    return ex;
}

namespace {
struct Family2I {
    FiniteSubgroup group;
    std::vector<Character2D> chars;
    Family2I() : group(make_2I()) { chars = faithful_2d_characters(group); }
    const Character2D& pi2bar() const { return chars[1]; }
};
const Family2I& family_2i() {
    static const Family2I* ctx = new Family2I();
    return *ctx;
}
} // namespace

SpinCode build_family(long n, const std::vector<Rat>& selector) {
    if (n < 1) throw Error("n must be a positive integer");
    if (n % 2 == 0) throw EvenN("the 2I family exists only at odd n");
    return extract_codewords(family_2i().group, family_2i().pi2bar(), n, selector);
}

bool KLReport::rank_passes(int rank) const {
    for (const KLEntry& e : entries)
        if (e.rank == rank && !e.scalar) return false;
    return true;
}

KLReport spin_kl_check(const SpinCode& code, long d) {
    if (d < 1) throw Error("distance must be >= 1");
    const CycloField& f = code.field();
    long twoj = code.twoj;
    const std::array<char, 3> alphas{'+', 'z', '-'};
    std::vector<SpinOperator> js;
    for (char a : alphas) js.push_back(angular_momentum(f, twoj, a));

    KLReport report;
    report.max_rank_checked = d - 1;
    const CycloVec* kets[2] = {&code.ket0, &code.ket1};

    // enumerate words over {J+, Jz, J-} of length p = 0 .. d-1
    for (long p = 0; p < d; ++p) {
        long count = 1;
        for (long t = 0; t < p; ++t) count *= 3;
        for (long word = 0; word < count; ++word) {
            std::string label;
            std::optional<SpinOperator> op;
            long w = word;
            for (long t = 0; t < p; ++t) {
                long letter = w % 3;
                w /= 3;
                label += (t ? " J" : "J");
                label += alphas[letter];
                op = op ? (*op * js[letter]) : js[letter];
            }
            if (p == 0) label = "identity";

            Cyclo m[2][2] = {{Cyclo::zero(f), Cyclo::zero(f)}, {Cyclo::zero(f), Cyclo::zero(f)}};
            for (int l = 0; l < 2; ++l) {
                CycloVec image = op ? op->monomial().apply(*kets[l]) : *kets[l];
                for (int k = 0; k < 2; ++k) m[k][l] = gram_inner(twoj, *kets[k], image);
            }
            KLEntry entry;
            entry.op_label = label;
            entry.rank = static_cast<int>(p);
            bool off_zero = m[0][1].is_zero() && m[1][0].is_zero();
            bool diag_equal = m[0][0] == m[1][1];
            entry.scalar = off_zero && diag_equal;
            entry.exactly_zero =
                off_zero && m[0][0].is_zero() && m[1][1].is_zero();
            double dev = 0.0;
            Cyclo diff = m[0][0] - m[1][1];
            for (const Cyclo* x : {&m[0][1], &m[1][0], &diff})
                dev = std::max(dev, std::abs(x->embed()) / std::abs(code.norm_sq.embed()));
            entry.deviation = dev;
            report.entries.push_back(std::move(entry));
        }
    }
    report.pass = true;
    for (const KLEntry& e : report.entries)
        if (!e.scalar) report.pass = false;
    long certified = 0;
    for (long p = 0; p < d; ++p) {
        if (!report.rank_passes(static_cast<int>(p))) break;
        certified = p + 1;
    }
    report.distance_certified = certified;
    return report;
}

CycloMat gamma_tilde(const FiniteSubgroup& g, const Character2D& chi, const GroupElement& gprime,
                     const LieAlgebraElement& e) {
    auto gp = g.index_of(gprime);
    if (!gp) throw Error("g' is not an element of the group");
    long nv = lcm_long(g.field().conductor(), chi.values.front().conductor());
    const CycloField& f = CycloField::get(nv);
    bool promote = nv != g.field().conductor();

    std::vector<Cyclo> chi_conj;
    for (const Cyclo& v : chi.values) chi_conj.push_back(v.promote(f).conj());

    CycloMat efund = e.fundamental();
    if (efund.field().conductor() != g.field().conductor()) efund = efund.promote(g.field());

    CycloAccum acc00(f), acc01(f), acc10(f), acc11(f);
    for (long i = 0; i < g.order(); ++i) {
        const Cyclo& c1 = chi_conj[g.class_of(i)];
        if (c1.is_zero()) continue;
        long rest = g.mul_index(g.inverse_index(i), *gp);
        const Cyclo& c2 = chi_conj[g.class_of(rest)];
        if (c2.is_zero()) continue;
        Cyclo coeff = c1 * c2;
        CycloMat term = g.element(i).matrix() * efund * g.element(i).inverse().matrix();
        if (promote) term = term.promote(f);
        if (!term.at(0, 0).is_zero()) acc00.add_product(coeff, term.at(0, 0));
        if (!term.at(0, 1).is_zero()) acc01.add_product(coeff, term.at(0, 1));
        if (!term.at(1, 0).is_zero()) acc10.add_product(coeff, term.at(1, 0));
        if (!term.at(1, 1).is_zero()) acc11.add_product(coeff, term.at(1, 1));
    }
    CycloMat out(f, 2, 2);
    out.at(0, 0) = acc00.take();
    out.at(0, 1) = acc01.take();
    out.at(1, 0) = acc10.take();
    out.at(1, 1) = acc11.take();
    return out;
}

bool gamma_identically_zero(const FiniteSubgroup& g, const Character2D& chi) {
    long nv = lcm_long(g.field().conductor(), chi.values.front().conductor());
    const CycloField& f = CycloField::get(nv);
    const CycloField& fg = g.field();
    bool promote = nv != fg.conductor();

    std::vector<Cyclo> chi_conj;
    for (const Cyclo& v : chi.values) chi_conj.push_back(v.promote(f).conj());

    // basis of su_C(2): J+, Jz, J-
    std::vector<CycloMat> basis;
    {
        Cyclo one = Cyclo::from_rational(fg, 1), zero = Cyclo::zero(fg);
        LieAlgebraElement jp{one, zero, zero}, jz{zero, one, zero}, jm{zero, zero, one};
        for (const auto& e : {jp, jz, jm}) basis.push_back(e.fundamental());
    }
    // precompute g E g^-1 per (element, basis) in the common field
    long order = g.order();
    std::vector<std::array<CycloMat, 3>> conj(order);
    for (long i = 0; i < order; ++i) {
        for (int e = 0; e < 3; ++e) {
            CycloMat t = g.element(i).matrix() * basis[e] * g.element(i).inverse().matrix();
            conj[i][e] = promote ? t.promote(f) : std::move(t);
        }
    }
    std::vector<long> inv_idx(order);
    for (long i = 0; i < order; ++i) inv_idx[i] = g.inverse_index(i);

    std::vector<CycloAccum> acc;
    acc.reserve(12);
    for (int k = 0; k < 12; ++k) acc.emplace_back(f);
    for (long gp = 0; gp < order; ++gp) {
        for (long i = 0; i < order; ++i) {
            const Cyclo& c1 = chi_conj[g.class_of(i)];
            if (c1.is_zero()) continue;
            const Cyclo& c2 = chi_conj[g.class_of(g.mul_index(inv_idx[i], gp))];
            if (c2.is_zero()) continue;
            Cyclo coeff = c1 * c2;
            for (int e = 0; e < 3; ++e) {
                const CycloMat& t = conj[i][e];
                for (int k = 0; k < 4; ++k) {
                    const Cyclo& x = t.at(k / 2, k % 2);
                    if (!x.is_zero()) acc[e * 4 + k].add_product(coeff, x);
                }
            }
        }
        bool all_zero = true;
        for (int k = 0; k < 12; ++k)
            if (!acc[k].take().is_zero()) all_zero = false;
        if (!all_zero) return false;
    }
    return true;
}

std::vector<GammaScanRow> gamma_scan(long bdn_max, long jobs) {
    struct Job {
        std::string group_name;
        long bdn = 0;  // 0 for the exceptional groups
    };
    std::vector<Job> work{{"2T", 0}, {"2O", 0}, {"2I", 0}};
    for (long n = 1; n <= bdn_max; ++n) work.push_back({"BD" + std::to_string(n), n});

    std::vector<std::vector<GammaScanRow>> results(work.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t idx = next.fetch_add(1);
            if (idx >= work.size()) break;
            FiniteSubgroup g = make_group_by_name(work[idx].group_name);
            auto chars = faithful_2d_characters(g);
            for (const Character2D& chi : chars) {
                GammaScanRow row;
                row.group = g.name();
                row.character = chi.label;
                row.identically_zero = gamma_identically_zero(g, chi);
                results[idx].push_back(std::move(row));
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (long t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::vector<GammaScanRow> rows;
    for (auto& part : results)
        for (auto& row : part) rows.push_back(std::move(row));
    return rows;
}

std::vector<CoefficientForm> normalized_coefficients(const SpinCode& code, int which) {
    const CycloVec& ket = which == 0 ? code.ket0 : code.ket1;
    std::vector<CoefficientForm> out;
    HighFloat norm_hp = code.norm_sq.embed_hp().re;
    for (long r = 0; r <= code.twoj; ++r) {
        if (ket[r].is_zero()) continue;
        CoefficientForm cf;
        cf.weight = r;
        cf.sign = ket[r].sign_real();
        Cyclo sq = ket[r] * ket[r] *
                   Cyclo::from_rational(code.field(), Rat(SpinOperator::gram_weight(code.twoj, r)));
        Cyclo normalized_sq = sq / code.norm_sq;
        if (normalized_sq.is_rational()) {
            cf.exact = true;
            cf.square = normalized_sq.rational_value();
            cf.value_hp = hp_sqrt(hp_from_rational(cf.square));
        } else {
            cf.exact = false;
            cf.value_hp = hp_sqrt(sq.embed_hp().re / norm_hp);
        }
        if (cf.sign < 0) cf.value_hp = -cf.value_hp;
        cf.value = cf.value_hp.convert_to<double>();
        out.push_back(std::move(cf));
    }
    return out;
}

} // namespace exotic
