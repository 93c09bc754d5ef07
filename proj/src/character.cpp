#include "exotic/character.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace exotic {

Cyclo class_function_inner(const FiniteSubgroup& g, const std::vector<Cyclo>& a,
                           const std::vector<Cyclo>& b) {
    const auto& classes = g.conjugacy_classes();
    long n = lcm_long(a.front().conductor(), b.front().conductor());
    const CycloField& f = CycloField::get(n);
    Cyclo acc = Cyclo::zero(f);
    for (size_t c = 0; c < classes.size(); ++c) {
        Cyclo term = a[c].promote(f) * b[c].promote(f).conj();
        acc += term * Cyclo::from_rational(f, Rat(static_cast<long>(classes[c].members.size())));
    }
    return acc * Cyclo::from_rational(f, Rat(1, g.order()));
}

namespace {

// Indices of the commutator subgroup [G,G]: normal closure of the
// commutators of the generators.
std::vector<long> commutator_subgroup(const FiniteSubgroup& g) {
    std::set<long> seed;
    const auto& gens = g.generators();
    for (const GroupElement& a : gens) {
        for (const GroupElement& b : gens) {
            GroupElement comm = a.inverse() * b.inverse() * a * b;
            seed.insert(g.index_of(comm).value());
        }
    }
    std::set<long> sub{g.identity_index()};
    bool grew = true;
    while (grew) {
        grew = false;
        // subgroup closure
        std::vector<long> cur(sub.begin(), sub.end());
        for (long x : cur)
            for (long s : seed)
                if (sub.insert(g.mul_index(x, s)).second) grew = true;
        // normality: conjugate by generators
        cur.assign(sub.begin(), sub.end());
        for (long x : cur) {
            for (const GroupElement& gen : gens) {
                GroupElement conj = gen * g.element(x) * gen.inverse();
                long idx = g.index_of(conj).value();
                if (!sub.count(idx)) {
                    seed.insert(idx);
                    sub.insert(idx);
                    grew = true;
                }
            }
        }
    }
    return {sub.begin(), sub.end()};
}

struct Abelianization {
    std::vector<long> coset_of;       // element index -> coset id
    std::vector<long> coset_rep;      // coset id -> representative element index
    std::vector<std::vector<long>> mult;  // coset multiplication table
    long order = 0;
};

Abelianization abelianization(const FiniteSubgroup& g) {
    std::vector<long> comm = commutator_subgroup(g);
    std::vector<long> key(g.order(), -1);
    for (long e = 0; e < g.order(); ++e) {
        long best = g.order();
        for (long h : comm) best = std::min(best, g.mul_index(e, h));
        key[e] = best;
    }
    Abelianization ab;
    std::map<long, long> ids;
    ab.coset_of.resize(g.order());
    for (long e = 0; e < g.order(); ++e) {
        auto it = ids.find(key[e]);
        if (it == ids.end()) {
            it = ids.emplace(key[e], static_cast<long>(ids.size())).first;
            ab.coset_rep.push_back(key[e]);
        }
        ab.coset_of[e] = it->second;
    }
    ab.order = static_cast<long>(ids.size());
    ab.mult.assign(ab.order, std::vector<long>(ab.order));
    for (long a = 0; a < ab.order; ++a)
        for (long b = 0; b < ab.order; ++b)
            ab.mult[a][b] = ab.coset_of[g.mul_index(ab.coset_rep[a], ab.coset_rep[b])];
    return ab;
}

long coset_order(const Abelianization& ab, long c) {
    long x = c, ord = 1;
    while (x != 0) {
        x = ab.mult[x][c];
        ++ord;
    }
    return ord;
}

// All |A| homomorphisms A -> C^* of a small abelian group, as value vectors
// indexed by coset id, with values in Q(zeta_e), e = exponent of A.
std::vector<std::vector<Cyclo>> abelian_characters(const Abelianization& ab) {
    long e = 1;
    std::vector<long> orders(ab.order);
    for (long c = 0; c < ab.order; ++c) {
        orders[c] = coset_order(ab, c);
        e = lcm_long(e, orders[c]);
    }
    const CycloField& f = CycloField::get(e);

    // greedy generating set
    std::vector<long> gens;
    std::set<long> span{0};
    while (static_cast<long>(span.size()) < ab.order) {
        long pick = -1;
        for (long c = 0; c < ab.order; ++c)
            if (!span.count(c)) {
                pick = c;
                break;
            }
        gens.push_back(pick);
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<long> cur(span.begin(), span.end());
            for (long x : cur)
                for (long gi : gens)
                    if (span.insert(ab.mult[x][gi]).second) grew = true;
        }
    }

    // enumerate assignments of zeta^(e/o_i * a_i) to each generator
    std::vector<std::vector<Cyclo>> found;
    std::vector<long> a(gens.size(), 0);
    auto try_assignment = [&]() {
        std::vector<long> val(ab.order, -1);  // zeta exponent per coset
        val[0] = 0;
        // BFS fill
        bool ok = true;
        bool grew = true;
        while (grew && ok) {
            grew = false;
            for (long x = 0; x < ab.order && ok; ++x) {
                if (val[x] < 0) continue;
                for (size_t i = 0; i < gens.size(); ++i) {
                    long y = ab.mult[x][gens[i]];
                    long want = (val[x] + (e / coset_order(ab, gens[i])) * a[i]) % e;
                    if (val[y] < 0) {
                        val[y] = want;
                        grew = true;
                    } else if (val[y] != want) {
                        ok = false;
                        break;
                    }
                }
            }
        }
        if (!ok) return;
        for (long v : val)
            if (v < 0) return;
        // full consistency over all products
        for (long x = 0; x < ab.order; ++x)
            for (long y = 0; y < ab.order; ++y)
                if ((val[x] + val[y]) % e != val[ab.mult[x][y]]) return;
        std::vector<Cyclo> chi(ab.order, Cyclo::zero(f));
        for (long x = 0; x < ab.order; ++x) chi[x] = Cyclo::zeta(f, val[x]);
        for (const auto& seen : found)
            if (seen == chi) return;
        found.push_back(std::move(chi));
    };
    // odometer over generator assignments
    while (true) {
        try_assignment();
        size_t i = 0;
        for (; i < gens.size(); ++i) {
            long o = coset_order(ab, gens[i]);
            if (++a[i] < o) break;
            a[i] = 0;
        }
        if (i == gens.size()) break;
    }
    if (static_cast<long>(found.size()) != ab.order)
        throw InternalInconsistency("abelian character count mismatch");
    return found;
}

} // namespace

std::vector<std::vector<Cyclo>> one_dim_characters(const FiniteSubgroup& g) {
    Abelianization ab = abelianization(g);
    auto abelian = abelian_characters(ab);
    const auto& classes = g.conjugacy_classes();
    std::vector<std::vector<Cyclo>> out;
    for (const auto& chi : abelian) {
        std::vector<Cyclo> per_class;
        per_class.reserve(classes.size());
        for (const auto& cls : classes) per_class.push_back(chi[ab.coset_of[cls.representative]]);
        out.push_back(std::move(per_class));
    }
    return out;
}

std::vector<Character2D> faithful_2d_characters(const FiniteSubgroup& g) {
    const auto& classes = g.conjugacy_classes();
    long nclasses = static_cast<long>(classes.size());

    std::vector<Cyclo> defining;
    defining.reserve(nclasses);
    for (const auto& cls : classes) defining.push_back(g.element(cls.representative).trace());

    auto one_dim = one_dim_characters(g);

    // common field for candidate values
    long nv = g.field().conductor();
    for (const auto& lam : one_dim) nv = lcm_long(nv, lam.front().conductor());
    const CycloField& f = CycloField::get(nv);

    std::vector<std::vector<Cyclo>> candidates;
    auto push_unique = [&](std::vector<Cyclo> v) {
        for (const auto& seen : candidates)
            if (seen == v) return;
        candidates.push_back(std::move(v));
    };
    for (const auto& lam : one_dim) {
        std::vector<Cyclo> v;
        v.reserve(nclasses);
        for (long c = 0; c < nclasses; ++c) v.push_back(defining[c].promote(f) * lam[c].promote(f));
        push_unique(std::move(v));
    }
    // Galois closure of the value vectors
    for (size_t start = 0; start < candidates.size(); ++start) {
        for (long k = 2; k < nv; ++k) {
            if (std::gcd(k, nv) != 1) continue;
            std::vector<Cyclo> tw;
            tw.reserve(nclasses);
            for (const Cyclo& x : candidates[start]) tw.push_back(x.galois(k));
            push_unique(std::move(tw));
        }
    }

    Cyclo one = Cyclo::from_rational(f, 1);
    Cyclo two = Cyclo::from_rational(f, 2);
    std::vector<Character2D> result;
    for (auto& v : candidates) {
        if (!(v[0] == two)) continue;
        Cyclo norm = class_function_inner(g, v, v);
        if (!(norm.is_rational() && norm.rational_value() == 1)) continue;
        bool faithful = true;
        for (long c = 1; c < nclasses; ++c)
            if (v[c] == two) {
                faithful = false;
                break;
            }
        if (!faithful) continue;
        Character2D chi;
        chi.group = &g;
        chi.values = std::move(v);
        chi.faithful = true;
        result.push_back(std::move(chi));
    }
    // deterministic order: defining character first, then lexicographic
    std::vector<Cyclo> def_prom;
    for (const Cyclo& x : defining) def_prom.push_back(x.promote(f));
    std::stable_sort(result.begin(), result.end(), [&](const Character2D& a, const Character2D& b) {
        bool da = a.values == def_prom, db = b.values == def_prom;
        if (da != db) return da;
        for (long c = 0; c < nclasses; ++c) {
            int cmp = a.values[c].compare(b.values[c]);
            if (cmp != 0) return cmp < 0;
        }
        return false;
    });
    for (size_t i = 0; i < result.size(); ++i) {
        if (g.name() == "2I" && result.size() == 2)
            result[i].label = (result[i].values == def_prom) ? "pi2" : "pi2bar";
        else
            result[i].label = "chi2d_" + std::to_string(i);
    }
    return result;
}

IrrepTable icosahedral_irrep_table(const FiniteSubgroup& two_i) {
    if (two_i.order() != 120) throw Error("icosahedral table needs a group of order 120");
    const CycloField& f = two_i.field();
    if (f.conductor() % 5 != 0) throw Error("icosahedral table needs sqrt5 in the field");

    // locate the canonical classes: 1, -1, X, F, -F, Phi, Phi^2, Phi^3, Phi^4
    GroupElement id{CycloMat::identity(f, 2)};
    GroupElement x{gate_x(f)}, fa{gate_f(f)}, ph{gate_phi(f)};
    std::vector<long> cls(9);
    auto class_idx = [&](const GroupElement& g) {
        auto i = two_i.index_of(g);
        if (!i) throw Error("group is not the expected realization of 2I");
        return two_i.class_of(*i);
    };
    cls[0] = class_idx(id);
    cls[1] = class_idx(-id);
    cls[2] = class_idx(x);
    cls[3] = class_idx(fa);
    cls[4] = class_idx(-fa);
    GroupElement p = ph;
    for (int k = 1; k <= 4; ++k) {
        cls[4 + k] = class_idx(p);
        p = p * ph;
    }

    Cyclo phi = golden_ratio(f);
    Cyclo phi_inv = phi - Cyclo::from_rational(f, 1);
    auto R = [&](long q) { return Cyclo::from_rational(f, q); };

    IrrepTable table;
    table.group = &two_i;
    table.labels = {"pi1", "pi2", "pi2bar", "pi3", "pi3bar", "pi4", "pi4p", "pi5", "pi6"};
    table.dims = {1, 2, 2, 3, 3, 4, 4, 5, 6};
    std::vector<std::vector<Cyclo>> rows = {
        {R(1), R(1), R(1), R(1), R(1), R(1), R(1), R(1), R(1)},
        {R(2), R(-2), R(0), R(1), R(-1), phi, phi_inv, -phi_inv, -phi},
        {R(2), R(-2), R(0), R(1), R(-1), -phi_inv, -phi, phi, phi_inv},
        {R(3), R(3), R(-1), R(0), R(0), phi, -phi_inv, -phi_inv, phi},
        {R(3), R(3), R(-1), R(0), R(0), -phi_inv, phi, phi, -phi_inv},
        {R(4), R(-4), R(0), R(-1), R(1), R(1), R(-1), R(1), R(-1)},
        {R(4), R(4), R(0), R(1), R(1), R(-1), R(-1), R(-1), R(-1)},
        {R(5), R(5), R(1), R(-1), R(-1), R(0), R(0), R(0), R(0)},
        {R(6), R(-6), R(0), R(0), R(0), R(-1), R(1), R(-1), R(1)},
    };
    // re-index the rows into the group's own class order
    long nclasses = static_cast<long>(two_i.conjugacy_classes().size());
    if (nclasses != 9) throw InternalInconsistency("2I must have 9 conjugacy classes");
    table.values.assign(rows.size(), std::vector<Cyclo>(9, Cyclo::zero(f)));
    for (size_t r = 0; r < rows.size(); ++r)
        for (long c = 0; c < 9; ++c) table.values[r][cls[c]] = rows[r][c];

    // orthogonality check certifies the transcription
    for (size_t a = 0; a < rows.size(); ++a) {
        for (size_t b = a; b < rows.size(); ++b) {
            Cyclo ip = class_function_inner(two_i, table.values[a], table.values[b]);
            Rat expect = (a == b) ? 1 : 0;
            if (!(ip.is_rational() && ip.rational_value() == expect))
                throw InternalInconsistency("icosahedral character table fails orthogonality");
        }
    }
    return table;
}

} // namespace exotic
