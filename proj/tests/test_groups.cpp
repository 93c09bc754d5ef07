#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "exotic/character.hpp"
#include "exotic/group.hpp"

using namespace exotic;

namespace {
const FiniteSubgroup& g2i() {
    static const FiniteSubgroup* g = new FiniteSubgroup(make_2I());
    return *g;
}
const FiniteSubgroup& g2t() {
    static const FiniteSubgroup* g = new FiniteSubgroup(make_2T());
    return *g;
}
const FiniteSubgroup& g2o() {
    static const FiniteSubgroup* g = new FiniteSubgroup(make_2O());
    return *g;
}
} // namespace

TEST_CASE("group orders") {
    CHECK(g2i().order() == 120);
    CHECK(g2o().order() == 48);
    CHECK(g2t().order() == 24);
    CHECK(make_bd(1).order() == 4);
    CHECK(make_bd(2).order() == 8);
    CHECK(make_bd(7).order() == 28);
    const CycloField& f = field40();
    FiniteSubgroup triv = FiniteSubgroup::generate({GroupElement(CycloMat::identity(f, 2))});
    CHECK(triv.order() == 1);
    CHECK(triv.conjugacy_classes().size() == 1);
}

TEST_CASE("H and S determinant-1 forms generate the 48-element Clifford group") {
    const CycloField& f = field40();
    FiniteSubgroup c = FiniteSubgroup::generate({GroupElement(gate_h(f)), GroupElement(gate_s(f))});
    CHECK(c.order() == 48);
}

TEST_CASE("closure bound signals huge groups") {
    const CycloField& f = field40();
    CHECK_THROWS_AS(FiniteSubgroup::generate({GroupElement(gate_x(f)), GroupElement(gate_phi(f)),
                                              GroupElement(gate_f(f)), GroupElement(gate_z(f))},
                                             30),
                    ClosureExceeded);
}

TEST_CASE("Phi^5 = -1 and the generators are exactly unitary") {
    const CycloField& f = field40();
    GroupElement phi{gate_phi(f)};
    GroupElement p = phi;
    for (int k = 0; k < 4; ++k) p = p * phi;
    GroupElement minus_id = -GroupElement(CycloMat::identity(f, 2));
    CHECK(p == minus_id);
    CHECK_THROWS(GroupElement(gate_phi(f).scaled(Cyclo::from_rational(f, 2))));
}

TEST_CASE("2I conjugacy classes match the known sizes and orders") {
    const auto& classes = g2i().conjugacy_classes();
    REQUIRE(classes.size() == 9);
    std::multiset<long> sizes, orders;
    for (const auto& c : classes) {
        sizes.insert(static_cast<long>(c.members.size()));
        orders.insert(c.element_order);
    }
    CHECK(sizes == std::multiset<long>({1, 1, 30, 20, 20, 12, 12, 12, 12}));
    CHECK(orders == std::multiset<long>({1, 2, 4, 3, 6, 10, 5, 10, 5}));
    long total = 0;
    for (const auto& c : classes) total += static_cast<long>(c.members.size());
    CHECK(total == 120);
    // identity class is a singleton
    CHECK(classes[g2i().class_of(0)].members.size() == 1);
}

TEST_CASE("rearrangement: left translation permutes the group") {
    const FiniteSubgroup& g = g2i();
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> pick(0, g.order() - 1);
    for (int trial = 0; trial < 4; ++trial) {
        long i = pick(rng);
        std::set<long> image;
        for (long j = 0; j < g.order(); ++j) image.insert(g.mul_index(i, j));
        CHECK(static_cast<long>(image.size()) == g.order());
    }
}

TEST_CASE("faithful 2d character counts: 2T has 3, 2O has 2, 2I has 2") {
    CHECK(faithful_2d_characters(g2t()).size() == 3);
    CHECK(faithful_2d_characters(g2o()).size() == 2);
    auto chars = faithful_2d_characters(g2i());
    REQUIRE(chars.size() == 2);
    CHECK(chars[0].label == "pi2");
    CHECK(chars[1].label == "pi2bar");
}

TEST_CASE("BD_n faithful 2d character count is phi(2n)/2 for n >= 3") {
    for (long n : {3L, 4L, 5L, 6L, 10L}) {
        auto chars = faithful_2d_characters(make_bd(n));
        CHECK(static_cast<long>(chars.size()) == euler_phi(2 * n) / 2);
    }
    CHECK(faithful_2d_characters(make_bd(2)).size() == 1);  // quaternion group
    CHECK(faithful_2d_characters(make_bd(1)).empty());      // cyclic C4, no 2-dim irreps
}

TEST_CASE("the two 2I characters take phi and -1/phi on the class of Phi") {
    const FiniteSubgroup& g = g2i();
    auto chars = faithful_2d_characters(g);
    REQUIRE(chars.size() == 2);
    const CycloField& f = g.field();
    long phi_cls = g.class_of(g.index_of(GroupElement(gate_phi(f))).value());
    Cyclo golden = golden_ratio(f);
    Cyclo minus_inv = -(golden - Cyclo::from_rational(f, 1));
    CHECK(chars[0].on_class(phi_cls) == golden);
    CHECK(chars[1].on_class(phi_cls) == minus_inv);
    // identity value is 2, and the characters are exchanged by sqrt5 -> -sqrt5
    CHECK(chars[0].on_class(g.class_of(0)).rational_value() == 2);
    for (size_t c = 0; c < chars[0].values.size(); ++c)
        CHECK(chars[0].values[c].galois(17) == chars[1].values[c]);
}

TEST_CASE("character orthogonality") {
    for (const FiniteSubgroup* g : {&g2t(), &g2o(), &g2i()}) {
        auto chars = faithful_2d_characters(*g);
        for (size_t a = 0; a < chars.size(); ++a) {
            for (size_t b = 0; b < chars.size(); ++b) {
                Cyclo ip = class_function_inner(*g, chars[a].values, chars[b].values);
                REQUIRE(ip.is_rational());
                CHECK(ip.rational_value() == (a == b ? 1 : 0));
            }
        }
    }
}

TEST_CASE("clifford membership") {
    const CycloField& f = field40();
    CHECK(clifford_membership(GroupElement(gate_f(f))));
    CHECK(clifford_membership(GroupElement(CycloMat::identity(f, 2))));
    CHECK_FALSE(clifford_membership(GroupElement(gate_phi(f))));
}

TEST_CASE("hierarchy classification over all of 2I: 24 clifford, 96 exotic") {
    long clifford = 0, exotic = 0, indet = 0;
    for (const GroupElement& g : g2i().elements()) {
        switch (classify_hierarchy(g)) {
            case HierarchyClass::Clifford: ++clifford; break;
            case HierarchyClass::Exotic: ++exotic; break;
            case HierarchyClass::Indeterminate: ++indet; break;
        }
    }
    CHECK(clifford == 24);
    CHECK(exotic == 96);
    CHECK(indet == 0);
}

TEST_CASE("classification is invariant under global sign") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> pick(0, 119);
    for (int trial = 0; trial < 20; ++trial) {
        const GroupElement& g = g2i().element(pick(rng));
        CHECK(classify_hierarchy(g) == classify_hierarchy(-g));
    }
}

TEST_CASE("T gate is in the hierarchy but not Clifford: indeterminate") {
    const CycloField& f80 = CycloField::get(80);
    GroupElement t{gate_t(f80)};
    CHECK(classify_hierarchy(t) == HierarchyClass::Indeterminate);
    CHECK(classify_hierarchy(GroupElement(gate_phi(field40()))) == HierarchyClass::Exotic);
}

TEST_CASE("coset decompositions") {
    auto reps_it = g2i().coset_representatives(g2t());
    CHECK(reps_it.size() == 5);
    auto reps_ot = g2o().coset_representatives(g2t());
    CHECK(reps_ot.size() == 2);
    auto reps_gg = g2i().coset_representatives(g2i());
    CHECK(reps_gg.size() == 1);
    CHECK_THROWS_AS(g2t().coset_representatives(g2o()), NotASubgroup);

    // brute-force check: the 2 cosets of 2T in 2O partition 2O
    std::set<long> seen;
    for (long rep : reps_ot)
        for (long m : g2o().coset_members(rep, g2t())) CHECK(seen.insert(m).second);
    CHECK(static_cast<long>(seen.size()) == 48);
}

TEST_CASE("exotic if and only if outside the identity coset of 2T") {
    const FiniteSubgroup& g = g2i();
    auto reps = g.coset_representatives(g2t());
    std::set<long> identity_coset;
    for (long m : g.coset_members(0, g2t())) identity_coset.insert(m);
    CHECK(identity_coset.size() == 24);
    for (long i = 0; i < g.order(); ++i) {
        bool in_identity_coset = identity_coset.count(i) > 0;
        HierarchyClass c = classify_hierarchy(g.element(i));
        CHECK((c == HierarchyClass::Exotic) == !in_identity_coset);
        CHECK((c == HierarchyClass::Clifford) == in_identity_coset);
    }
}

TEST_CASE("star conjugation") {
    const CycloField& f = field40();
    GroupElement phi{gate_phi(f)};
    GroupElement phi_star = star_conjugate(phi);
    CHECK(phi_star != phi);
    // building 2I from Phi* still gives order 120
    CHECK(make_2I_star().order() == 120);
    // star = (sqrt5 twist) then entrywise conjugation, equal to direct evaluation
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> pick(0, 119);
    for (int trial = 0; trial < 10; ++trial) {
        const GroupElement& g = g2i().element(pick(rng));
        GroupElement s = star_conjugate(g);
        for (long r = 0; r < 2; ++r)
            for (long c = 0; c < 2; ++c) CHECK(s.entry(r, c) == g.entry(r, c).galois(17).conj());
    }
    GroupElement id{CycloMat::identity(f, 2)};
    CHECK(star_conjugate(id) == id);
    // X has no sqrt5 content: star(X) is plain entrywise conjugation
    GroupElement x{gate_x(f)};
    CHECK(star_conjugate(x) == -x);
}

TEST_CASE("group lookup by name") {
    CHECK(make_group_by_name("2T").order() == 24);
    CHECK(make_group_by_name("BD3").order() == 12);
    CHECK_THROWS(make_group_by_name("E8"));
}

TEST_CASE("icosahedral irrep table passes orthogonality and identifies classes") {
    IrrepTable table = icosahedral_irrep_table(g2i());
    REQUIRE(table.labels.size() == 9);
    long sum_sq = 0;
    for (long d : table.dims) sum_sq += d * d;
    CHECK(sum_sq == 120);
}
