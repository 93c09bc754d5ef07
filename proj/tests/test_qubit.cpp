#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "exotic/codefile.hpp"
#include "exotic/qubit.hpp"

using namespace exotic;

namespace {
const FiniteSubgroup& g2i() {
    static const FiniteSubgroup* g = new FiniteSubgroup(make_2I());
    return *g;
}
const Character2D& pi2bar() {
    static const std::vector<Character2D>* chars =
        new std::vector<Character2D>(faithful_2d_characters(g2i()));
    return (*chars)[1];
}

const QubitCode& code7() {
    static const QubitCode* c = new QubitCode(to_multiqubit(build_family(7)));
    return *c;
}

QubitCode trivial_one_qubit_code() {
    const CycloField& f = field40();
    SpinCode code;
    code.twoj = 1;
    code.group_label = "trivial";
    code.irrep_label = "defining";
    code.mu = 1;
    code.selector = {Rat(1)};
    code.ket0 = {Cyclo::from_rational(f, 1), Cyclo::zero(f)};
    code.ket1 = {Cyclo::zero(f), Cyclo::from_rational(f, 1)};
    code.norm_sq = Cyclo::from_rational(f, 1);
    return QubitCode{code};
}

// normalized Dicke state |D_w^n> as a dense vector
std::vector<double> dicke_state(long n, long w) {
    std::vector<double> v(1ul << n, 0.0);
    double amp = 1.0 / std::sqrt(binomial(n, w).get_d());
    for (unsigned long s = 0; s < v.size(); ++s)
        if (std::popcount(s) == w) v[s] = amp;
    return v;
}
} // namespace

TEST_CASE("Dicke expansion of the ((7,2,3)) code matches the displayed coefficients") {
    auto d0 = code7().dicke_coefficients(0);
    std::vector<double> expect{std::sqrt(15.0) / 8, 0, std::sqrt(7.0) / 8, 0, std::sqrt(21.0) / 8,
                               0, -std::sqrt(21.0) / 8, 0};
    double flip = d0[0].real() > 0 ? 1.0 : -1.0;
    for (long w = 0; w <= 7; ++w) {
        CHECK(std::abs(d0[w].imag()) < 1e-14);
        CHECK(d0[w].real() * flip == doctest::Approx(expect[w]).epsilon(1e-12));
    }
    // |1bar> carries the mirrored pattern on odd weights
    auto d1 = code7().dicke_coefficients(1);
    for (long w = 0; w <= 7; ++w)
        CHECK(std::abs(d1[w]) == doctest::Approx(std::abs(expect[7 - w])).epsilon(1e-12));
    // the state vector is normalized
    auto state = code7().expand(0);
    double norm = 0;
    for (double a : state) norm += a * a;
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("the ((17,2,3)) codewords match the printed squares and signs") {
    QubitCode code = to_multiqubit(build_family(17));
    auto coeffs = normalized_coefficients(code.spin, 0);
    std::vector<long> weights{0, 2, 4, 6, 8, 10, 12, 14, 16};
    std::vector<long> sq{3510, 663, 9282, 357, 8976, 561, 3570, 3315, 6630};
    std::vector<int> signs{1, -1, 1, 1, 1, -1, -1, 1, 1};
    REQUIRE(coeffs.size() == 9);
    int flip = 0;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        CHECK(coeffs[i].weight == weights[i]);
        REQUIRE(coeffs[i].exact);
        CHECK(coeffs[i].square == Rat(sq[i], 36864));
        if (!flip) flip = coeffs[i].sign * signs[i];
        CHECK(coeffs[i].sign * signs[i] == flip);
    }
}

TEST_CASE("Dicke mapping is unitary on random permutation-invariant vectors") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (long n : {3L, 6L, 9L}) {
        std::vector<double> u(n + 1), v(n + 1);
        for (long w = 0; w <= n; ++w) {
            u[w] = coef(rng);
            v[w] = coef(rng);
        }
        // spin-side inner product
        double spin_ip = 0;
        for (long w = 0; w <= n; ++w) spin_ip += u[w] * v[w];
        // qubit-side inner product of sum_w u_w |D_w^n>
        std::vector<double> du(1ul << n, 0.0), dv(1ul << n, 0.0);
        for (long w = 0; w <= n; ++w) {
            auto dw = dicke_state(n, w);
            for (size_t s = 0; s < dw.size(); ++s) {
                du[s] += u[w] * dw[s];
                dv[s] += v[w] * dw[s];
            }
        }
        double qubit_ip = 0;
        for (size_t s = 0; s < du.size(); ++s) qubit_ip += du[s] * dv[s];
        CHECK(qubit_ip == doctest::Approx(spin_ip).epsilon(1e-10));
    }
}

TEST_CASE("collective ladder images of Dicke states match the brute-force qubit computation") {
    for (long n = 1; n <= 10; ++n) {
        for (long w = 0; w <= n; ++w) {
            auto dw = dicke_state(n, w);
            // apply sum_i J-^(i): J- |0> = |1> on each qubit
            std::vector<double> lowered(dw.size(), 0.0);
            for (unsigned long s = 0; s < dw.size(); ++s) {
                if (dw[s] == 0.0) continue;
                for (long i = 0; i < n; ++i)
                    if (!(s >> i & 1)) lowered[s | (1ul << i)] += dw[s];
            }
            double expected = (w < n) ? std::sqrt(double((n - w) * (w + 1))) : 0.0;
            auto target = (w < n) ? dicke_state(n, w + 1) : std::vector<double>(dw.size(), 0.0);
            for (size_t s = 0; s < dw.size(); ++s)
                CHECK(lowered[s] == doctest::Approx(expected * target[s]).epsilon(1e-10));

            // raising: sum_i J+^(i) |D_w> = sqrt(w(n-w+1)) |D_{w-1}>
            std::vector<double> raised(dw.size(), 0.0);
            for (unsigned long s = 0; s < dw.size(); ++s) {
                if (dw[s] == 0.0) continue;
                for (long i = 0; i < n; ++i)
                    if (s >> i & 1) raised[s & ~(1ul << i)] += dw[s];
            }
            double expected_up = (w > 0) ? std::sqrt(double(w * (n - w + 1))) : 0.0;
            auto target_up = (w > 0) ? dicke_state(n, w - 1) : std::vector<double>(dw.size(), 0.0);
            for (size_t s = 0; s < dw.size(); ++s)
                CHECK(raised[s] == doctest::Approx(expected_up * target_up[s]).epsilon(1e-10));
        }
    }
}

TEST_CASE("X and Z tensor powers act on Dicke states as weight flip and parity") {
    for (long n : {2L, 5L, 8L, 10L}) {
        for (long w = 0; w <= n; ++w) {
            auto dw = dicke_state(n, w);
            unsigned long full = (1ul << n) - 1;
            auto flipped = dicke_state(n, n - w);
            for (unsigned long s = 0; s < dw.size(); ++s)
                CHECK(dw[s ^ full] == doctest::Approx(flipped[s]).epsilon(1e-12));
            // Z^(x n) |s> = (-1)^wt(s) |s>
            double parity = (w % 2 == 0) ? 1.0 : -1.0;
            for (unsigned long s = 0; s < dw.size(); ++s) {
                double z = (std::popcount(s) % 2 == 0) ? dw[s] : -dw[s];
                CHECK(z == doctest::Approx(parity * dw[s]).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("pauli KL oracle on the ((7,2,3)) code: 210 errors up to weight 2 all pass") {
    KLReport report = pauli_kl_oracle(code7(), 2, NumericConfig::f64());
    CHECK(report.pass);
    long w1 = 0, w2 = 0;
    for (const KLEntry& e : report.entries) {
        if (e.rank == 1) ++w1;
        if (e.rank == 2) ++w2;
    }
    CHECK(w1 == 21);
    CHECK(w2 == 189);
    CHECK(report.distance_certified == 3);
}

TEST_CASE("the 1-qubit trivial code fails the oracle at weight 1") {
    KLReport report = pauli_kl_oracle(trivial_one_qubit_code(), 1, NumericConfig::f64());
    CHECK_FALSE(report.pass);
    CHECK_FALSE(report.rank_passes(1));
}

TEST_CASE("symmetrized KL check agrees with the oracle per rank") {
    for (long n : {7L, 13L}) {
        QubitCode code = to_multiqubit(build_family(n));
        KLReport sym = symmetrized_kl_check(code, 2);
        KLReport oracle = pauli_kl_oracle(code, 2, NumericConfig::f64());
        CHECK(sym.pass == oracle.pass);
        for (int rank : {0, 1, 2}) CHECK(sym.rank_passes(rank) == oracle.rank_passes(rank));
        CHECK(sym.pass);
    }
    // and on a failing code
    QubitCode bad = trivial_one_qubit_code();
    KLReport sym = symmetrized_kl_check(bad, 1);
    KLReport oracle = pauli_kl_oracle(bad, 1, NumericConfig::f64());
    CHECK(sym.pass == oracle.pass);
    CHECK_FALSE(sym.rank_passes(1));
}

TEST_CASE("weight enumerators of the ((7,2,3)) code") {
    WeightEnumerator we = weight_enumerators(code7());
    std::vector<long> a_expect{1, 0, 7, 0, 7, 0, 49, 0};
    std::vector<long> b_expect{1, 0, 7, 42, 7, 84, 49, 66};
    REQUIRE(we.A.size() == 8);
    for (long i = 0; i <= 7; ++i) {
        CHECK(we.A[i] == Rat(a_expect[i]));
        CHECK(we.B[i] == Rat(b_expect[i]));
    }
    CHECK(we.distance() == 3);
    CHECK(we.A[0] == 1);
    CHECK(we.B[0] == 1);
}

TEST_CASE("weight enumerator size bound") {
    QubitCode code13 = to_multiqubit(build_family(13));
    CHECK_THROWS_AS(weight_enumerators(code13), SizeBoundExceeded);
}

TEST_CASE("logical actions on the ((7,2,3)) code") {
    const CycloField& f = field40();
    GroupElement x{gate_x(f)}, z{gate_z(f)}, phi{gate_phi(f)}, s{gate_s(f)};

    // display basis: X^(x7) implements -X, Z^(x7) implements -Z, exact signs
    LogicalAction lx = logical_action_display_basis(code7(), x);
    REQUIRE(lx.preserved);
    CHECK(lx.logical == (-x).matrix());
    LogicalAction lz = logical_action_display_basis(code7(), z);
    REQUIRE(lz.preserved);
    CHECK(lz.logical == (-z).matrix());

    // stored basis differs from the display basis by the sign of ket1
    LogicalAction lxs = logical_action(code7(), x);
    REQUIRE(lxs.preserved);
    CHECK(lxs.logical == x.matrix());
    LogicalAction lzs = logical_action(code7(), z);
    REQUIRE(lzs.preserved);
    CHECK(lzs.logical == (-z).matrix());

    // physical Phi implements logical Phi* up to the group sign
    GroupElement phi_star = star_conjugate(phi);
    LogicalAction lphi = logical_action_display_basis(code7(), phi);
    REQUIRE(lphi.preserved);
    bool is_star = lphi.logical == phi_star.matrix();
    bool is_minus_star = lphi.logical == (-phi_star).matrix();
    CHECK((is_star || is_minus_star));

    // S does not preserve the codespace
    LogicalAction ls = logical_action(code7(), s);
    CHECK_FALSE(ls.preserved);
    CHECK(ls.residual > 1e-3);
}

TEST_CASE("logical action is a homomorphism on random pairs") {
    const FiniteSubgroup& g = g2i();
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> pick(0, g.order() - 1);
    for (int trial = 0; trial < 100; ++trial) {
        long i = pick(rng), j = pick(rng);
        LogicalAction li = logical_action(code7(), g.element(i));
        LogicalAction lj = logical_action(code7(), g.element(j));
        LogicalAction lij = logical_action(code7(), g.element(g.mul_index(i, j)));
        REQUIRE(li.preserved);
        REQUIRE(lj.preserved);
        REQUIRE(lij.preserved);
        CHECK((li.logical * lj.logical) == lij.logical);
    }
}

TEST_CASE("transversal certification for 2I passes; the Clifford group fails") {
    TransversalReport report = certify_transversal_group(code7(), g2i(), pi2bar());
    CHECK(report.pass);
    CHECK(report.checked == 120);
    // physical Phi is paired with logical Phi* (up to sign)
    const CycloField& f = field40();
    long phi_idx = g2i().index_of(GroupElement(gate_phi(f))).value();
    long star_idx = g2i().index_of(star_conjugate(GroupElement(gate_phi(f)))).value();
    CHECK(report.pairing[phi_idx].first == star_idx);

    FiniteSubgroup o = make_2O();
    auto ochars = faithful_2d_characters(o);
    TransversalReport bad = certify_transversal_group(code7(), o, ochars[0]);
    CHECK_FALSE(bad.pass);
    long s_idx = o.index_of(GroupElement(gate_s(f))).value();
    bool s_failed = false;
    for (long idx : bad.failed_elements)
        if (idx == s_idx) s_failed = true;
    CHECK(s_failed);
}

TEST_CASE("code files round trip and reconstruct exactly") {
    CodeFileData data = make_codefile(code7());
    std::string json1 = codefile_json(data);
    write_codefile(data, "test_code7.json");
    CodeFileData back = read_codefile("test_code7.json");
    CHECK(codefile_json(back) == json1);

    auto rebuilt = codefile_to_code(back);
    REQUIRE(rebuilt.has_value());
    KLReport report = spin_kl_check(rebuilt->spin, 3);
    CHECK(report.pass);
    WeightEnumerator we = weight_enumerators(*rebuilt);
    CHECK(we.A[2] == 7);
    CHECK(we.B[5] == 84);

    // a sign flip on the weight-4 term breaks the KL conditions
    CodeFileData tampered = back;
    for (CodeTerm& t : tampered.codewords[0])
        if (t.weight == 4) t.sign = -t.sign;
    auto bad = codefile_to_code(tampered);
    REQUIRE(bad.has_value());
    KLReport bad_report = spin_kl_check(bad->spin, 3);
    CHECK_FALSE(bad_report.pass);

    // display rendering shows the sqrt(p)/q coefficients
    std::string display = render_display(data);
    CHECK(display.find("sqrt(15)/8") != std::string::npos);
    CHECK(display.find("|D_0^7>") != std::string::npos);
}

TEST_CASE("malformed code files are rejected") {
    {
        std::ofstream out("bad1.json");
        out << "{ not json";
    }
    CHECK_THROWS_AS(read_codefile("bad1.json"), MalformedFile);
    CHECK_THROWS_AS(read_codefile("missing_file.json"), MalformedFile);
    {
        std::ofstream out("bad2.json");
        out << "{\"format_version\":1,\"n\":7}";
    }
    CHECK_THROWS_AS(read_codefile("bad2.json"), MalformedFile);
}
