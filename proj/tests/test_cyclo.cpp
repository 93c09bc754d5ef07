#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "exotic/cyclo.hpp"
#include "exotic/numeric.hpp"

using namespace exotic;

TEST_CASE("field degrees") {
    CHECK(CycloField::get(1).degree() == 1);   // Q(zeta_1) = Q
    CHECK(CycloField::get(40).degree() == 16); // phi(40)
    CHECK(CycloField::get(8).degree() == 4);
    CHECK(CycloField::get(5).degree() == 4);
    CHECK(CycloField::get(120).degree() == 32);
}

TEST_CASE("sqrt2 squares to 2 in Q(zeta_8)") {
    const CycloField& f = CycloField::get(8);
    Cyclo r = sqrt2(f);
    Cyclo sq = r * r;
    CHECK(sq.is_rational());
    CHECK(sq.rational_value() == 2);
}

TEST_CASE("golden ratio identities in Q(zeta_5) and Q(zeta_40)") {
    for (long n : {5L, 40L}) {
        const CycloField& f = CycloField::get(n);
        Cyclo s5 = sqrt5(f);
        CHECK((s5 * s5).rational_value() == 5);
        Cyclo phi = golden_ratio(f);
        Cyclo phi_inv = phi - Cyclo::from_rational(f, 1);
        // phi * (-1/phi) = -1
        Cyclo prod = phi * (-phi_inv);
        CHECK(prod.is_rational());
        CHECK(prod.rational_value() == -1);
        CHECK((phi * phi_inv).rational_value() == 1);
    }
}

TEST_CASE("field inverse round trips") {
    const CycloField& f = CycloField::get(40);
    Cyclo a = Cyclo::zeta(f, 1);
    CHECK((a * a.inv()).rational_value() == 1);
    Cyclo b = golden_ratio(f) + Cyclo::zeta(f, 3) - Cyclo::from_rational(f, Rat(7, 3));
    Cyclo prod = b * b.inv();
    CHECK(prod.is_rational());
    CHECK(prod.rational_value() == 1);
    CHECK_THROWS_AS(Cyclo::zero(f).inv(), DivisionByZero);
}

TEST_CASE("conductor mismatch is rejected") {
    Cyclo a = Cyclo::zeta(CycloField::get(8), 1);
    Cyclo b = Cyclo::zeta(CycloField::get(5), 1);
    CHECK_THROWS_AS(a * b, ConductorMismatch);
    CHECK_THROWS_AS(a + b, ConductorMismatch);
    auto [ap, bp] = to_common_field(a, b);
    CHECK(ap.conductor() == 40);
    CHECK((ap * bp) == Cyclo::zeta(CycloField::get(40), 13));  // z8 z5 = z40^5 z40^8
}

TEST_CASE("galois automorphism: k=17 at N=40 sends sqrt5 to -sqrt5, fixes zeta_8") {
    const CycloField& f = CycloField::get(40);
    Cyclo s5 = sqrt5(f);
    CHECK(s5.galois(17) == -s5);
    Cyclo z8 = Cyclo::zeta(f, 5);
    CHECK(z8.galois(17) == z8);
    Cyclo phi = golden_ratio(f);
    Cyclo phi_inv = phi - Cyclo::from_rational(f, 1);
    CHECK(phi.galois(17) == -phi_inv);  // phi -> -1/phi
    // rationals are fixed by every automorphism
    Cyclo q = Cyclo::from_rational(f, Rat(22, 7));
    for (long k : {3L, 7L, 9L, 11L, 13L, 17L}) CHECK(q.galois(k) == q);
    CHECK_THROWS_AS(s5.galois(5), NotCoprime);
}

TEST_CASE("galois is a ring homomorphism (random pairs)") {
    const CycloField& f = CycloField::get(40);
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coef(-4, 4);
    auto random_scalar = [&] {
        std::vector<Rat> c(f.degree());
        for (Rat& x : c) x = Rat(coef(rng), 1 + std::abs(coef(rng)));
        return Cyclo(f, std::move(c));
    };
    for (int trial = 0; trial < 50; ++trial) {
        Cyclo a = random_scalar(), b = random_scalar();
        long k = 17;
        CHECK((a * b).galois(k) == a.galois(k) * b.galois(k));
        CHECK((a + b).galois(k) == a.galois(k) + b.galois(k));
    }
}

TEST_CASE("numeric embedding respects arithmetic") {
    const CycloField& f = CycloField::get(40);
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coef(-3, 3);
    auto random_scalar = [&] {
        std::vector<Rat> c(f.degree());
        for (Rat& x : c) x = Rat(coef(rng), 1 + std::abs(coef(rng)));
        return Cyclo(f, std::move(c));
    };
    for (int trial = 0; trial < 200; ++trial) {
        Cyclo a = random_scalar(), b = random_scalar();
        auto ea = a.embed(), eb = b.embed();
        CHECK(std::abs((a * b).embed() - ea * eb) < 1e-12 * (1.0 + std::abs(ea) * std::abs(eb)));
        CHECK(std::abs((a + b).embed() - (ea + eb)) < 1e-12 * (1.0 + std::abs(ea) + std::abs(eb)));
    }
    // high-precision embedding agrees with double embedding
    Cyclo phi = golden_ratio(f);
    ComplexHP hp = phi.embed_hp();
    CHECK(std::abs(hp.re.convert_to<double>() - (1 + std::sqrt(5.0)) / 2) < 1e-15);
    CHECK(hp.im.convert_to<double>() < 1e-45);
}

TEST_CASE("two-power subfield membership at N=40") {
    const CycloField& f = CycloField::get(40);
    CHECK(in_two_power_subfield(sqrt2(f)));
    CHECK_FALSE(in_two_power_subfield(sqrt5(f)));
    CHECK_FALSE(in_two_power_subfield(golden_ratio(f)));

    // random elements of Q(zeta_8) stay inside; sqrt5-multiples fall outside
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> coef(-5, 5);
    const CycloField& f8 = CycloField::get(8);
    int checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<Rat> c(f8.degree());
        for (Rat& x : c) x = Rat(coef(rng), 1 + std::abs(coef(rng)));
        Cyclo a8 = Cyclo(f8, std::move(c)).promote(f);
        CHECK(in_two_power_subfield(a8));
        if (!a8.is_zero()) {
            CHECK_FALSE(in_two_power_subfield(a8 * sqrt5(f)));
            ++checked;
        }
    }
    CHECK(checked > 900);
}

TEST_CASE("recognize_sqrt_rational on the printed coefficients") {
    NumericConfig cfg = NumericConfig::f64();
    long max_den = 1 << 20;

    auto r = recognize_sqrt_rational(std::sqrt(15.0) / 8.0, max_den, cfg);
    REQUIRE(r.has_value());
    CHECK(r->sign == 1);
    CHECK(r->square == Rat(15, 64));

    auto r2 = recognize_sqrt_rational(-std::sqrt(21.0) / 8.0, max_den, cfg);
    REQUIRE(r2.has_value());
    CHECK(r2->sign == -1);
    CHECK(r2->square == Rat(21, 64));

    auto r0 = recognize_sqrt_rational(0.0, max_den, cfg);
    REQUIRE(r0.has_value());
    CHECK(r0->square == 0);
}

TEST_CASE("recognize_sqrt_rational round trips random squares") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(0, 10000), den(1, 10000);
    NumericConfig cfg = NumericConfig::f64();
    for (int trial = 0; trial < 300; ++trial) {
        Rat q(num(rng), den(rng));
        q.canonicalize();
        if (q.get_den() > (1 << 20)) continue;
        int sign = (trial % 2 == 0) ? 1 : -1;
        double x = sign * std::sqrt(q.get_d());
        auto rec = recognize_sqrt_rational(x, 1 << 20, cfg);
        REQUIRE(rec.has_value());
        CHECK(rec->square == q);
        if (q != 0) CHECK(rec->sign == sign);
    }
    // high-precision mode round trip
    NumericConfig hp = NumericConfig::hp();
    Rat q(3510, 36864);
    q.canonicalize();
    HighFloat x = hp_sqrt(hp_from_rational(q));
    auto rec = recognize_sqrt_rational(x, 1 << 20, hp);
    REQUIRE(rec.has_value());
    CHECK(rec->square == q);
}

TEST_CASE("N=1 and N=2 degenerate to the rationals") {
    const CycloField& f1 = CycloField::get(1);
    Cyclo a = Cyclo::from_rational(f1, Rat(3, 4));
    CHECK((a * a).rational_value() == Rat(9, 16));
    const CycloField& f2 = CycloField::get(2);
    CHECK(Cyclo::zeta(f2, 1).rational_value() == -1);
}

TEST_CASE("promotion embeds consistently") {
    const CycloField& f8 = CycloField::get(8);
    const CycloField& f40 = CycloField::get(40);
    Cyclo a = sqrt2(f8) + Cyclo::zeta(f8, 3);
    Cyclo b = a.promote(f40);
    CHECK(std::abs(a.embed() - b.embed()) < 1e-14);
    CHECK(b.promote(f40) == b);
}
