#include "exotic/gates.hpp"

namespace exotic {

namespace {
CycloMat mat2(const CycloField& f, Cyclo a, Cyclo b, Cyclo c, Cyclo d) {
    CycloMat m(f, 2, 2);
    m.at(0, 0) = std::move(a);
    m.at(0, 1) = std::move(b);
    m.at(1, 0) = std::move(c);
    m.at(1, 1) = std::move(d);
    return m;
}
} // namespace

CycloMat gate_x(const CycloField& f) {
    Cyclo z = Cyclo::zero(f), mi = -imag_unit(f);
    return mat2(f, z, mi, mi, z);
}

CycloMat gate_y(const CycloField& f) {
    Cyclo z = Cyclo::zero(f), one = Cyclo::from_rational(f, 1);
    return mat2(f, z, one, -one, z);
}

CycloMat gate_z(const CycloField& f) {
    Cyclo z = Cyclo::zero(f), i = imag_unit(f);
    return mat2(f, -i, z, z, i);
}

CycloMat gate_h(const CycloField& f) {
    // -i/sqrt2 * [[1,1],[1,-1]]
    Cyclo c = -imag_unit(f) * sqrt2(f) * Cyclo::from_rational(f, Rat(1, 2));
    return mat2(f, c, c, c, -c);
}

CycloMat gate_s(const CycloField& f) {
    if (f.conductor() % 8 != 0) throw Error("phase gate needs 8 | conductor");
    long s = f.conductor() / 8;
    Cyclo z = Cyclo::zero(f);
    return mat2(f, Cyclo::zeta(f, -s), z, z, Cyclo::zeta(f, s));
}

CycloMat gate_f(const CycloField& f) {
    // (z8^-1/sqrt2) [[1,-i],[1,i]]
    if (f.conductor() % 8 != 0) throw Error("facet gate needs 8 | conductor");
    Cyclo i = imag_unit(f);
    Cyclo c = Cyclo::zeta(f, -f.conductor() / 8) * sqrt2(f) * Cyclo::from_rational(f, Rat(1, 2));
    return mat2(f, c, -(c * i), c, c * i);
}

CycloMat gate_t(const CycloField& f) {
    if (f.conductor() % 16 != 0) throw Error("T gate needs 16 | conductor");
    long s = f.conductor() / 16;
    Cyclo z = Cyclo::zero(f);
    return mat2(f, Cyclo::zeta(f, -s), z, z, Cyclo::zeta(f, s));
}

CycloMat gate_phase(const CycloField& f, long n) {
    if (f.conductor() % (2 * n) != 0) throw Error("phase(2pi/n) needs 2n | conductor");
    long s = f.conductor() / (2 * n);
    Cyclo z = Cyclo::zero(f);
    return mat2(f, Cyclo::zeta(f, -s), z, z, Cyclo::zeta(f, s));
}

CycloMat gate_phi(const CycloField& f) {
    Cyclo half = Cyclo::from_rational(f, Rat(1, 2));
    Cyclo one = Cyclo::from_rational(f, 1);
    Cyclo i = imag_unit(f);
    Cyclo phi = golden_ratio(f);
    Cyclo phi_inv = phi - one;  // 1/phi = phi - 1
    return mat2(f, half * (phi + i * phi_inv), half, -half, half * (phi - i * phi_inv));
}

} // namespace exotic
