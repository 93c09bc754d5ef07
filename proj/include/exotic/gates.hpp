#pragma once

#include "exotic/matrix.hpp"

namespace exotic {

/*
 * Canonical determinant-1 single-qubit gates.  Sans-serif SU(2) forms:
 * the U(2) Paulis X, Y, Z correspond to -iX, -iY, -iZ, the Hadamard to
 * -iH, the phase gate to e^{-i pi/4} S, and so on.  Entries are exact
 * cyclotomic scalars; anything built from {X,Z,F,H,S,Phi} lives in
 * Q(zeta_40).
 */

// 2x2 SU(2) matrix helpers at an explicit conductor.
CycloMat gate_x(const CycloField& f);       // -iX
CycloMat gate_y(const CycloField& f);       // -iY
CycloMat gate_z(const CycloField& f);       // -iZ
CycloMat gate_h(const CycloField& f);       // -iH
CycloMat gate_s(const CycloField& f);       // e^{-i pi/4} S = diag(z8^-1, z8)
CycloMat gate_f(const CycloField& f);       // facet gate, H S^dagger determinant-1 form
CycloMat gate_t(const CycloField& f);       // diag(z16^-1, z16), needs 16 | N
CycloMat gate_phase(const CycloField& f, long n);  // diag(z_2n^-1, z_2n), the 2pi/n phase gate
CycloMat gate_phi(const CycloField& f);     // the golden-ratio gate of 2I

// Default field for the exceptional-group gate set.
inline const CycloField& field40() { return CycloField::get(40); }

} // namespace exotic
