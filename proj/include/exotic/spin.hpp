#pragma once

#include <vector>

#include "exotic/character.hpp"
#include "exotic/group.hpp"

namespace exotic {

/*
 * Spin-j machinery.  Half-integers are carried as 2j (a nonnegative long).
 *
 * Operators are stored in the monomial frame: row r of a spin-j space
 * corresponds to |j, m> with m = j - r (so r is the Dicke weight), and the
 * monomial basis vector x^(n-r) y^r relates to the orthonormal one by the
 * Gram weight F_r = (n-r)! r!.  A unitary-frame matrix U and its monomial
 * frame M are conjugate, U = W M W^-1 with W = diag(sqrt F_r), so products,
 * traces, spectra and kernels agree between frames while every stored entry
 * remains an exact cyclotomic scalar.  Unitary-frame entries are recovered
 * on demand as (field element, square root of a rational) pairs.
 */
class SpinOperator {
public:
    SpinOperator() = default;
    SpinOperator(long twoj, CycloMat monomial_frame);

    long twoj() const { return twoj_; }
    long dim() const { return twoj_ + 1; }
    const CycloField& field() const { return mat_.field(); }
    const CycloMat& monomial() const { return mat_; }
    CycloMat& monomial() { return mat_; }

    // Gram weight of row r: (n-r)! r!.
    static Int gram_weight(long twoj, long r);

    // Unitary-frame entry as value * sqrt(radicand): (M_rc, F_r / F_c).
    std::pair<Cyclo, Rat> unitary_entry(long r, long c) const;
    std::complex<double> unitary_entry_numeric(long r, long c) const;

    SpinOperator operator*(const SpinOperator& o) const;
    SpinOperator operator+(const SpinOperator& o) const;
    SpinOperator operator-(const SpinOperator& o) const;
    SpinOperator scaled(const Cyclo& s) const;
    bool operator==(const SpinOperator& o) const { return twoj_ == o.twoj_ && mat_ == o.mat_; }

    // Adjoint with respect to the Gram form (represents the dagger of the
    // unitary-frame operator).
    SpinOperator adjoint() const;

    // Exact unitarity test of the unitary-frame operator: M^dag G M = G.
    bool is_gram_unitary() const;
    // The unitary-frame matrix is real symmetric iff F_r M_rc = F_c M_cr
    // with all entries real.
    bool is_real_symmetric_unitary() const;

    Cyclo trace() const { return mat_.trace(); }

private:
    long twoj_ = 0;
    CycloMat mat_;
};

// Wigner D matrix of an exact SU(2) element at spin j (monomial frame).
SpinOperator wigner_d(const GroupElement& g, long twoj);

// All D^j(g) for g in G, in group element order, built along the BFS tree.
std::vector<SpinOperator> wigner_d_all(const FiniteSubgroup& g, long twoj);

// Angular momentum operators at spin j; alpha is '+', 'z' or '-'.
// Monomial-frame matrix entries are ratios of integers (exact).
SpinOperator angular_momentum(const CycloField& f, long twoj, char alpha);

// The Dicke weight w = j - m; n = 2j.  Arguments as doubled integers.
long dicke_weight(long twoj, long twom);

// Element of complexified su(2) spanned by (J+, Jz, J-).
struct LieAlgebraElement {
    Cyclo cp, c0, cm;

    // Realization at spin j in the monomial frame.
    SpinOperator realize(long twoj) const;
    // 2x2 matrix in the defining representation.
    CycloMat fundamental() const;
    // Decompose a traceless 2x2 matrix over the (J+, Jz, J-) basis.
    static LieAlgebraElement from_fundamental(const CycloMat& m);
};

// Trace of D^j(g), exact.
Cyclo spin_character(const GroupElement& g, long twoj);

// Per-class spin characters computed by the Chebyshev-style recursion
// chi_j = chi_(1/2) chi_(j-1/2) - chi_(j-1); one value per conjugacy class.
std::vector<Cyclo> spin_character_table(const FiniteSubgroup& g, long twoj);

// Multiplicity of a 2-dim irrep inside spin j over G: exact nonnegative
// integer (1/|G|) sum chi(g)* chi_j(g); throws InternalInconsistency if the
// exact result is not a nonnegative integer.
long irrep_multiplicity(const FiniteSubgroup& g, const Character2D& chi, long twoj);

// Multiplicity of the irrep in the n-th tensor power of the defining rep.
long tensor_multiplicity(const FiniteSubgroup& g, const Character2D& chi, long n);

// Multiplicity of spin j inside (C^2)^(x n): C(n, n/2-j) - C(n, n/2-j-1).
Int schur_weyl_multiplicity(long n, long twoj);

// "7/2" <-> twoj helpers for interfaces.
std::string format_half_integer(long twoj);
long parse_half_integer(const std::string& text);

} // namespace exotic
