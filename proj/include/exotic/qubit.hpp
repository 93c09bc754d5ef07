#pragma once

#include <complex>
#include <optional>

#include "exotic/code.hpp"

namespace exotic {

/*
 * Multiqubit view of a spin code under the Dicke mapping |j,m> -> |D_w^n>,
 * w = j - m, n = 2j.  The exact data is shared with the SpinCode: the
 * monomial-frame coefficient at row w is the reduced Dicke coefficient, and
 * the physical amplitude on a basis state of weight w is
 * ket[w] * F_w / sqrt(norm_sq * n!), a single global radical.
 */
struct QubitCode {
    SpinCode spin;

    long n() const { return spin.twoj; }
    // Normalized Dicke-basis coefficients (numeric).
    std::vector<std::complex<double>> dicke_coefficients(int which) const;
    // Dense 2^n statevector (numeric); n <= 21.
    std::vector<double> expand(int which) const;
    // Exact amplitude numerators W_s = ket[w] (n-w)! w! shared by all basis
    // states of weight w; the normalization is 1/sqrt(norm_sq * n!).
    CycloVec amplitude_numerators(int which) const;
};

QubitCode to_multiqubit(const SpinCode& code);

// Brute-force Knill-Laflamme check over every Pauli string of weight
// 1..max_weight on the full 2^n expansion.  Numeric, tolerance from cfg.
// The independent oracle for the spin-side and symmetrized checks.
KLReport pauli_kl_oracle(const QubitCode& code, long max_weight, const NumericConfig& cfg);

// Exact Knill-Laflamme check against the permutation-symmetrized error
// basis (collective ladder operators and their products) in the (n+1)-dim
// Dicke basis; equivalent verdict to the oracle, scales to any n.
KLReport symmetrized_kl_check(const QubitCode& code, long max_weight);

struct WeightEnumerator {
    long n = 0;
    long K = 2;
    std::vector<Rat> A, B;  // length n+1, exact

    long distance() const;  // max t with A_i = B_i for all i < t
};

// Shor-Laflamme enumerators A_i = (1/K^2) sum |Tr(E Pi)|^2,
// B_i = (1/K) sum Tr(E Pi E Pi) over unnormalized Pauli strings of weight i.
// Exact; n <= 9 unless force_large (then n <= 13).
WeightEnumerator weight_enumerators(const QubitCode& code, bool force_large = false);

struct LogicalAction {
    bool preserved = false;
    CycloMat logical;        // 2x2, basis (ket0, ket1), when preserved
    double residual = 0.0;   // numeric size of the codespace leakage
};

// Action of u^(x n) on the codespace, evaluated spin-side via the Dicke
// intertwiner; exact.
LogicalAction logical_action(const QubitCode& code, const GroupElement& u);

// Same, in the display basis (ket0, X^(x n) ket0) used by the codeword
// listings; differs from the stored basis by at most the sign of ket1.
LogicalAction logical_action_display_basis(const QubitCode& code, const GroupElement& u);

struct TransversalReport {
    bool pass = false;
    long checked = 0;
    std::vector<long> failed_elements;          // indices in G
    // pairing: element index -> (logical partner index in G, sign)
    std::vector<std::pair<long, int>> pairing;
};

// Every g in G must preserve the codespace with tr L(g) = chi([g]) exactly.
TransversalReport certify_transversal_group(const QubitCode& code, const FiniteSubgroup& g,
                                            const Character2D& chi);

} // namespace exotic
