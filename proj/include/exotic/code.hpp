#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exotic/numeric.hpp"
#include "exotic/spin.hpp"

namespace exotic {

/*
 * Construction pipeline for spin codes with a prescribed transversal group:
 * project onto the chosen 2-dim irrep inside spin j, intersect with the +1
 * eigenspace of logical Z, and read codewords off the kernel.  All vectors
 * are kept in the monomial frame (see SpinOperator); inner products carry
 * the Gram weights F_r.
 */
struct SpinCode {
    long twoj = 0;  // n = 2j
    std::string group_label, irrep_label;
    std::vector<Rat> selector;
    long mu = 0;

    // Exact unnormalized codewords (monomial frame, real entries).
    CycloVec ket0, ket1;
    // Gram norm <ket|ket>, equal for both kets; real and positive.
    Cyclo norm_sq;

    long n() const { return twoj; }
    const CycloField& field() const { return norm_sq.field(); }
};

// Gram inner product <u|v> = sum_r F_r conj(u_r) v_r at spin j.
Cyclo gram_inner(long twoj, const CycloVec& u, const CycloVec& v);

// Step 1: Pi_G = (2/|G|) sum_g chi(g)* D^j(g); idempotent, real symmetric
// in the unitary frame, trace = 2 mu.
SpinOperator group_projector(const FiniteSubgroup& g, const Character2D& chi, long twoj);

// Step 2: projector onto the +1 eigenspace of logical Z, i.e. onto even
// Dicke weights; diagonal, real, idempotent.  Requires 2j odd.
SpinOperator logical_z_projector(const CycloField& f, long twoj);

// Step 3: codewords.  selector has length mu (empty means (1,0,...,0));
// ket0 is the selector combination of the canonical +1 eigenbasis of
// Pi_G Pi_Z, sign-normalized; ket1 = i D^j(X) ket0.
SpinCode extract_codewords(const FiniteSubgroup& g, const Character2D& chi, long twoj,
                           const std::vector<Rat>& selector = {});

// The whole pipeline for the binary icosahedral family at odd n.
SpinCode build_family(long n, const std::vector<Rat>& selector = {});

// Odd n with no code in the 2I family.
const std::vector<long>& family_exceptions();

struct KLEntry {
    std::string op_label;
    int rank = 0;
    bool scalar = false;        // M_E proportional to the identity (exact)
    bool exactly_zero = false;  // M_E = 0
    double deviation = 0.0;     // numeric size of the worst violation
};

struct KLReport {
    long max_rank_checked = 0;
    std::vector<KLEntry> entries;
    bool pass = false;            // every entry of every rank is scalar
    long distance_certified = 0;  // largest d with all ranks p < d scalar

    bool rank_passes(int rank) const;
};

// Knill-Laflamme conditions for products of angular momentum operators of
// length p < d, checked exactly.
KLReport spin_kl_check(const SpinCode& code, long d);

// The group-averaged functional sum_g chi(g)* chi(g^-1 g')* g E g^-1 in the
// defining representation; identical vanishing (over all g' and E) certifies
// rank-1 KL vanishing at every spin j.
CycloMat gamma_tilde(const FiniteSubgroup& g, const Character2D& chi, const GroupElement& gprime,
                     const LieAlgebraElement& e);

// True iff gamma_tilde vanishes for every g' in G and every basis E.
bool gamma_identically_zero(const FiniteSubgroup& g, const Character2D& chi);

struct GammaScanRow {
    std::string group;
    std::string character;
    bool identically_zero = false;
};

// Scan over the exceptional groups and the binary dihedral family.
std::vector<GammaScanRow> gamma_scan(long bdn_max, long jobs = 1);

// Display form of one normalized codeword coefficient.
struct CoefficientForm {
    long weight = 0;
    int sign = 1;
    bool exact = false;   // squared coefficient is an exact rational
    Rat square;           // sign^2 * coefficient^2, when exact
    double value = 0.0;   // numeric normalized coefficient
    HighFloat value_hp;
};

// Normalized coefficients of ket0 (which = 0) or ket1 (which = 1),
// restricted to nonzero weights.
std::vector<CoefficientForm> normalized_coefficients(const SpinCode& code, int which);

} // namespace exotic
