#pragma once

#include <string>
#include <vector>

#include "exotic/group.hpp"

namespace exotic {

// A 2-dimensional character given by its exact values per conjugacy class
// (classes in the owning group's canonical order).
struct Character2D {
    const FiniteSubgroup* group = nullptr;
    std::vector<Cyclo> values;
    std::string label;
    bool faithful = false;

    const Cyclo& on_class(long cls) const { return values[cls]; }
    const Cyclo& on_element(long element_index) const {
        return values[group->class_of(element_index)];
    }
};

// <a,b> = (1/|G|) sum over classes |cls| a(c) conj(b(c)), exact.
Cyclo class_function_inner(const FiniteSubgroup& g, const std::vector<Cyclo>& a,
                           const std::vector<Cyclo>& b);

/*
 * All faithful 2-dimensional irreducible characters of a finite subgroup of
 * SU(2), generated as (defining character) x (1-dim characters of the
 * abelianization), closed under Galois twists of the values, then filtered
 * by chi(1) = 2, <chi,chi> = 1 and faithfulness.  For 2I the two results
 * carry the labels "pi2" (the defining character) and "pi2bar".
 */
std::vector<Character2D> faithful_2d_characters(const FiniteSubgroup& g);

// 1-dim characters of G (characters of the abelianization), one value per
// conjugacy class.
std::vector<std::vector<Cyclo>> one_dim_characters(const FiniteSubgroup& g);

// The full irreducible character table of the binary icosahedral group,
// rows labeled pi1, pi2, pi2bar, pi3, pi3bar, pi4, pi4p, pi5, pi6.
// Verified against the orthogonality relations at construction.
struct IrrepTable {
    const FiniteSubgroup* group = nullptr;
    std::vector<std::string> labels;
    std::vector<std::vector<Cyclo>> values;  // [irrep][class]
    std::vector<long> dims;
};

IrrepTable icosahedral_irrep_table(const FiniteSubgroup& two_i);

} // namespace exotic
