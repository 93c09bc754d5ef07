#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "exotic/gates.hpp"
#include "exotic/matrix.hpp"

namespace exotic {

// An exact element of SU(2): unitary with determinant exactly 1.
class GroupElement {
public:
    GroupElement() = default;
    explicit GroupElement(CycloMat m);  // validates SU(2) membership

    const CycloMat& matrix() const { return mat_; }
    const CycloField& field() const { return mat_.field(); }
    const Cyclo& entry(long r, long c) const { return mat_.at(r, c); }

    GroupElement operator*(const GroupElement& o) const;
    GroupElement inverse() const;  // adjugate, no field inversion needed
    GroupElement operator-() const;
    Cyclo trace() const { return mat_.trace(); }
    bool is_identity() const;

    GroupElement promote(const CycloField& f) const { return GroupElement(mat_.promote(f)); }

    bool operator==(const GroupElement& o) const { return mat_ == o.mat_; }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
    int compare(const GroupElement& o) const { return mat_.compare(o.mat_); }

private:
    CycloMat mat_;
};

// sqrt5 -> -sqrt5 Galois twist entrywise, then complex conjugation.
GroupElement star_conjugate(const GroupElement& g);

struct ConjugacyClass {
    long representative = 0;       // index of the first element in group order
    std::vector<long> members;     // element indices, ascending
    long element_order = 0;        // common order of the members
};

/*
 * A finite subgroup of SU(2), enumerated by breadth-first closure from its
 * generators.  Element ordering is deterministic: identity first, then BFS
 * levels, ties broken by lexicographic coefficient order.  Immutable after
 * generation.
 */
class FiniteSubgroup {
public:
    static FiniteSubgroup generate(const std::vector<GroupElement>& generators,
                                   long max_order = 10000, std::string name = "custom");

    const std::string& name() const { return name_; }
    long order() const { return static_cast<long>(elements_.size()); }
    const std::vector<GroupElement>& elements() const { return elements_; }
    const GroupElement& element(long i) const { return elements_[i]; }
    const CycloField& field() const { return *field_; }
    const std::vector<GroupElement>& generators() const { return generators_; }

    // BFS provenance: element i equals element(parent) * generator(gen),
    // with parent < i.  Identity has parent -1.
    std::pair<long, long> bfs_parent(long i) const { return bfs_parent_[i]; }

    std::optional<long> index_of(const GroupElement& g) const;
    bool contains(const GroupElement& g) const { return index_of(g).has_value(); }
    long mul_index(long i, long j) const;
    long inverse_index(long i) const;
    long identity_index() const { return 0; }

    const std::vector<ConjugacyClass>& conjugacy_classes() const;
    long class_of(long element_index) const;

    bool is_subgroup_of(const FiniteSubgroup& g) const;

    // Left-coset representatives of the subgroup h in this group:
    // |G|/|H| of them, each the first element of its coset in group order.
    std::vector<long> coset_representatives(const FiniteSubgroup& h) const;

    // Indices of all elements lying in rep * H (the coset of a representative).
    std::vector<long> coset_members(long rep_index, const FiniteSubgroup& h) const;

private:
    std::string name_;
    const CycloField* field_ = nullptr;
    std::vector<GroupElement> elements_;
    std::vector<GroupElement> generators_;
    std::vector<std::pair<long, long>> bfs_parent_;
    std::map<std::string, long> index_;  // canonical key -> element index
    mutable std::vector<ConjugacyClass> classes_;
    mutable std::vector<long> class_of_;

    static std::string key_of(const GroupElement& g);
};

// Canonical realizations (conductor 40 unless stated otherwise).
FiniteSubgroup make_2T();        // <X, Z, F>, order 24
FiniteSubgroup make_2O();        // <X, Z, F, H, S>, order 48 (the Clifford group)
FiniteSubgroup make_2I();        // <X, Z, F, Phi>, order 120
FiniteSubgroup make_2I_star();   // <X, Z, F, Phi*>, order 120
FiniteSubgroup make_bd(long n);  // <X, Ph(2pi/n)>, order 4n, conductor lcm(4n, 8)
FiniteSubgroup make_group_by_name(const std::string& name);  // "2T","2O","2I","2I*","BD<n>"

enum class HierarchyClass { Clifford, Exotic, Indeterminate };

// Exact membership in the canonical 48-element special Clifford group.
bool clifford_membership(const GroupElement& g);

// "clifford" when g is one of the 48 Clifford elements; "exotic" when some
// entry lies outside every 2-power cyclotomic field (certified outside the
// whole Clifford hierarchy); "indeterminate" otherwise.
HierarchyClass classify_hierarchy(const GroupElement& g);

const char* hierarchy_class_name(HierarchyClass c);

} // namespace exotic
