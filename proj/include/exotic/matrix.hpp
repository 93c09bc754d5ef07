#pragma once

#include <vector>

#include "exotic/cyclo.hpp"

namespace exotic {

using CycloVec = std::vector<Cyclo>;

// Dense matrix over one cyclotomic field.  All arithmetic is exact.
class CycloMat {
public:
    CycloMat() : field_(&CycloField::get(1)), rows_(0), cols_(0) {}
    CycloMat(const CycloField& f, long rows, long cols)
        : field_(&f), rows_(rows), cols_(cols), a_(rows * cols, Cyclo::zero(f)) {}

    static CycloMat identity(const CycloField& f, long n);

    const CycloField& field() const { return *field_; }
    long rows() const { return rows_; }
    long cols() const { return cols_; }

    Cyclo& at(long r, long c) { return a_[r * cols_ + c]; }
    const Cyclo& at(long r, long c) const { return a_[r * cols_ + c]; }

    CycloMat operator*(const CycloMat& o) const;
    CycloMat operator+(const CycloMat& o) const;
    CycloMat operator-(const CycloMat& o) const;
    CycloMat scaled(const Cyclo& s) const;
    CycloMat conj_transpose() const;
    CycloVec apply(const CycloVec& v) const;

    bool operator==(const CycloMat& o) const;
    bool operator!=(const CycloMat& o) const { return !(*this == o); }
    bool is_zero() const;
    Cyclo trace() const;
    CycloMat promote(const CycloField& target) const;

    // Lexicographic entrywise order (for deterministic element orderings).
    int compare(const CycloMat& o) const;

private:
    const CycloField* field_;
    long rows_, cols_;
    std::vector<Cyclo> a_;
};

// In-place reduction to reduced row echelon form (Gauss-Jordan with exact
// field inverses, rows rescaled to integer content between steps to curb
// coefficient growth).  Returns the pivot column indices.
std::vector<long> rref(CycloMat& m);

// Canonical basis of the null space {x : M x = 0}: the reduced-echelon
// kernel basis, one vector per free column.
std::vector<CycloVec> kernel_basis(const CycloMat& m);

} // namespace exotic
