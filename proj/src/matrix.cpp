#include "exotic/matrix.hpp"

namespace exotic {

CycloMat CycloMat::identity(const CycloField& f, long n) {
    CycloMat m(f, n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = Cyclo::from_rational(f, 1);
    return m;
}

CycloMat CycloMat::operator*(const CycloMat& o) const {
    if (cols_ != o.rows_ || field_->conductor() != o.field_->conductor())
        throw Error("matrix product shape/field mismatch");
    CycloMat r(*field_, rows_, o.cols_);
    CycloAccum acc(*field_);
    for (long i = 0; i < rows_; ++i) {
        for (long j = 0; j < o.cols_; ++j) {
            for (long k = 0; k < cols_; ++k) {
                const Cyclo& x = at(i, k);
                if (x.is_zero()) continue;
                const Cyclo& y = o.at(k, j);
                if (y.is_zero()) continue;
                acc.add_product(x, y);
            }
            r.at(i, j) = acc.take();
        }
    }
    return r;
}

CycloMat CycloMat::operator+(const CycloMat& o) const {
    CycloMat r = *this;
    for (long i = 0; i < rows_ * cols_; ++i) r.a_[i] += o.a_[i];
    return r;
}

CycloMat CycloMat::operator-(const CycloMat& o) const {
    CycloMat r = *this;
    for (long i = 0; i < rows_ * cols_; ++i) r.a_[i] -= o.a_[i];
    return r;
}

CycloMat CycloMat::scaled(const Cyclo& s) const {
    CycloMat r = *this;
    for (Cyclo& x : r.a_)
        if (!x.is_zero()) x = x * s;
    return r;
}

CycloMat CycloMat::conj_transpose() const {
    CycloMat r(*field_, cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
    return r;
}

CycloVec CycloMat::apply(const CycloVec& v) const {
    if (static_cast<long>(v.size()) != cols_) throw Error("matrix-vector shape mismatch");
    CycloVec r(rows_, Cyclo::zero(*field_));
    CycloAccum acc(*field_);
    for (long i = 0; i < rows_; ++i) {
        for (long k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero() || v[k].is_zero()) continue;
            acc.add_product(at(i, k), v[k]);
        }
        r[i] = acc.take();
    }
    return r;
}

bool CycloMat::operator==(const CycloMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (long i = 0; i < rows_ * cols_; ++i)
        if (!(a_[i] == o.a_[i])) return false;
    return true;
}

bool CycloMat::is_zero() const {
    for (const Cyclo& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Cyclo CycloMat::trace() const {
    Cyclo t = Cyclo::zero(*field_);
    for (long i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
}

CycloMat CycloMat::promote(const CycloField& target) const {
    CycloMat r(target, rows_, cols_);
    for (long i = 0; i < rows_ * cols_; ++i) r.a_[i] = a_[i].promote(target);
    return r;
}

int CycloMat::compare(const CycloMat& o) const {
    for (long i = 0; i < rows_ * cols_; ++i) {
        int c = a_[i].compare(o.a_[i]);
        if (c != 0) return c;
    }
    return 0;
}

namespace {

// Rescale a row to primitive integer coordinates (fraction-free step).
void normalize_row(std::vector<Cyclo>& row, const CycloField& f) {
    Int lcm_den(1), gcd_num(0);
    for (const Cyclo& x : row) {
        for (const Rat& q : x.coeffs()) {
            if (q == 0) continue;
            Int den = q.get_den();
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
        }
    }
    for (const Cyclo& x : row) {
        for (const Rat& q : x.coeffs()) {
            if (q == 0) continue;
            Int n = q.get_num() * (lcm_den / q.get_den());
            mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), n.get_mpz_t());
        }
    }
    if (gcd_num == 0) return;
    Rat scale(lcm_den, gcd_num);
    scale.canonicalize();
    if (scale == 1) return;
    Cyclo s = Cyclo::from_rational(f, scale);
    for (Cyclo& x : row)
        if (!x.is_zero()) x = x * s;
}

} // namespace

std::vector<long> rref(CycloMat& m) {
    const CycloField& f = m.field();
    long rows = m.rows(), cols = m.cols();
    std::vector<long> pivots;
    long rank = 0;
    for (long col = 0; col < cols && rank < rows; ++col) {
        long pivot_row = -1;
        for (long r = rank; r < rows; ++r) {
            if (!m.at(r, col).is_zero()) {
                pivot_row = r;
                break;
            }
        }
        if (pivot_row < 0) continue;
        if (pivot_row != rank)
            for (long c = 0; c < cols; ++c) std::swap(m.at(rank, c), m.at(pivot_row, c));
        Cyclo inv = m.at(rank, col).inv();
        for (long c = col; c < cols; ++c)
            if (!m.at(rank, c).is_zero()) m.at(rank, c) = m.at(rank, c) * inv;
        for (long r = 0; r < rows; ++r) {
            if (r == rank || m.at(r, col).is_zero()) continue;
            Cyclo factor = m.at(r, col);
            for (long c = col; c < cols; ++c) {
                if (m.at(rank, c).is_zero()) continue;
                m.at(r, c) -= factor * m.at(rank, c);
            }
        }
        pivots.push_back(col);
        ++rank;
    }
    return pivots;
}

std::vector<CycloVec> kernel_basis(const CycloMat& m) {
    const CycloField& f = m.field();
    CycloMat work = m;
    // fraction clearing keeps the elimination coefficients tame
    {
        std::vector<Cyclo> row(work.cols(), Cyclo::zero(f));
        for (long r = 0; r < work.rows(); ++r) {
            for (long c = 0; c < work.cols(); ++c) row[c] = work.at(r, c);
            normalize_row(row, f);
            for (long c = 0; c < work.cols(); ++c) work.at(r, c) = row[c];
        }
    }
    std::vector<long> pivots = rref(work);
    std::vector<bool> is_pivot(work.cols(), false);
    for (long p : pivots) is_pivot[p] = true;

    std::vector<CycloVec> basis;
    for (long free_col = 0; free_col < work.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        CycloVec v(work.cols(), Cyclo::zero(f));
        v[free_col] = Cyclo::from_rational(f, 1);
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -work.at(static_cast<long>(i), free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace exotic
