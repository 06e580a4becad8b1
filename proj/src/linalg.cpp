#include "nwe/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace nwe {

RMatrix::RMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("RMatrix: dimensions must be positive");
}

RMatrix::RMatrix(std::initializer_list<std::initializer_list<long>> init)
    : RMatrix(init.size(), init.size() ? init.begin()->size() : 0) {
    std::size_t r = 0;
    for (const auto& row : init) {
        if (row.size() != cols_)
            throw std::invalid_argument("RMatrix: ragged initializer");
        std::size_t c = 0;
        for (long v : row) at(r, c++) = Rational(v);
        ++r;
    }
}

RMatrix RMatrix::identity(std::size_t d) {
    RMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) m.at(i, i) = Rational(1);
    return m;
}

RVector RMatrix::row(std::size_t r) const {
    return RVector(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
}

bool RMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool RMatrix::is_antisymmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (!at(i, i).is_zero()) return false;
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != -at(j, i)) return false;
    }
    return true;
}

RMatrix& RMatrix::operator+=(const RMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("RMatrix: dimension mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

RMatrix& RMatrix::operator-=(const RMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("RMatrix: dimension mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

RMatrix& RMatrix::operator*=(const Rational& s) {
    for (auto& e : entries_) e *= s;
    return *this;
}

namespace {

// Gauss-Jordan on a row list; returns pivot columns. Rows are reduced in place.
std::vector<std::size_t> reduce_rows(std::vector<RVector>& rows, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < ncols && lead < rows.size(); ++col) {
        std::size_t sel = lead;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[lead]);
        const Rational inv = Rational(1) / rows[lead][col];
        for (auto& e : rows[lead]) e *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead || rows[r][col].is_zero()) continue;
            const Rational f = rows[r][col];
            for (std::size_t c = 0; c < ncols; ++c) rows[r][c] -= f * rows[lead][c];
        }
        pivots.push_back(col);
        ++lead;
    }
    return pivots;
}

std::vector<RVector> nullspace_from_reduced(const std::vector<RVector>& rows,
                                            const std::vector<std::size_t>& pivots,
                                            std::size_t ncols) {
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RVector> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        RVector x(ncols, Rational(0));
        x[free] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -rows[r][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace

RrefResult rref(const RMatrix& a) {
    std::vector<RVector> rows;
    rows.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(a.row(r));
    auto pivots = reduce_rows(rows, a.cols());
    RMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = rows[r][c];
    const std::size_t rank = pivots.size();
    return RrefResult{std::move(out), std::move(pivots), rank};
}

std::vector<RVector> nullspace(const RMatrix& a) {
    std::vector<RVector> rows;
    rows.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(a.row(r));
    auto pivots = reduce_rows(rows, a.cols());
    return nullspace_from_reduced(rows, pivots, a.cols());
}

std::vector<RVector> nullspace_of_rows(const std::vector<RVector>& rows, std::size_t ncols) {
    std::vector<RVector> work = rows;
    for (const auto& r : work)
        if (r.size() != ncols)
            throw std::invalid_argument("nullspace_of_rows: ragged rows");
    auto pivots = reduce_rows(work, ncols);
    return nullspace_from_reduced(work, pivots, ncols);
}

std::size_t rank_of_rows(const std::vector<RVector>& rows) {
    if (rows.empty()) return 0;
    std::vector<RVector> work = rows;
    return reduce_rows(work, rows.front().size()).size();
}

std::size_t rank_of(const std::vector<RVector>& vectors) {
    if (vectors.empty()) return 0;
    const std::size_t dim = vectors.front().size();
    for (const auto& v : vectors)
        if (v.size() != dim) throw std::invalid_argument("rank: dimension mismatch");
    return rank_of_rows(vectors);
}

bool is_psd(const RMatrix& s) {
    if (!s.is_symmetric()) throw std::invalid_argument("is_psd: matrix not symmetric");
    const std::size_t d = s.rows();
    RMatrix w = s;
    std::vector<bool> active(d, true);
    for (std::size_t step = 0; step < d; ++step) {
        // Prefer a strictly positive pivot; a negative diagonal is an
        // immediate reject, a zero diagonal requires a zero residual row.
        std::size_t pivot = d;
        for (std::size_t k = 0; k < d; ++k) {
            if (!active[k]) continue;
            if (w.at(k, k).sign() < 0) return false;
            if (pivot == d && w.at(k, k).sign() > 0) pivot = k;
        }
        if (pivot == d) {
            // All remaining diagonals are zero: PSD iff the residual block is zero.
            for (std::size_t i = 0; i < d; ++i) {
                if (!active[i]) continue;
                for (std::size_t j = 0; j < d; ++j)
                    if (active[j] && !w.at(i, j).is_zero()) return false;
            }
            return true;
        }
        const Rational p = w.at(pivot, pivot);
        active[pivot] = false;
        for (std::size_t i = 0; i < d; ++i) {
            if (!active[i]) continue;
            const Rational fi = w.at(i, pivot) / p;
            for (std::size_t j = 0; j < d; ++j) {
                if (!active[j]) continue;
                w.at(i, j) -= fi * w.at(pivot, j);
            }
        }
    }
    return true;
}

std::pair<Rational, Rational> gershgorin_bounds(const RMatrix& s) {
    if (!s.is_symmetric())
        throw std::invalid_argument("gershgorin_bounds: matrix not symmetric");
    const std::size_t d = s.rows();
    Rational lo, hi;
    for (std::size_t i = 0; i < d; ++i) {
        Rational radius;
        for (std::size_t j = 0; j < d; ++j)
            if (j != i) radius += s.at(i, j).abs();
        const Rational l = s.at(i, i) - radius;
        const Rational h = s.at(i, i) + radius;
        if (i == 0 || l < lo) lo = l;
        if (i == 0 || h > hi) hi = h;
    }
    return {lo, hi};
}

Rational dot(const RVector& a, const RVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rational acc;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

RVector primitive(const RVector& v) {
    mpz_class den_lcm = 1;
    for (const auto& c : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                                    c.raw().get_den().get_mpz_t());
    mpz_class num_gcd = 0;
    for (const auto& c : v) {
        mpz_class scaled = c.raw().get_num() * (den_lcm / c.raw().get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    if (num_gcd == 0) throw std::invalid_argument("primitive: zero vector");
    Rational scale = Rational::parse(den_lcm.get_str()) / Rational::parse(num_gcd.get_str());
    RVector out;
    out.reserve(v.size());
    for (const auto& c : v) out.push_back(c * scale);
    for (const auto& c : out) {
        if (c.is_zero()) continue;
        if (c.sign() < 0)
            for (auto& e : out) e = -e;
        break;
    }
    return out;
}

RMatrix kron(const RMatrix& a, const RMatrix& b) {
    RMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return out;
}

RMatrix outer(const RVector& v) {
    if (v.empty()) throw std::invalid_argument("outer: empty vector");
    RMatrix out(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out.at(i, j) = v[i] * v[j];
    return out;
}

}  // namespace nwe
