#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "nwe/rational.hpp"

namespace nwe {

using RVector = std::vector<Rational>;

/// Dense rational matrix, row-major. Dimensions are fixed at construction
/// and must both be positive.
class RMatrix {
public:
    RMatrix(std::size_t rows, std::size_t cols);
    RMatrix(std::initializer_list<std::initializer_list<long>> init);

    static RMatrix identity(std::size_t d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    RVector row(std::size_t r) const;

    bool is_symmetric() const;
    bool is_antisymmetric() const;

    friend bool operator==(const RMatrix& a, const RMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    RMatrix& operator+=(const RMatrix& o);
    RMatrix& operator-=(const RMatrix& o);
    RMatrix& operator*=(const Rational& s);
    friend RMatrix operator+(RMatrix a, const RMatrix& b) { return a += b; }
    friend RMatrix operator-(RMatrix a, const RMatrix& b) { return a -= b; }
    friend RMatrix operator*(const Rational& s, RMatrix m) { return m *= s; }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

struct RrefResult {
    RMatrix r;
    std::vector<std::size_t> pivots;
    std::size_t rank;
};

/// Reduced row echelon form over the rationals (unique; row space preserved).
RrefResult rref(const RMatrix& a);

/// Basis of { x : A x = 0 }; size = cols - rank. Every vector satisfies
/// A x = 0 exactly. Basis vectors are ordered by free column.
std::vector<RVector> nullspace(const RMatrix& a);

/// Dimension of the span of the given vectors. rank({}) = 0.
/// Throws if the vectors do not share one dimension.
std::size_t rank_of(const std::vector<RVector>& vectors);

/// Exact positive-semidefiniteness test for a symmetric matrix, via
/// symmetric elimination with diagonal pivoting: PSD iff no pivot is
/// negative and every zero pivot has an all-zero residual row.
bool is_psd(const RMatrix& s);

/// Rational interval [lo, hi] containing every eigenvalue of the symmetric
/// matrix s: lo = min_i (s_ii - r_i), hi = max_i (s_ii + r_i) with r_i the
/// off-diagonal absolute row sum.
std::pair<Rational, Rational> gershgorin_bounds(const RMatrix& s);

// Row-list variants used where constraint systems may be empty.
std::vector<RVector> nullspace_of_rows(const std::vector<RVector>& rows, std::size_t ncols);
std::size_t rank_of_rows(const std::vector<RVector>& rows);

Rational dot(const RVector& a, const RVector& b);

/// Scales a nonzero rational vector to its unique primitive integer
/// multiple with positive leading nonzero coefficient.
RVector primitive(const RVector& v);

/// Kronecker product, used for joint-space projector sums.
RMatrix kron(const RMatrix& a, const RMatrix& b);

/// p * v v^T / (v.v) accumulation helper: outer product of v with itself.
RMatrix outer(const RVector& v);

}  // namespace nwe
