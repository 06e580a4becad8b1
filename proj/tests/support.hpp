#pragma once

// Shared test helpers: random valid sets, independent brute-force oracles
// for triviality and extendibility, and small exact determinants. The
// oracles deliberately avoid the library's constraint-system and search
// code paths.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "nwe/certifier.hpp"
#include "nwe/extendibility.hpp"
#include "nwe/linalg.hpp"
#include "nwe/states.hpp"

namespace nwe::test {

inline StateSet standard_basis(std::size_t m, std::size_t n) {
    StateSet set;
    set.m = m;
    set.n = n;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            set.states.push_back(ProductState{
                "e_" + std::to_string(i) + "_" + std::to_string(j),
                ket_basis(m, i), ket_basis(n, j)});
    return set;
}

inline Ket random_ket(std::mt19937_64& rng, std::size_t dim) {
    std::uniform_int_distribution<int> coeff(-1, 1);
    for (;;) {
        RVector v(dim, Rational(0));
        bool nonzero = false;
        for (auto& c : v) {
            const int x = coeff(rng);
            c = Rational(x);
            nonzero = nonzero || x != 0;
        }
        if (nonzero) return Ket{std::move(v)};
    }
}

// Random product-orthogonal set with m, n <= 3, N <= max_states and
// coefficients in {-1, 0, 1}; built by rejection so validate() always
// passes. Always returns at least two states.
inline StateSet random_valid_set(std::mt19937_64& rng, std::size_t max_states = 6) {
    std::uniform_int_distribution<std::size_t> dim(2, 3);
    for (;;) {
        StateSet set;
        set.m = dim(rng);
        set.n = dim(rng);
        std::uniform_int_distribution<std::size_t> want(2, max_states);
        const std::size_t target = want(rng);
        for (int attempts = 0; attempts < 300 && set.size() < target; ++attempts) {
            ProductState cand{"phi_" + std::to_string(set.size() + 1),
                              random_ket(rng, set.m), random_ket(rng, set.n)};
            bool ok = true;
            for (const auto& s : set.states)
                if (!inner(cand.a, s.a).is_zero() && !inner(cand.b, s.b).is_zero()) {
                    ok = false;
                    break;
                }
            if (ok) set.states.push_back(std::move(cand));
        }
        if (set.size() >= 2) return set;
    }
}

// Joint-parametrization triviality oracle: unknowns are the d^2 real
// parameters of a Hermitian matrix laid out as [diagonal..., Re upper...,
// Im upper...]; each constrained pair contributes a real row and an
// imaginary row, and one nullspace over the joint space decides the
// verdict.
struct JointVerdict {
    bool trivial;
    std::size_t nullity;
};

inline JointVerdict brute_force_triviality(const StateSet& set, Party party) {
    const std::size_t d = (party == Party::alice) ? set.m : set.n;
    const std::size_t n_diag = d;
    const std::size_t n_off = d * (d - 1) / 2;
    const std::size_t total = n_diag + 2 * n_off;
    auto off_pos = [&](std::size_t k, std::size_t l) {
        std::size_t idx = 0;
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = a + 1; b < d; ++b) {
                if (a == k && b == l) return idx;
                ++idx;
            }
        return idx;
    };

    std::vector<RVector> rows;
    for (std::size_t i = 0; i < set.states.size(); ++i)
        for (std::size_t j = i + 1; j < set.states.size(); ++j) {
            const Ket& xi = (party == Party::alice) ? set.states[i].a : set.states[i].b;
            const Ket& xj = (party == Party::alice) ? set.states[j].a : set.states[j].b;
            const Ket& yi = (party == Party::alice) ? set.states[i].b : set.states[i].a;
            const Ket& yj = (party == Party::alice) ? set.states[j].b : set.states[j].a;
            if (inner(yi, yj).is_zero()) continue;
            RVector real_row(total, Rational(0));
            RVector imag_row(total, Rational(0));
            for (std::size_t k = 0; k < d; ++k) {
                real_row[k] = xi.coeffs[k] * xj.coeffs[k];
                for (std::size_t l = k + 1; l < d; ++l) {
                    real_row[n_diag + off_pos(k, l)] =
                        xi.coeffs[k] * xj.coeffs[l] + xi.coeffs[l] * xj.coeffs[k];
                    imag_row[n_diag + n_off + off_pos(k, l)] =
                        xi.coeffs[k] * xj.coeffs[l] - xi.coeffs[l] * xj.coeffs[k];
                }
            }
            rows.push_back(std::move(real_row));
            rows.push_back(std::move(imag_row));
        }

    const auto basis = nullspace_of_rows(rows, total);
    bool trivial = basis.size() == 1;
    if (trivial) {
        const auto& v = basis.front();
        for (std::size_t k = 1; k < n_diag && trivial; ++k) trivial = v[k] == v[0];
        for (std::size_t k = n_diag; k < total && trivial; ++k) trivial = v[k].is_zero();
        trivial = trivial && !v[0].is_zero();
    }
    return JointVerdict{trivial, basis.size()};
}

// Exhaustive 2^N partition oracle for product extendibility.
inline bool naive_extendible(const StateSet& set) {
    const std::size_t n_states = set.size();
    for (std::uint64_t mask = 0; mask < (1ULL << n_states); ++mask) {
        std::vector<RVector> a_rows, b_rows;
        for (std::size_t i = 0; i < n_states; ++i) {
            if (mask & (1ULL << i))
                a_rows.push_back(set.states[i].a.coeffs);
            else
                b_rows.push_back(set.states[i].b.coeffs);
        }
        if (rank_of_rows(a_rows) < set.m && rank_of_rows(b_rows) < set.n) return true;
    }
    return false;
}

// Exact determinant by cofactor expansion (test-only, tiny matrices).
inline Rational det_cofactor(const std::vector<RVector>& m) {
    const std::size_t d = m.size();
    if (d == 1) return m[0][0];
    Rational acc;
    for (std::size_t j = 0; j < d; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<RVector> minor;
        for (std::size_t r = 1; r < d; ++r) {
            RVector row;
            for (std::size_t c = 0; c < d; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        const Rational term = m[0][j] * det_cofactor(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

// PSD oracle: every principal minor (over every index subset) nonnegative.
inline bool psd_by_principal_minors(const RMatrix& s) {
    const std::size_t d = s.rows();
    for (std::uint32_t mask = 1; mask < (1u << d); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < d; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        std::vector<RVector> sub;
        for (auto r : idx) {
            RVector row;
            for (auto c : idx) row.push_back(s.at(r, c));
            sub.push_back(std::move(row));
        }
        if (det_cofactor(sub).sign() < 0) return false;
    }
    return true;
}

// Hermitian R + iS is PSD iff the real symmetric embedding
// [[R, -S], [S, R]] is.
inline bool hermitian_psd(const RMatrix& re, const RMatrix& im) {
    const std::size_t d = re.rows();
    RMatrix embed(2 * d, 2 * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            embed.at(i, j) = re.at(i, j);
            embed.at(d + i, d + j) = re.at(i, j);
            embed.at(i, d + j) = -im.at(i, j);
            embed.at(d + i, j) = im.at(i, j);
        }
    return is_psd(embed);
}

// Order-insensitive equality of two sets' exact coefficient vectors.
inline bool same_states(const StateSet& x, const StateSet& y) {
    if (x.m != y.m || x.n != y.n || x.size() != y.size()) return false;
    auto key = [](const ProductState& s) {
        std::string k;
        for (const auto& c : s.a.coeffs) k += c.str() + ",";
        k += "|";
        for (const auto& c : s.b.coeffs) k += c.str() + ",";
        return k;
    };
    std::vector<std::string> kx, ky;
    for (const auto& s : x.states) kx.push_back(key(s));
    for (const auto& s : y.states) ky.push_back(key(s));
    std::sort(kx.begin(), kx.end());
    std::sort(ky.begin(), ky.end());
    return kx == ky;
}

}  // namespace nwe::test
