#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nwe/linalg.hpp"
#include "nwe/rational.hpp"

namespace nwe {

/// Unnormalized state vector over a fixed computational basis.
/// Invariant: at least one nonzero coefficient.
struct Ket {
    RVector coeffs;

    std::size_t dim() const { return coeffs.size(); }
    friend bool operator==(const Ket& a, const Ket& b) { return a.coeffs == b.coeffs; }
};

/// Builds the unnormalized ket sum c_k |k> from (basis index, coefficient)
/// terms. Indices must lie in [0, dim); the result must be nonzero.
Ket ket_lin(std::size_t dim, const std::vector<std::pair<std::size_t, long>>& terms);

/// Basis ket |k>.
Ket ket_basis(std::size_t dim, std::size_t k);

/// |e> + sign * |f| shorthand, e != f.
Ket ket_pm(std::size_t dim, std::size_t e, std::size_t f, int sign);

/// |0> + |1> + ... + |dim-1>.
Ket ket_uniform(std::size_t dim);

/// Exact inner product (all coefficients are real rationals).
Rational inner(const Ket& x, const Ket& y);

struct ProductState {
    std::string label;
    Ket a;  // Alice side, dim m
    Ket b;  // Bob side, dim n

    friend bool operator==(const ProductState& x, const ProductState& y) {
        return x.label == y.label && x.a == y.a && x.b == y.b;
    }
};

struct StateSet {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<ProductState> states;
    std::optional<std::string> family;

    std::size_t size() const { return states.size(); }
    friend bool operator==(const StateSet& x, const StateSet& y) {
        return x.m == y.m && x.n == y.n && x.states == y.states && x.family == y.family;
    }
};

/// One global-orthogonality violation: states i < j with
/// <a_i|a_j><b_i|b_j> != 0.
struct Violation {
    std::size_t i, j;
    Rational a_inner, b_inner;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks every unordered pair for product orthogonality. Violations are
/// data, not errors.
ValidationReport validate(const StateSet& set);

/// Canonical JSON (sorted keys, rational strings, newline-terminated).
/// Identical sets serialize byte-identically.
std::string save_json(const StateSet& set);

/// Parses the save_json schema. Throws std::runtime_error on malformed
/// documents or on kets whose length disagrees with the declared m, n.
StateSet load_json(const std::string& text);

}  // namespace nwe
