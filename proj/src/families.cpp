#include "nwe/families.hpp"

#include <stdexcept>

namespace nwe {

namespace {

std::string phi(std::size_t k) { return "phi_" + std::to_string(k); }

// B-side column label j(i): cyclic successor on {1, ..., m-1}.
std::size_t cyc(std::size_t i, std::size_t m) { return i == m - 1 ? 1 : i + 1; }

void push(StateSet& set, std::size_t& k, Ket a, Ket b) {
    set.states.push_back(ProductState{phi(k++), std::move(a), std::move(b)});
}

}  // namespace

FamilyParams family_params(Family family, std::size_t m, std::size_t n) {
    switch (family) {
        case Family::eq1:
            if (m != 3) throw std::invalid_argument("eq1: m must be 3");
            if (n <= 3) throw std::invalid_argument("eq1: requires n > 3");
            break;
        case Family::eq2:
            if (m < 4 || m > n) throw std::invalid_argument("eq2: requires 4 <= m <= n");
            break;
        case Family::eq3:
            if (m < 3 || m > n) throw std::invalid_argument("eq3: requires 3 <= m <= n");
            break;
    }
    const std::size_t b = (n - 1) % (m - 1);
    const std::size_t a = (n - 1 - b) / (m - 1);
    return FamilyParams{family, m, n, a, b};
}

StateSet gen_eq1(std::size_t n) {
    const auto p = family_params(Family::eq1, 3, n);
    const std::size_t m = 3, a = p.a, b = p.b;
    StateSet set;
    set.m = m;
    set.n = n;
    set.family = "eq1";
    std::size_t k = 1;

    for (std::size_t i = 1; i <= 2; ++i)  // |i>|0-i>
        push(set, k, ket_basis(m, i), ket_pm(n, 0, i, -1));
    push(set, k, ket_pm(m, 0, 1, -1), ket_basis(n, 2));  // |0-1>|2>
    push(set, k, ket_pm(m, 0, 2, -1), ket_basis(n, 1));  // |0-2>|1>
    for (std::size_t i = 1; i <= 2; ++i)  // |i>|0+i>
        push(set, k, ket_basis(m, i), ket_pm(n, 0, i, +1));
    push(set, k, ket_pm(m, 0, 2, +1), ket_basis(n, 1));  // |0+2>|1>
    for (std::size_t j = 3; j <= n - 1; ++j)  // |0-1>|j>
        push(set, k, ket_pm(m, 0, 1, -1), ket_basis(n, j));

    // Ladder blocks |j>_A |(r+i) -+ (n-r)>_B: rows r = 1..a-1 carry i = 1, 2;
    // the terminal row r = a carries i = 1..b. The A side is |0+1> for i = 1
    // and |2> for i = 2.
    for (int sign : {-1, +1}) {
        for (std::size_t r = 1; r <= a; ++r) {
            const std::size_t imax = (r < a) ? 2 : b;
            for (std::size_t i = 1; i <= imax; ++i) {
                Ket av = (i == 1) ? ket_pm(m, 0, 1, +1) : ket_basis(m, 2);
                push(set, k, std::move(av), ket_pm(n, r + i, n - r, sign));
            }
        }
    }
    return set;
}

StateSet gen_eq2(std::size_t m, std::size_t n) {
    const auto p = family_params(Family::eq2, m, n);
    const std::size_t a = p.a, b = p.b;
    StateSet set;
    set.m = m;
    set.n = n;
    set.family = "eq2";
    std::size_t k = 1;

    for (std::size_t i = 1; i <= m - 1; ++i)  // |i>|0-i>
        push(set, k, ket_basis(m, i), ket_pm(n, 0, i, -1));
    for (std::size_t i = 1; i <= m - 1; ++i)  // |0-i>|j(i)>
        push(set, k, ket_pm(m, 0, i, -1), ket_basis(n, cyc(i, m)));
    for (std::size_t i = 1; i <= m - 1; ++i)  // |i>|0+i>
        push(set, k, ket_basis(m, i), ket_pm(n, 0, i, +1));
    for (std::size_t i = 1; i <= m - 1; ++i)  // |0+i>|j(i)>
        push(set, k, ket_pm(m, 0, i, +1), ket_basis(n, cyc(i, m)));
    for (std::size_t j = m; j <= n - 1; ++j)  // |0>|j>
        push(set, k, ket_basis(m, 0), ket_basis(n, j));

    // Ladder blocks |i>_A |[r(m-2)+i] -+ (n-r)>_B with full rows r = 1..a-1
    // and the terminal row r = a carrying i = 1..b.
    for (int sign : {-1, +1}) {
        for (std::size_t r = 1; r <= a; ++r) {
            const std::size_t imax = (r < a) ? m - 1 : b;
            for (std::size_t i = 1; i <= imax; ++i)
                push(set, k, ket_basis(m, i), ket_pm(n, r * (m - 2) + i, n - r, sign));
        }
    }
    return set;
}

StateSet gen_eq3(std::size_t m, std::size_t n) {
    const auto p = family_params(Family::eq3, m, n);
    const std::size_t a = p.a, b = p.b;
    StateSet set;
    set.m = m;
    set.n = n;
    set.family = "eq3";
    std::size_t k = 1;

    for (std::size_t i = 1; i <= m - 1; ++i)  // |i>|0-i>
        push(set, k, ket_basis(m, i), ket_pm(n, 0, i, -1));
    for (std::size_t i = 1; i <= m - 1; ++i)  // |0-i>|j(i)>
        push(set, k, ket_pm(m, 0, i, -1), ket_basis(n, cyc(i, m)));
    for (std::size_t j = m; j <= n - 1; ++j)  // |0-1>|j>
        push(set, k, ket_pm(m, 0, 1, -1), ket_basis(n, j));

    // Ladder of minus-type states. Row r = 1 is irregular: the i = 1 slot is
    // |0+1>|2-(n-1)> (only when m < n) and the i >= 2 slots clip to i <= n-m
    // so that the B-side pair stays inside 0..n-1. Rows r = 2..a-1 are full;
    // the terminal row r = a carries i = 1..b and needs a >= 2.
    if (m < n)
        push(set, k, ket_pm(m, 0, 1, +1), ket_pm(n, 2, n - 1, -1));
    for (std::size_t i = 2; i + m <= n && i <= m - 1; ++i)
        push(set, k, ket_basis(m, i), ket_pm(n, m - 2 + i, n - 1, -1));
    for (std::size_t r = 2; r <= a; ++r) {
        const std::size_t imax = (r < a) ? m - 1 : b;
        for (std::size_t i = 1; i <= imax; ++i) {
            Ket av = (i == 1) ? ket_pm(m, 0, 1, +1) : ket_basis(m, i);
            push(set, k, std::move(av), ket_pm(n, r * (m - 2) + i, n - r, -1));
        }
    }

    push(set, k, ket_uniform(m), ket_uniform(n));  // |0+...+(m-1)>|0+...+(n-1)>
    return set;
}

StateSet gen_bennett9() {
    StateSet set;
    set.m = 3;
    set.n = 3;
    set.family = "bennett9";
    std::size_t k = 1;
    push(set, k, ket_basis(3, 1), ket_pm(3, 0, 1, -1));
    push(set, k, ket_basis(3, 2), ket_pm(3, 0, 2, -1));
    push(set, k, ket_pm(3, 0, 1, -1), ket_basis(3, 2));
    push(set, k, ket_pm(3, 0, 2, -1), ket_basis(3, 1));
    push(set, k, ket_basis(3, 1), ket_pm(3, 0, 1, +1));
    push(set, k, ket_basis(3, 2), ket_pm(3, 0, 2, +1));
    push(set, k, ket_pm(3, 0, 2, +1), ket_basis(3, 1));
    push(set, k, ket_pm(3, 0, 1, +1), ket_basis(3, 2));
    push(set, k, ket_basis(3, 0), ket_basis(3, 0));
    return set;
}

std::vector<ProductState> completion_states(std::size_t m) {
    if (m < 4) throw std::invalid_argument("completion_states: requires m >= 4");
    std::vector<ProductState> out;
    auto label = [](std::size_t i, std::size_t j) {
        return "phi_" + std::to_string(i) + "_" + std::to_string(j);
    };
    out.push_back(ProductState{label(0, 0), ket_basis(m, 0), ket_basis(m, 0)});
    for (std::size_t i = 1; i <= m - 2; ++i)
        for (std::size_t j = 1; j <= m - 1; ++j) {
            if (j == i || j == i + 1) continue;
            out.push_back(ProductState{label(i, j), ket_basis(m, i), ket_basis(m, j)});
        }
    for (std::size_t j = 2; j <= m - 2; ++j)
        out.push_back(ProductState{label(m - 1, j), ket_basis(m, m - 1), ket_basis(m, j)});
    return out;
}

namespace {

bool orthogonal_to_all(const StateSet& set, const ProductState& cand) {
    for (const auto& s : set.states)
        if (!inner(cand.a, s.a).is_zero() && !inner(cand.b, s.b).is_zero()) return false;
    return true;
}

// For eq3 with m < n: anchor the A side at |2> and solve exactly for a
// B-side vector orthogonal to every member whose A overlap with |2> is
// nonzero. The families in range always leave at least one free direction.
std::optional<ProductState> eq3_narrow_witness(const StateSet& set) {
    const Ket anchor = ket_basis(set.m, 2);
    std::vector<RVector> rows;
    for (const auto& s : set.states)
        if (!inner(anchor, s.a).is_zero()) rows.push_back(s.b.coeffs);
    const auto basis = nullspace_of_rows(rows, set.n);
    if (basis.empty()) return std::nullopt;
    ProductState w{phi(set.size() + 1), anchor, Ket{primitive(basis.front())}};
    if (!orthogonal_to_all(set, w))
        throw std::logic_error("extension_witness: solved witness failed verification");
    return w;
}

}  // namespace

std::optional<ProductState> extension_witness(const StateSet& set) {
    if (!set.family || (*set.family != "eq1" && *set.family != "eq2" && *set.family != "eq3"))
        throw std::invalid_argument("extension_witness: unknown family tag");
    if (*set.family == "eq1" || *set.family == "eq2")
        return ProductState{phi(set.size() + 1), ket_basis(set.m, 0), ket_basis(set.n, 0)};

    // eq3
    if (set.m == set.n) {
        if (set.m == 3) return std::nullopt;  // unextendible; confirmed by search
        // (|0+1> - 2|3>)_A |2>_B. The combination sits on the A side: the
        // transposed form fails against |2>_A |0-2>_B.
        return ProductState{phi(set.size() + 1),
                            ket_lin(set.m, {{0, 1}, {1, 1}, {3, -2}}),
                            ket_basis(set.n, 2)};
    }
    return eq3_narrow_witness(set);
}

StateSet eq4_fixture() {
    StateSet set;
    set.m = 3;
    set.n = 5;
    set.family = "eq3";
    std::size_t k = 1;
    push(set, k, ket_basis(3, 1), ket_pm(5, 0, 1, -1));
    push(set, k, ket_basis(3, 2), ket_pm(5, 0, 2, -1));
    push(set, k, ket_pm(3, 0, 1, -1), ket_basis(5, 2));
    push(set, k, ket_pm(3, 0, 2, -1), ket_basis(5, 1));
    push(set, k, ket_pm(3, 0, 1, -1), ket_basis(5, 3));
    push(set, k, ket_pm(3, 0, 1, -1), ket_basis(5, 4));
    push(set, k, ket_pm(3, 0, 1, +1), ket_pm(5, 2, 4, -1));
    push(set, k, ket_basis(3, 2), ket_pm(5, 3, 4, -1));
    push(set, k, ket_uniform(3), ket_uniform(5));
    return set;
}

StateSet eq3_3x3_fixture() {
    StateSet set;
    set.m = 3;
    set.n = 3;
    set.family = "eq3";
    std::size_t k = 1;
    push(set, k, ket_basis(3, 1), ket_pm(3, 0, 1, -1));
    push(set, k, ket_basis(3, 2), ket_pm(3, 0, 2, -1));
    push(set, k, ket_pm(3, 0, 1, -1), ket_basis(3, 2));
    push(set, k, ket_pm(3, 0, 2, -1), ket_basis(3, 1));
    push(set, k, ket_uniform(3), ket_uniform(3));
    return set;
}

}  // namespace nwe
