#include "nwe/extendibility.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "nwe/linalg.hpp"

namespace nwe {

namespace {

// Row set kept in reduced echelon form so rank queries and tentative
// insertions stay cheap during the search.
class EchelonRows {
public:
    explicit EchelonRows(std::size_t dim) : dim_(dim) {}

    std::size_t rank() const { return rows_.size(); }

    // Reduces v against the current rows; returns the residual (empty when
    // v is already in the span).
    RVector residual(RVector v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t lead = leading_[r];
            if (v[lead].is_zero()) continue;
            const Rational f = v[lead];
            for (std::size_t c = 0; c < dim_; ++c) v[c] -= f * rows_[r][c];
        }
        for (const auto& c : v)
            if (!c.is_zero()) return v;
        return {};
    }

    bool insert(const RVector& v) {
        RVector res = residual(v);
        if (res.empty()) return false;
        std::size_t lead = 0;
        while (res[lead].is_zero()) ++lead;
        const Rational inv = Rational(1) / res[lead];
        for (auto& c : res) c *= inv;
        rows_.push_back(std::move(res));
        leading_.push_back(lead);
        return true;
    }

    void pop() {
        rows_.pop_back();
        leading_.pop_back();
    }

    const std::vector<RVector>& rows() const { return rows_; }

private:
    std::size_t dim_;
    std::vector<RVector> rows_;
    std::vector<std::size_t> leading_;
};

Ket first_orthogonal(const std::vector<RVector>& rows, std::size_t dim) {
    const auto basis = nullspace_of_rows(rows, dim);
    if (basis.empty()) throw std::logic_error("extension search: empty nullspace at a leaf");
    return Ket{primitive(basis.front())};
}

struct Search {
    const StateSet& set;
    std::vector<std::size_t> order;  // states sorted by descending pair degree
    std::uint64_t budget;
    std::uint64_t explored = 0;
    bool out_of_budget = false;
    std::optional<ProductState> found;
    EchelonRows alice_kill, bob_kill;

    Search(const StateSet& s, std::uint64_t b)
        : set(s), budget(b), alice_kill(s.m), bob_kill(s.n) {
        // Pair degree: how many other members share a nonzero overlap with
        // this one on either side. High-degree states first prunes earlier.
        std::vector<std::size_t> degree(set.size(), 0);
        for (std::size_t i = 0; i < set.size(); ++i)
            for (std::size_t j = 0; j < set.size(); ++j) {
                if (i == j) continue;
                if (!inner(set.states[i].a, set.states[j].a).is_zero()) ++degree[i];
                if (!inner(set.states[i].b, set.states[j].b).is_zero()) ++degree[i];
            }
        order.resize(set.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t x, std::size_t y) { return degree[x] > degree[y]; });
    }

    // Depth-first over side assignments; returns true when a witness was
    // found (or the budget ran out) so the whole frontier unwinds.
    bool expand(std::size_t depth) {
        if (explored >= budget) {
            out_of_budget = true;
            return true;
        }
        ++explored;
        if (depth == order.size()) {
            ProductState w{"phi_" + std::to_string(set.size() + 1),
                           first_orthogonal(alice_kill.rows(), set.m),
                           first_orthogonal(bob_kill.rows(), set.n)};
            found = std::move(w);
            return true;
        }
        const auto& st = set.states[order[depth]];
        // Assign to the Alice kill set (the witness's A side must annihilate
        // it); prune the branch when the kill set reaches full rank.
        bool grew = alice_kill.insert(st.a.coeffs);
        if (alice_kill.rank() < set.m) {
            if (expand(depth + 1)) return true;
        }
        if (grew) alice_kill.pop();
        // Assign to the Bob kill set.
        grew = bob_kill.insert(st.b.coeffs);
        if (bob_kill.rank() < set.n) {
            if (expand(depth + 1)) return true;
        }
        if (grew) bob_kill.pop();
        return false;
    }
};

}  // namespace

ExtendibilityResult find_product_extension(const StateSet& set, std::uint64_t budget) {
    if (!validate(set).ok())
        throw std::invalid_argument("find_product_extension: set fails validation");
    Search search(set, budget);
    search.expand(0);
    ExtendibilityResult result;
    result.budget = budget;
    result.explored = search.explored;
    if (search.found) {
        result.status = ExtStatus::extendible;
        result.witness = std::move(search.found);
        if (!verify_extension(set, *result.witness))
            throw std::logic_error("find_product_extension: witness failed verification");
    } else if (search.out_of_budget) {
        result.status = ExtStatus::budget_exceeded;
    } else {
        result.status = ExtStatus::upb;
    }
    return result;
}

bool verify_extension(const StateSet& set, const ProductState& cand) {
    if (cand.a.dim() != set.m || cand.b.dim() != set.n)
        throw std::invalid_argument("verify_extension: dimension mismatch");
    for (const auto& s : set.states)
        if (!inner(cand.a, s.a).is_zero() && !inner(cand.b, s.b).is_zero()) return false;
    return true;
}

bool check_completion_basis(const StateSet& set) {
    if (set.size() != set.m * set.n) return false;
    if (!validate(set).ok()) return false;
    const std::size_t dim = set.m * set.n;
    RMatrix sum(dim, dim);
    for (const auto& s : set.states) {
        const Rational norm = inner(s.a, s.a) * inner(s.b, s.b);
        RMatrix proj = kron(outer(s.a.coeffs), outer(s.b.coeffs));
        proj *= Rational(1) / norm;
        sum += proj;
    }
    return sum == RMatrix::identity(dim);
}

std::vector<Rational> separable_discriminate(const StateSet& basis, std::size_t prepared) {
    if (!check_completion_basis(basis))
        throw std::invalid_argument("separable_discriminate: not a complete product basis");
    if (prepared >= basis.size())
        throw std::out_of_range("separable_discriminate: prepared index out of range");
    const auto& prep = basis.states[prepared];
    const Rational prep_norm = inner(prep.a, prep.a) * inner(prep.b, prep.b);
    std::vector<Rational> dist;
    dist.reserve(basis.size());
    for (const auto& s : basis.states) {
        const Rational overlap = inner(s.a, prep.a) * inner(s.b, prep.b);
        const Rational norm = inner(s.a, s.a) * inner(s.b, s.b);
        dist.push_back(overlap * overlap / (norm * prep_norm));
    }
    return dist;
}

}  // namespace nwe
