#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nwe/states.hpp"

namespace nwe {

enum class ExtStatus { extendible, upb, budget_exceeded };

struct ExtendibilityResult {
    ExtStatus status;
    std::optional<ProductState> witness;  // extendible only; verifies exactly
    std::uint64_t explored = 0;           // partition nodes expanded
    std::uint64_t budget = 0;
};

inline constexpr std::uint64_t kDefaultExtendBudget = 1ULL << 20;

/// Decides whether a product state orthogonal to every member exists.
/// Such a state exists iff some side-assignment S of the members has
/// rank{a_i : i in S} < m and rank{b_j : j not in S} < n; the search
/// branches on each member's assignment with incremental rank pruning.
/// Exhaustion without success is a UPB verdict; running past the node
/// budget returns BUDGET_EXCEEDED (never silently conflated with UPB).
/// The traversal is sequential and deterministic.
ExtendibilityResult find_product_extension(const StateSet& set,
                                           std::uint64_t budget = kDefaultExtendBudget);

/// True iff the candidate is product-orthogonal to every member.
bool verify_extension(const StateSet& set, const ProductState& cand);

/// True iff the set is a full orthogonal product basis of its m*n joint
/// space: m*n pairwise-orthogonal members whose normalized projectors sum
/// exactly to the identity.
bool check_completion_basis(const StateSet& set);

/// Outcome distribution of the projective separable measurement built from
/// a complete basis, on the given prepared member: p(i) =
/// <phi_i|phi_prep>^2 / (<phi_i|phi_i><phi_prep|phi_prep>). Requires
/// check_completion_basis(set) and a valid index.
std::vector<Rational> separable_discriminate(const StateSet& basis, std::size_t prepared);

}  // namespace nwe
