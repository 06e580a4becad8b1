#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nwe/states.hpp"

namespace nwe {

enum class Family { eq1, eq2, eq3 };

/// Parameter decomposition shared by the families: n = a(m-1) + b + 1 with
/// a >= 1 and 0 <= b < m-1 (for eq1, m is fixed to 3). The pair (a, b) is
/// uniquely determined by (m, n).
struct FamilyParams {
    Family family;
    std::size_t m, n, a, b;
};

/// Validates the family's (m, n) bounds and computes (a, b).
/// Throws std::invalid_argument when out of range.
FamilyParams family_params(Family family, std::size_t m, std::size_t n);

/// 3 (x) n family, n > 3: exactly 3n-2 pairwise product-orthogonal states.
StateSet gen_eq1(std::size_t n);

/// m (x) n family, 4 <= m <= n: exactly 3n+m-4 states.
StateSet gen_eq2(std::size_t m, std::size_t n);

/// m (x) n family, 3 <= m <= n: exactly 2n-1 states.
StateSet gen_eq3(std::size_t m, std::size_t n);

/// The classic nine-state 3 (x) 3 set (grid of domino pairs around |0>|0>).
StateSet gen_bennett9();

/// Basis-product states completing gen_eq2(m, m) to a full orthogonal
/// product basis of m*m states; exactly m^2-4m+4 of them. Requires m >= 4.
std::vector<ProductState> completion_states(std::size_t m);

/// A product state orthogonal to every member of the given family set, or
/// nullopt when the family is unextendible (eq3 at m = n = 3). Requires a
/// family tag of eq1, eq2 or eq3.
std::optional<ProductState> extension_witness(const StateSet& set);

/// Hard-coded regression fixtures, independent of the generators.
StateSet eq4_fixture();      // the 3 (x) 5 nine-state instance of eq3
StateSet eq3_3x3_fixture();  // the five-state 3 (x) 3 instance of eq3

}  // namespace nwe
