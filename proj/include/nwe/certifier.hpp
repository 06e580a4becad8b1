#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nwe/linalg.hpp"
#include "nwe/states.hpp"

namespace nwe {

enum class Party { alice, bob };

/// Index maps for the real parametrization of a Hermitian unknown H on a
/// d-dimensional space: a symmetric real part (entries (k,l), k <= l) and
/// an antisymmetric imaginary part (entries (k,l), k < l).
struct HermitianParam {
    std::size_t d;

    std::size_t sym_count() const { return d * (d + 1) / 2; }
    std::size_t antisym_count() const { return d * (d - 1) / 2; }
    std::size_t sym_index(std::size_t k, std::size_t l) const;
    std::size_t antisym_index(std::size_t k, std::size_t l) const;

    /// Coordinates of the identity in the symmetric parametrization.
    RVector identity_sym() const;

    RMatrix unflatten_sym(const RVector& v) const;
    RMatrix unflatten_antisym(const RVector& v) const;
    RVector flatten_sym(const RMatrix& s) const;
};

/// Which state pair produced a constraint row, and the spectator-side
/// inner product that made the row mandatory.
struct PairProvenance {
    std::size_t i, j;
    Rational spectator;
};

/// Real-linear constraints on one party's first-round POVM element M'M:
/// for every pair of states whose spectator-side overlap is nonzero, the
/// measuring-side vectors x_i, x_j must satisfy <x_i|H|x_j> = 0. Each pair
/// contributes one row on the symmetric unknowns and one on the
/// antisymmetric unknowns.
struct ConstraintSystem {
    Party party;
    std::size_t d = 0;
    std::vector<RVector> sym_rows;
    std::vector<RVector> antisym_rows;
    std::vector<PairProvenance> provenance;
    std::vector<std::string> state_labels;

    HermitianParam param() const { return HermitianParam{d}; }
};

ConstraintSystem build_constraints(const StateSet& set, Party party);

enum class Verdict { trivial, nontrivial };

/// One step of the pair-by-pair derivation that reduces the solution space
/// to multiples of the identity.
struct TraceStep {
    enum class Kind { offdiag_zero, diag_equal, combined };
    Kind kind;
    std::size_t pair_index = 0;            // into provenance (not for combined)
    std::size_t k = 0, l = 0;              // entry acted on
    bool forces_imag = false;              // companion imaginary entry zeroed
    std::vector<std::size_t> extra_pairs;  // combined: all remaining rows used
    std::string label_i, label_j;          // provenance state labels
    std::string text;                      // rendered human-readable form
};

/// Two-outcome POVM witness. The imaginary parts are zero whenever the
/// witness solution is purely symmetric (every case the families produce).
struct WitnessPovm {
    RMatrix e_re, e_im;
    RMatrix f_re, f_im;
};

struct TrivialityVerdict {
    Verdict status = Verdict::trivial;
    std::size_t sym_nullity = 0;
    std::size_t antisym_nullity = 0;
    std::optional<RMatrix> witness_sym;      // nontrivial only
    std::optional<RMatrix> witness_antisym;  // nontrivial only
    std::optional<WitnessPovm> witness_povm;
    std::vector<TraceStep> trace;  // filled for trivial verdicts by certify_locc
};

/// Exact nullspace decision: trivial iff the symmetric solutions are
/// exactly the identity line and the antisymmetric solutions vanish.
/// Nontrivial verdicts carry a witness (purely symmetric when one exists)
/// and a valid two-outcome POVM built from it.
TrivialityVerdict decide_triviality(const ConstraintSystem& cs);

/// (E, I-E) from a symmetric non-identity solution H: shift and scale by
/// the Gershgorin bounds so both outcomes are PSD. Throws when the bounds
/// degenerate (H proportional to the identity).
std::pair<RMatrix, RMatrix> make_witness_povm(const RMatrix& h_sym);

/// Greedy pair-by-pair derivation for a trivial system: first rows forcing
/// single off-diagonal entries to zero, then rows forcing diagonal
/// equalities; any stalled remainder is folded into one combined step. The
/// cumulative rows are re-checked to span the full reduction.
/// Requires decide_triviality(cs) = trivial.
std::vector<TraceStep> derivation_trace(const ConstraintSystem& cs);

enum class Conclusion { indistinguishable, inconclusive };

struct LoccCertificate {
    std::string set_digest;
    TrivialityVerdict alice;
    TrivialityVerdict bob;
    Conclusion conclusion = Conclusion::inconclusive;
};

/// Runs build_constraints + decide_triviality for both parties.
/// Indistinguishable iff both verdicts are trivial (and the set has at
/// least two states). Requires a validated set.
LoccCertificate certify_locc(const StateSet& set);

/// Canonical JSON rendering of a certificate (sorted keys, rational
/// strings, newline-terminated).
std::string certificate_json(const LoccCertificate& cert);

/// Human-readable derivation text for one party.
std::string render_trace(const ConstraintSystem& cs, const std::vector<TraceStep>& steps);

/// FNV-1a digest of the set's canonical JSON, as 16 hex digits.
std::string set_digest(const StateSet& set);

}  // namespace nwe
