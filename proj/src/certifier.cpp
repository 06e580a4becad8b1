#include "nwe/certifier.hpp"

#include <json.hpp>

#include <numeric>
#include <stdexcept>

namespace nwe {

std::size_t HermitianParam::sym_index(std::size_t k, std::size_t l) const {
    if (k > l || l >= d) throw std::out_of_range("sym_index");
    return k * d - k * (k - 1) / 2 + (l - k);
}

std::size_t HermitianParam::antisym_index(std::size_t k, std::size_t l) const {
    if (k >= l || l >= d) throw std::out_of_range("antisym_index");
    return k * (d - 1) - k * (k - 1) / 2 + (l - k - 1);
}

RVector HermitianParam::identity_sym() const {
    RVector v(sym_count(), Rational(0));
    for (std::size_t k = 0; k < d; ++k) v[sym_index(k, k)] = Rational(1);
    return v;
}

RMatrix HermitianParam::unflatten_sym(const RVector& v) const {
    RMatrix s(d, d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = k; l < d; ++l) {
            s.at(k, l) = v[sym_index(k, l)];
            s.at(l, k) = v[sym_index(k, l)];
        }
    return s;
}

RMatrix HermitianParam::unflatten_antisym(const RVector& v) const {
    RMatrix s(d, d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = k + 1; l < d; ++l) {
            s.at(k, l) = v[antisym_index(k, l)];
            s.at(l, k) = -v[antisym_index(k, l)];
        }
    return s;
}

RVector HermitianParam::flatten_sym(const RMatrix& s) const {
    RVector v(sym_count(), Rational(0));
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = k; l < d; ++l) v[sym_index(k, l)] = s.at(k, l);
    return v;
}

ConstraintSystem build_constraints(const StateSet& set, Party party) {
    const auto report = validate(set);
    if (!report.ok())
        throw std::invalid_argument("build_constraints: set fails orthogonality validation");

    ConstraintSystem cs;
    cs.party = party;
    cs.d = (party == Party::alice) ? set.m : set.n;
    for (const auto& s : set.states) cs.state_labels.push_back(s.label);

    const HermitianParam p{cs.d};
    for (std::size_t i = 0; i < set.states.size(); ++i) {
        for (std::size_t j = i + 1; j < set.states.size(); ++j) {
            const Ket& xi = (party == Party::alice) ? set.states[i].a : set.states[i].b;
            const Ket& xj = (party == Party::alice) ? set.states[j].a : set.states[j].b;
            const Ket& yi = (party == Party::alice) ? set.states[i].b : set.states[i].a;
            const Ket& yj = (party == Party::alice) ? set.states[j].b : set.states[j].a;
            const Rational spectator = inner(yi, yj);
            if (spectator.is_zero()) continue;

            RVector sym(p.sym_count(), Rational(0));
            RVector antisym(p.antisym_count(), Rational(0));
            for (std::size_t k = 0; k < cs.d; ++k) {
                sym[p.sym_index(k, k)] = xi.coeffs[k] * xj.coeffs[k];
                for (std::size_t l = k + 1; l < cs.d; ++l) {
                    sym[p.sym_index(k, l)] =
                        xi.coeffs[k] * xj.coeffs[l] + xi.coeffs[l] * xj.coeffs[k];
                    antisym[p.antisym_index(k, l)] =
                        xi.coeffs[k] * xj.coeffs[l] - xi.coeffs[l] * xj.coeffs[k];
                }
            }
            cs.sym_rows.push_back(std::move(sym));
            cs.antisym_rows.push_back(std::move(antisym));
            cs.provenance.push_back(PairProvenance{i, j, spectator});
        }
    }
    return cs;
}

namespace {

bool is_identity_multiple(const RVector& v, const HermitianParam& p) {
    const Rational& first = v[p.sym_index(0, 0)];
    for (std::size_t k = 0; k < p.d; ++k) {
        if (v[p.sym_index(k, k)] != first) return false;
        for (std::size_t l = k + 1; l < p.d; ++l)
            if (!v[p.sym_index(k, l)].is_zero()) return false;
    }
    return !first.is_zero();
}

// Gershgorin interval for the Hermitian matrix R + iS, bounding each entry
// modulus by |Re| + |Im| so the radii stay rational.
std::pair<Rational, Rational> hermitian_bounds(const RMatrix& r, const RMatrix& s) {
    const std::size_t d = r.rows();
    Rational lo, hi;
    for (std::size_t i = 0; i < d; ++i) {
        Rational radius;
        for (std::size_t j = 0; j < d; ++j)
            if (j != i) radius += r.at(i, j).abs() + s.at(i, j).abs();
        const Rational l = r.at(i, i) - radius;
        const Rational h = r.at(i, i) + radius;
        if (i == 0 || l < lo) lo = l;
        if (i == 0 || h > hi) hi = h;
    }
    return {lo, hi};
}

WitnessPovm hermitian_povm(const RMatrix& h_re, const RMatrix& h_im) {
    const auto [lo, hi] = hermitian_bounds(h_re, h_im);
    if (lo == hi) throw std::invalid_argument("witness POVM: matrix proportional to identity");
    const Rational scale = Rational(1) / (hi - lo);
    const std::size_t d = h_re.rows();
    RMatrix e_re = h_re;
    e_re -= lo * RMatrix::identity(d);
    e_re *= scale;
    RMatrix e_im = h_im;
    e_im *= scale;
    RMatrix f_re = RMatrix::identity(d);
    f_re -= e_re;
    RMatrix f_im = e_im;
    f_im *= Rational(-1);
    return WitnessPovm{std::move(e_re), std::move(e_im), std::move(f_re), std::move(f_im)};
}

}  // namespace

std::pair<RMatrix, RMatrix> make_witness_povm(const RMatrix& h_sym) {
    if (!h_sym.is_symmetric())
        throw std::invalid_argument("make_witness_povm: matrix not symmetric");
    const auto [lo, hi] = gershgorin_bounds(h_sym);
    if (lo == hi)
        throw std::invalid_argument("make_witness_povm: degenerate bounds (H proportional to I)");
    auto povm = hermitian_povm(h_sym, RMatrix(h_sym.rows(), h_sym.cols()));
    return {std::move(povm.e_re), std::move(povm.f_re)};
}

TrivialityVerdict decide_triviality(const ConstraintSystem& cs) {
    const HermitianParam p = cs.param();
    const auto sym_basis = nullspace_of_rows(cs.sym_rows, p.sym_count());
    const auto antisym_basis = nullspace_of_rows(cs.antisym_rows, p.antisym_count());

    TrivialityVerdict verdict;
    verdict.sym_nullity = sym_basis.size();
    verdict.antisym_nullity = antisym_basis.size();

    const bool trivial = sym_basis.size() == 1 && is_identity_multiple(sym_basis.front(), p) &&
                         antisym_basis.empty();
    if (trivial) {
        verdict.status = Verdict::trivial;
        return verdict;
    }

    verdict.status = Verdict::nontrivial;
    for (const auto& v : sym_basis) {
        if (is_identity_multiple(v, p)) continue;
        verdict.witness_sym = p.unflatten_sym(v);
        verdict.witness_antisym = RMatrix(p.d, p.d);
        auto [e, f] = make_witness_povm(*verdict.witness_sym);
        verdict.witness_povm =
            WitnessPovm{std::move(e), RMatrix(p.d, p.d), std::move(f), RMatrix(p.d, p.d)};
        return verdict;
    }
    // Symmetric solutions are exactly the identity line, but an
    // antisymmetric (imaginary) solution survives: the witness is i*S.
    verdict.witness_sym = RMatrix(p.d, p.d);
    verdict.witness_antisym = p.unflatten_antisym(antisym_basis.front());
    verdict.witness_povm = hermitian_povm(*verdict.witness_sym, *verdict.witness_antisym);
    return verdict;
}

namespace {

struct DiagClasses {
    std::vector<std::size_t> parent;
    explicit DiagClasses(std::size_t d) : parent(d) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool merge(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        parent[y] = x;
        return true;
    }
    bool single_class() {
        for (std::size_t i = 1; i < parent.size(); ++i)
            if (find(i) != find(0)) return false;
        return true;
    }
};

struct SymReduction {
    enum class Kind { stall, redundant, offdiag, diag } kind = Kind::stall;
    std::size_t k = 0, l = 0;
};

// Reduces one symmetric row modulo the entries already known to vanish.
SymReduction reduce_sym_row(const RVector& row, const HermitianParam& p,
                            const std::vector<bool>& known_zero, DiagClasses& classes) {
    std::vector<std::pair<std::size_t, std::size_t>> diag, offdiag;
    for (std::size_t k = 0; k < p.d; ++k) {
        if (!row[p.sym_index(k, k)].is_zero()) diag.emplace_back(k, k);
        for (std::size_t l = k + 1; l < p.d; ++l) {
            const std::size_t idx = p.sym_index(k, l);
            if (!row[idx].is_zero() && !known_zero[idx]) offdiag.emplace_back(k, l);
        }
    }
    if (diag.empty() && offdiag.empty()) return {SymReduction::Kind::redundant};
    if (diag.empty() && offdiag.size() == 1)
        return {SymReduction::Kind::offdiag, offdiag[0].first, offdiag[0].second};
    if (offdiag.empty() && diag.size() == 2) {
        // Diagonal coefficients of a constraint row sum to <x|y> = 0, so two
        // surviving diagonal terms always carry opposite coefficients.
        const std::size_t k = diag[0].first, l = diag[1].first;
        if (classes.find(k) == classes.find(l)) return {SymReduction::Kind::redundant};
        return {SymReduction::Kind::diag, k, l};
    }
    return {SymReduction::Kind::stall};
}

std::string pair_text(const ConstraintSystem& cs, std::size_t pi) {
    const auto& pv = cs.provenance[pi];
    return "(" + cs.state_labels[pv.i] + ", " + cs.state_labels[pv.j] + ")";
}

}  // namespace

std::vector<TraceStep> derivation_trace(const ConstraintSystem& cs) {
    {
        const auto verdict = decide_triviality(cs);
        if (verdict.status != Verdict::trivial)
            throw std::invalid_argument("derivation_trace: system is not trivial");
    }
    const HermitianParam p = cs.param();
    std::vector<bool> sym_zero(p.sym_count(), false);
    std::vector<bool> antisym_zero(p.antisym_count(), false);
    std::vector<bool> sym_used(cs.sym_rows.size(), false);
    std::vector<bool> antisym_used(cs.antisym_rows.size(), false);
    DiagClasses classes(p.d);
    std::vector<TraceStep> steps;

    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t pi = 0; pi < cs.sym_rows.size(); ++pi) {
            std::optional<TraceStep> step;
            if (!sym_used[pi]) {
                const auto red = reduce_sym_row(cs.sym_rows[pi], p, sym_zero, classes);
                switch (red.kind) {
                    case SymReduction::Kind::redundant:
                        sym_used[pi] = true;
                        break;
                    case SymReduction::Kind::offdiag:
                        sym_zero[p.sym_index(red.k, red.l)] = true;
                        sym_used[pi] = true;
                        step = TraceStep{TraceStep::Kind::offdiag_zero, pi, red.k, red.l};
                        progress = true;
                        break;
                    case SymReduction::Kind::diag:
                        classes.merge(red.k, red.l);
                        sym_used[pi] = true;
                        step = TraceStep{TraceStep::Kind::diag_equal, pi, red.k, red.l};
                        progress = true;
                        break;
                    case SymReduction::Kind::stall:
                        break;
                }
            }
            std::optional<std::pair<std::size_t, std::size_t>> imag;
            if (!antisym_used[pi]) {
                std::vector<std::pair<std::size_t, std::size_t>> live;
                for (std::size_t k = 0; k < p.d && live.size() < 2; ++k)
                    for (std::size_t l = k + 1; l < p.d && live.size() < 2; ++l) {
                        const std::size_t idx = p.antisym_index(k, l);
                        if (!cs.antisym_rows[pi][idx].is_zero() && !antisym_zero[idx])
                            live.emplace_back(k, l);
                    }
                if (live.empty()) {
                    antisym_used[pi] = true;
                } else if (live.size() == 1) {
                    antisym_zero[p.antisym_index(live[0].first, live[0].second)] = true;
                    antisym_used[pi] = true;
                    progress = true;
                    imag = live[0];
                }
            }
            if (step && imag && step->k == imag->first && step->l == imag->second) {
                step->forces_imag = true;
                imag.reset();
            }
            if (step) {
                step->label_i = cs.state_labels[cs.provenance[pi].i];
                step->label_j = cs.state_labels[cs.provenance[pi].j];
                const std::string ks = std::to_string(step->k);
                const std::string ls = std::to_string(step->l);
                if (step->kind == TraceStep::Kind::offdiag_zero)
                    step->text = pair_text(cs, pi) + ": h[" + ks + "," + ls + "] = h[" + ls +
                                 "," + ks + "] = 0";
                else
                    step->text = pair_text(cs, pi) + ": h[" + ks + "," + ks + "] = h[" + ls +
                                 "," + ls + "]";
                if (step->forces_imag)
                    step->text += " (and Im h[" + ks + "," + ls + "] = 0)";
                steps.push_back(std::move(*step));
            }
            if (imag) {
                TraceStep is{TraceStep::Kind::offdiag_zero, pi, imag->first, imag->second, true};
                is.label_i = cs.state_labels[cs.provenance[pi].i];
                is.label_j = cs.state_labels[cs.provenance[pi].j];
                is.text = pair_text(cs, pi) + ": Im h[" + std::to_string(imag->first) + "," +
                          std::to_string(imag->second) + "] = 0";
                steps.push_back(std::move(is));
            }
        }
    }

    bool complete = classes.single_class();
    for (std::size_t k = 0; k < p.d && complete; ++k)
        for (std::size_t l = k + 1; l < p.d && complete; ++l) {
            if (!sym_zero[p.sym_index(k, l)]) complete = false;
            if (!antisym_zero[p.antisym_index(k, l)]) complete = false;
        }

    std::vector<RVector> used_sym, used_antisym;
    if (!complete) {
        TraceStep combined{TraceStep::Kind::combined};
        for (std::size_t pi = 0; pi < cs.sym_rows.size(); ++pi)
            if (!sym_used[pi] || !antisym_used[pi]) combined.extra_pairs.push_back(pi);
        combined.text = "combined elimination over " +
                        std::to_string(combined.extra_pairs.size()) +
                        " remaining rows: solution space reduced to identity multiples";
        steps.push_back(std::move(combined));
        used_sym = cs.sym_rows;
        used_antisym = cs.antisym_rows;
    } else {
        for (std::size_t pi = 0; pi < cs.sym_rows.size(); ++pi) {
            if (sym_used[pi]) used_sym.push_back(cs.sym_rows[pi]);
            if (antisym_used[pi]) used_antisym.push_back(cs.antisym_rows[pi]);
        }
    }

    // The steps' cumulative row set must itself pin the solution space.
    const auto sym_basis = nullspace_of_rows(used_sym, p.sym_count());
    const auto antisym_basis = nullspace_of_rows(used_antisym, p.antisym_count());
    if (sym_basis.size() != 1 || !is_identity_multiple(sym_basis.front(), p) ||
        !antisym_basis.empty())
        throw std::logic_error("derivation_trace: step rows do not reach the identity line");

    return steps;
}

std::string set_digest(const StateSet& set) {
    const std::string doc = save_json(set);
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : doc) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

LoccCertificate certify_locc(const StateSet& set) {
    if (set.size() < 2) throw std::invalid_argument("certify_locc: need at least two states");
    if (!validate(set).ok())
        throw std::invalid_argument("certify_locc: set fails orthogonality validation");

    LoccCertificate cert;
    cert.set_digest = set_digest(set);
    for (Party party : {Party::alice, Party::bob}) {
        const auto cs = build_constraints(set, party);
        auto verdict = decide_triviality(cs);
        if (verdict.status == Verdict::trivial) verdict.trace = derivation_trace(cs);
        (party == Party::alice ? cert.alice : cert.bob) = std::move(verdict);
    }
    cert.conclusion = (cert.alice.status == Verdict::trivial &&
                       cert.bob.status == Verdict::trivial)
                          ? Conclusion::indistinguishable
                          : Conclusion::inconclusive;
    return cert;
}

namespace {

nlohmann::json matrix_json(const RMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json verdict_json(const TrivialityVerdict& v) {
    nlohmann::json out;
    out["status"] = v.status == Verdict::trivial ? "trivial" : "nontrivial";
    out["sym_nullity"] = v.sym_nullity;
    out["antisym_nullity"] = v.antisym_nullity;
    if (v.status == Verdict::trivial) {
        nlohmann::json steps = nlohmann::json::array();
        for (const auto& s : v.trace) {
            nlohmann::json st;
            switch (s.kind) {
                case TraceStep::Kind::offdiag_zero: st["kind"] = "offdiag_zero"; break;
                case TraceStep::Kind::diag_equal: st["kind"] = "diag_equal"; break;
                case TraceStep::Kind::combined: st["kind"] = "combined"; break;
            }
            if (s.kind != TraceStep::Kind::combined) {
                st["k"] = s.k;
                st["l"] = s.l;
                st["imag"] = s.forces_imag;
                st["pair"] = {s.label_i, s.label_j};
            }
            st["text"] = s.text;
            steps.push_back(std::move(st));
        }
        out["trace"] = std::move(steps);
    } else {
        nlohmann::json w;
        w["h_sym"] = matrix_json(*v.witness_sym);
        w["h_antisym"] = matrix_json(*v.witness_antisym);
        w["povm_e_re"] = matrix_json(v.witness_povm->e_re);
        w["povm_e_im"] = matrix_json(v.witness_povm->e_im);
        w["povm_f_re"] = matrix_json(v.witness_povm->f_re);
        w["povm_f_im"] = matrix_json(v.witness_povm->f_im);
        out["witness"] = std::move(w);
    }
    return out;
}

}  // namespace

std::string certificate_json(const LoccCertificate& cert) {
    nlohmann::json doc;
    doc["set_digest"] = cert.set_digest;
    doc["alice"] = verdict_json(cert.alice);
    doc["bob"] = verdict_json(cert.bob);
    doc["conclusion"] = cert.conclusion == Conclusion::indistinguishable ? "indistinguishable"
                                                                         : "inconclusive";
    return doc.dump(2) + "\n";
}

std::string render_trace(const ConstraintSystem& cs, const std::vector<TraceStep>& steps) {
    std::string out;
    out += (cs.party == Party::alice) ? "party: alice" : "party: bob";
    out += " (d = " + std::to_string(cs.d) + ", rows = " + std::to_string(cs.sym_rows.size()) +
           ")\n";
    std::size_t i = 1;
    for (const auto& s : steps) out += "  step " + std::to_string(i++) + ": " + s.text + "\n";
    return out;
}

}  // namespace nwe
