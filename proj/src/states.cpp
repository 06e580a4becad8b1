#include "nwe/states.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace nwe {

namespace {

bool all_zero(const RVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c.is_zero(); });
}

}  // namespace

Ket ket_lin(std::size_t dim, const std::vector<std::pair<std::size_t, long>>& terms) {
    if (dim == 0) throw std::invalid_argument("ket_lin: zero dimension");
    RVector coeffs(dim, Rational(0));
    for (const auto& [k, c] : terms) {
        if (k >= dim) throw std::out_of_range("ket_lin: basis index out of range");
        coeffs[k] += Rational(c);
    }
    if (all_zero(coeffs)) throw std::invalid_argument("ket_lin: all coefficients zero");
    return Ket{std::move(coeffs)};
}

Ket ket_basis(std::size_t dim, std::size_t k) { return ket_lin(dim, {{k, 1}}); }

Ket ket_pm(std::size_t dim, std::size_t e, std::size_t f, int sign) {
    if (e == f) throw std::invalid_argument("ket_pm: equal basis indices");
    return ket_lin(dim, {{e, 1}, {f, sign >= 0 ? 1L : -1L}});
}

Ket ket_uniform(std::size_t dim) {
    std::vector<std::pair<std::size_t, long>> terms;
    for (std::size_t k = 0; k < dim; ++k) terms.emplace_back(k, 1);
    return ket_lin(dim, terms);
}

Rational inner(const Ket& x, const Ket& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("inner: dimension mismatch");
    return dot(x.coeffs, y.coeffs);
}

ValidationReport validate(const StateSet& set) {
    ValidationReport report;
    for (std::size_t i = 0; i < set.states.size(); ++i) {
        for (std::size_t j = i + 1; j < set.states.size(); ++j) {
            const Rational ai = inner(set.states[i].a, set.states[j].a);
            const Rational bi = inner(set.states[i].b, set.states[j].b);
            if (!ai.is_zero() && !bi.is_zero())
                report.violations.push_back(Violation{i, j, ai, bi});
        }
    }
    return report;
}

namespace {

nlohmann::json ket_to_json(const Ket& k) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : k.coeffs) arr.push_back(c.str());
    return arr;
}

Ket ket_from_json(const nlohmann::json& arr, std::size_t expected_dim, const char* side) {
    if (!arr.is_array())
        throw std::runtime_error(std::string("load_json: ket '") + side + "' is not an array");
    if (arr.size() != expected_dim)
        throw std::runtime_error(std::string("load_json: ket '") + side +
                                 "' length disagrees with declared dimension");
    RVector coeffs;
    coeffs.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_string())
            throw std::runtime_error("load_json: coefficients must be rational strings");
        coeffs.push_back(Rational::parse(v.get<std::string>()));
    }
    if (all_zero(coeffs)) throw std::runtime_error("load_json: zero ket");
    return Ket{std::move(coeffs)};
}

}  // namespace

std::string save_json(const StateSet& set) {
    nlohmann::json doc;
    doc["m"] = set.m;
    doc["n"] = set.n;
    doc["family"] = set.family ? nlohmann::json(*set.family) : nlohmann::json(nullptr);
    nlohmann::json states = nlohmann::json::array();
    for (const auto& s : set.states) {
        nlohmann::json st;
        st["label"] = s.label;
        st["a"] = ket_to_json(s.a);
        st["b"] = ket_to_json(s.b);
        states.push_back(std::move(st));
    }
    doc["states"] = std::move(states);
    return doc.dump(2) + "\n";
}

StateSet load_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("load_json: parse error: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("m") || !doc.contains("n") || !doc.contains("states"))
        throw std::runtime_error("load_json: missing required keys");
    if (!doc["m"].is_number_unsigned() || !doc["n"].is_number_unsigned())
        throw std::runtime_error("load_json: m and n must be non-negative integers");

    StateSet set;
    set.m = doc["m"].get<std::size_t>();
    set.n = doc["n"].get<std::size_t>();
    if (set.m < 2 || set.n < 2)
        throw std::runtime_error("load_json: dimensions must be at least 2");
    if (doc.contains("family") && !doc["family"].is_null()) {
        if (!doc["family"].is_string())
            throw std::runtime_error("load_json: family must be a string or null");
        set.family = doc["family"].get<std::string>();
    }
    if (!doc["states"].is_array())
        throw std::runtime_error("load_json: states must be an array");
    for (const auto& st : doc["states"]) {
        if (!st.is_object() || !st.contains("label") || !st.contains("a") || !st.contains("b"))
            throw std::runtime_error("load_json: state entries need label, a, b");
        if (!st["label"].is_string())
            throw std::runtime_error("load_json: state label must be a string");
        ProductState ps;
        ps.label = st["label"].get<std::string>();
        ps.a = ket_from_json(st["a"], set.m, "a");
        ps.b = ket_from_json(st["b"], set.n, "b");
        set.states.push_back(std::move(ps));
    }
    return set;
}

}  // namespace nwe
