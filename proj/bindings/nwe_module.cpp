// Python bindings for the main operations. Sets and certificates cross the
// boundary as canonical JSON strings; thin helpers cover the common calls.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nwe/certifier.hpp"
#include "nwe/extendibility.hpp"
#include "nwe/families.hpp"
#include "nwe/states.hpp"

namespace py = pybind11;

namespace {

nwe::Ket ket_from_strings(const std::vector<std::string>& coeffs) {
    nwe::RVector v;
    v.reserve(coeffs.size());
    for (const auto& c : coeffs) v.push_back(nwe::Rational::parse(c));
    return nwe::Ket{std::move(v)};
}

std::vector<std::string> ket_to_strings(const nwe::Ket& k) {
    std::vector<std::string> out;
    out.reserve(k.dim());
    for (const auto& c : k.coeffs) out.push_back(c.str());
    return out;
}

}  // namespace

PYBIND11_MODULE(_nwe, m) {
    m.doc() = "Exact certification of LOCC indistinguishability for orthogonal product states";

    m.def("gen_eq1", [](std::size_t n) { return nwe::save_json(nwe::gen_eq1(n)); },
          py::arg("n"), "3 (x) n family with 3n-2 states, as set JSON");
    m.def("gen_eq2",
          [](std::size_t m_, std::size_t n) { return nwe::save_json(nwe::gen_eq2(m_, n)); },
          py::arg("m"), py::arg("n"), "m (x) n family with 3n+m-4 states, as set JSON");
    m.def("gen_eq3",
          [](std::size_t m_, std::size_t n) { return nwe::save_json(nwe::gen_eq3(m_, n)); },
          py::arg("m"), py::arg("n"), "m (x) n family with 2n-1 states, as set JSON");
    m.def("gen_bennett9", [] { return nwe::save_json(nwe::gen_bennett9()); },
          "the nine-state 3 (x) 3 set, as set JSON");

    m.def("validate",
          [](const std::string& set_json) {
              const auto set = nwe::load_json(set_json);
              std::vector<std::pair<std::size_t, std::size_t>> out;
              for (const auto& v : nwe::validate(set).violations) out.emplace_back(v.i, v.j);
              return out;
          },
          py::arg("set_json"), "index pairs violating product orthogonality");

    m.def("certify",
          [](const std::string& set_json) {
              return nwe::certificate_json(nwe::certify_locc(nwe::load_json(set_json)));
          },
          py::arg("set_json"), "LOCC certificate as JSON");

    m.def("find_product_extension",
          [](const std::string& set_json, std::uint64_t budget) {
              const auto r = nwe::find_product_extension(nwe::load_json(set_json), budget);
              py::dict out;
              switch (r.status) {
                  case nwe::ExtStatus::extendible: out["status"] = "extendible"; break;
                  case nwe::ExtStatus::upb: out["status"] = "upb"; break;
                  case nwe::ExtStatus::budget_exceeded: out["status"] = "budget_exceeded"; break;
              }
              out["explored"] = r.explored;
              out["budget"] = r.budget;
              if (r.witness) {
                  py::dict w;
                  w["label"] = r.witness->label;
                  w["a"] = ket_to_strings(r.witness->a);
                  w["b"] = ket_to_strings(r.witness->b);
                  out["witness"] = w;
              }
              return out;
          },
          py::arg("set_json"), py::arg("budget") = nwe::kDefaultExtendBudget,
          "exhaustive product-extension search");

    m.def("verify_extension",
          [](const std::string& set_json, const std::vector<std::string>& a,
             const std::vector<std::string>& b) {
              return nwe::verify_extension(nwe::load_json(set_json),
                                           nwe::ProductState{"cand", ket_from_strings(a),
                                                             ket_from_strings(b)});
          },
          py::arg("set_json"), py::arg("a"), py::arg("b"),
          "true iff |a>|b> is orthogonal to every member");

    m.def("extension_witness",
          [](const std::string& set_json) -> py::object {
              const auto w = nwe::extension_witness(nwe::load_json(set_json));
              if (!w) return py::none();
              py::dict out;
              out["label"] = w->label;
              out["a"] = ket_to_strings(w->a);
              out["b"] = ket_to_strings(w->b);
              return out;
          },
          py::arg("set_json"), "family's known product extension, or None");

    m.def("completed_eq2_basis",
          [](std::size_t m_) {
              auto set = nwe::gen_eq2(m_, m_);
              for (auto& s : nwe::completion_states(m_)) set.states.push_back(std::move(s));
              set.family = "eq2_completed";
              return nwe::save_json(set);
          },
          py::arg("m"), "gen_eq2(m, m) plus its completion states, as set JSON");

    m.def("check_completion_basis",
          [](const std::string& set_json) {
              return nwe::check_completion_basis(nwe::load_json(set_json));
          },
          py::arg("set_json"), "true iff the set is a full orthogonal product basis");

    m.def("separable_discriminate",
          [](const std::string& set_json, std::size_t prepared) {
              std::vector<std::string> out;
              for (const auto& p :
                   nwe::separable_discriminate(nwe::load_json(set_json), prepared))
                  out.push_back(p.str());
              return out;
          },
          py::arg("set_json"), py::arg("prepared"),
          "projective measurement distribution over basis members");

    m.attr("__version__") = "0.1.0";
}
