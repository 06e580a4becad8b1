// Command-line frontend: generation, validation, certification,
// extendibility and completion checks with machine-readable JSON output.
//
// Exit codes: 0 success / INDISTINGUISHABLE / EXTENDIBLE, 1 domain check
// negative (validate with violations, complete with a non-basis), 2 usage
// or file errors, 3 INCONCLUSIVE, 4 UPB, 5 BUDGET_EXCEEDED.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "nwe/certifier.hpp"
#include "nwe/extendibility.hpp"
#include "nwe/families.hpp"
#include "nwe/states.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

nwe::StateSet generate(const std::string& family, std::size_t m, std::size_t n) {
    if (family == "eq1") {
        if (m != 0 && m != 3) throw std::runtime_error("eq1 is a 3 (x) n family; omit --m or pass 3");
        return nwe::gen_eq1(n);
    }
    if (family == "eq2") return nwe::gen_eq2(m, n);
    if (family == "eq3") return nwe::gen_eq3(m, n);
    if (family == "bennett9") return nwe::gen_bennett9();
    throw std::runtime_error("unknown family: " + family);
}

std::uint64_t resolve_budget(std::uint64_t flag_value, bool flag_given) {
    if (flag_given) return flag_value;
    if (const char* env = std::getenv("NWE_BUDGET")) {
        const unsigned long long v = std::stoull(env);
        if (v == 0) throw std::runtime_error("NWE_BUDGET must be positive");
        return v;
    }
    return nwe::kDefaultExtendBudget;
}

nlohmann::json violation_json(const nwe::StateSet& set, const nwe::ValidationReport& report) {
    nlohmann::json doc;
    doc["valid"] = report.ok();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : report.violations) {
        nlohmann::json item;
        item["i"] = v.i;
        item["j"] = v.j;
        item["labels"] = {set.states[v.i].label, set.states[v.j].label};
        item["a_inner"] = v.a_inner.str();
        item["b_inner"] = v.b_inner.str();
        arr.push_back(std::move(item));
    }
    doc["violations"] = std::move(arr);
    return doc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nwe: exact LOCC-indistinguishability certification for orthogonal "
                 "product states"};
    app.require_subcommand(1);

    std::string family, in_path, out_path;
    std::size_t m = 0, n = 0, prepared = 0;
    std::uint64_t budget = nwe::kDefaultExtendBudget;
    bool emit_trace = false;
    std::string party = "both";

    auto* cmd_generate = app.add_subcommand("generate", "emit a family's state set as JSON");
    cmd_generate->add_option("--family", family, "eq1, eq2, eq3 or bennett9")->required();
    cmd_generate->add_option("--m", m, "Alice dimension (eq2/eq3)");
    cmd_generate->add_option("--n", n, "Bob dimension");
    cmd_generate->add_option("--out", out_path, "output path (default stdout)");

    auto* cmd_validate = app.add_subcommand("validate", "report orthogonality violations");
    cmd_validate->add_option("--in", in_path, "state-set JSON")->required();
    cmd_validate->add_option("--out", out_path, "output path (default stdout)");

    auto* cmd_certify = app.add_subcommand("certify", "emit a LOCC certificate as JSON");
    cmd_certify->add_option("--in", in_path, "state-set JSON")->required();
    cmd_certify->add_option("--out", out_path, "output path (default stdout)");
    cmd_certify->add_flag("--emit-trace", emit_trace,
                          "also print the human-readable derivation");

    auto* cmd_extend = app.add_subcommand("extend", "search for a product extension");
    cmd_extend->add_option("--in", in_path, "state-set JSON")->required();
    cmd_extend->add_option("--out", out_path, "output path (default stdout)");
    auto* budget_opt = cmd_extend->add_option("--budget", budget, "search node budget");

    auto* cmd_complete =
        app.add_subcommand("complete", "complete eq2(m,m) to a full product basis and check it");
    cmd_complete->add_option("--m", m, "dimension (m = n)")->required();
    cmd_complete->add_option("--prepared", prepared,
                             "also print the measurement distribution for this member");
    cmd_complete->add_option("--out", out_path, "output path (default stdout)");

    auto* cmd_trace = app.add_subcommand("trace", "print the derivation text only");
    cmd_trace->add_option("--in", in_path, "state-set JSON")->required();
    cmd_trace->add_option("--party", party, "alice, bob or both");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        std::cerr << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (cmd_generate->parsed()) {
            write_output(out_path, nwe::save_json(generate(family, m, n)));
            return 0;
        }

        if (cmd_validate->parsed()) {
            const auto set = nwe::load_json(read_file(in_path));
            const auto report = nwe::validate(set);
            write_output(out_path, violation_json(set, report).dump(2) + "\n");
            return report.ok() ? 0 : 1;
        }

        if (cmd_certify->parsed()) {
            const auto set = nwe::load_json(read_file(in_path));
            const auto cert = nwe::certify_locc(set);
            write_output(out_path, nwe::certificate_json(cert));
            if (emit_trace) {
                std::ostream& ts = out_path.empty() ? std::cerr : std::cout;
                for (nwe::Party p : {nwe::Party::alice, nwe::Party::bob}) {
                    const auto& v = (p == nwe::Party::alice) ? cert.alice : cert.bob;
                    if (v.status != nwe::Verdict::trivial) continue;
                    ts << nwe::render_trace(nwe::build_constraints(set, p), v.trace);
                }
            }
            return cert.conclusion == nwe::Conclusion::indistinguishable ? 0 : 3;
        }

        if (cmd_extend->parsed()) {
            const auto set = nwe::load_json(read_file(in_path));
            const auto result =
                nwe::find_product_extension(set, resolve_budget(budget, budget_opt->count() > 0));
            nlohmann::json doc;
            doc["explored"] = result.explored;
            doc["budget"] = result.budget;
            switch (result.status) {
                case nwe::ExtStatus::extendible: doc["status"] = "extendible"; break;
                case nwe::ExtStatus::upb: doc["status"] = "upb"; break;
                case nwe::ExtStatus::budget_exceeded: doc["status"] = "budget_exceeded"; break;
            }
            if (result.witness) {
                nlohmann::json w;
                w["label"] = result.witness->label;
                nlohmann::json a = nlohmann::json::array(), b = nlohmann::json::array();
                for (const auto& c : result.witness->a.coeffs) a.push_back(c.str());
                for (const auto& c : result.witness->b.coeffs) b.push_back(c.str());
                w["a"] = std::move(a);
                w["b"] = std::move(b);
                doc["witness"] = std::move(w);
            }
            write_output(out_path, doc.dump(2) + "\n");
            switch (result.status) {
                case nwe::ExtStatus::extendible: return 0;
                case nwe::ExtStatus::upb: return 4;
                case nwe::ExtStatus::budget_exceeded: return 5;
            }
        }

        if (cmd_complete->parsed()) {
            auto set = nwe::gen_eq2(m, m);
            for (auto& s : nwe::completion_states(m)) set.states.push_back(std::move(s));
            set.family = "eq2_completed";
            const bool ok = nwe::check_completion_basis(set);
            nlohmann::json doc;
            doc["is_basis"] = ok;
            doc["m"] = m;
            doc["state_count"] = set.size();
            if (cmd_complete->count("--prepared") > 0) {
                nlohmann::json dist = nlohmann::json::array();
                for (const auto& pr : nwe::separable_discriminate(set, prepared))
                    dist.push_back(pr.str());
                doc["distribution"] = std::move(dist);
            }
            doc["set"] = nlohmann::json::parse(nwe::save_json(set));
            write_output(out_path, doc.dump(2) + "\n");
            return ok ? 0 : 1;
        }

        if (cmd_trace->parsed()) {
            const auto set = nwe::load_json(read_file(in_path));
            const auto cert = nwe::certify_locc(set);
            for (nwe::Party p : {nwe::Party::alice, nwe::Party::bob}) {
                const std::string name = (p == nwe::Party::alice) ? "alice" : "bob";
                if (party != "both" && party != name) continue;
                const auto& v = (p == nwe::Party::alice) ? cert.alice : cert.bob;
                if (v.status == nwe::Verdict::trivial) {
                    std::cout << nwe::render_trace(nwe::build_constraints(set, p), v.trace);
                } else {
                    std::cout << "party: " << name
                              << " -- nontrivial first measurement exists; no derivation\n";
                }
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
