// flat2g: exact computations with finite 2-groups (G, A, alpha) -- flat
// bundle moduli on surfaces, Freed-Quinn characters, finite Chern-Simons
// section dimensions, Cech classification on nerves, and verification
// sweeps of the structural identities.
//
// Exit codes: 0 success, 1 bad spec/input, 2 budget exceeded,
//             3 property failure (counterexample printed).

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "flat2g/cech.hpp"
#include "flat2g/moduli.hpp"
#include "flat2g/parallel.hpp"
#include "flat2g/verify.hpp"

using json = nlohmann::ordered_json;
using namespace flat2g;

namespace {

struct CliOptions {
    RunConfig cfg;
    std::string format = "json";
    std::string suite;
    std::string data_file;
    std::string loop;
    std::string cech_action = "classify";
};

int64_t env_budget(int64_t fallback) {
    const char* v = std::getenv("FLAT2G_BUDGET");
    if (!v) return fallback;
    try {
        return std::stoll(v);
    } catch (const std::logic_error&) {
        throw spec_error("FLAT2G_BUDGET is not an integer");
    }
}

Nerve resolve_nerve(const std::string& name) {
    if (name.empty()) throw spec_error("a nerve is required (--nerve)");
    if (name.find('/') != std::string::npos || name.find('.') != std::string::npos)
        return load_nerve(name);
    return builtin_nerve(name);
}

json moduli_report(const CliOptions& opt) {
    TwoGroup gg = two_group_from_config(opt.cfg);
    const FiniteGroup& g = gg.group();
    auto bundles = enumerate_g_bundles(g, opt.cfg.genus, opt.cfg.budget, opt.cfg.workers);
    auto classes = classify_flat_2bundles(gg, opt.cfg.genus, bundles);
    json orbits = json::array();
    int64_t dim = 0;
    for (const auto& orbit : bundles.orbits) {
        FQCharacter chi = fq_character(gg, opt.cfg.genus, orbit);
        bool contributes = chi.trivial();
        if (contributes) ++dim;
        json character = json::object();
        for (const auto& [t, v] : chi.values) character[g.name(t)] = v.str();
        json rep = json::array();
        for (Elt e : orbit.rep) rep.push_back(g.name(e));
        orbits.push_back({{"representative", rep},
                          {"orbit_size", orbit.orbit_size},
                          {"aut_order", static_cast<int64_t>(orbit.aut.size())},
                          {"character", character},
                          {"contributes_section", contributes}});
    }
    return json{{"group", opt.cfg.group},
                {"cocycle", opt.cfg.cocycle},
                {"genus", opt.cfg.genus},
                {"modulus", gg.modulus()},
                {"orbits", orbits},
                {"cs_dimension", dim},
                {"flat_2bundle_classes", classes.total}};
}

void print_moduli(const CliOptions& opt, const json& rep) {
    if (opt.format == "json") {
        std::cout << rep.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "representative,orbit_size,aut_order,contributes_section\n";
        for (const auto& o : rep["orbits"]) {
            std::string r;
            for (const auto& e : o["representative"]) r += e.get<std::string>() + " ";
            if (!r.empty()) r.pop_back();
            std::cout << '"' << r << "\"," << o["orbit_size"] << "," << o["aut_order"] << ","
                      << (o["contributes_section"].get<bool>() ? 1 : 0) << "\n";
        }
    } else {
        std::cout << "group " << rep["group"].get<std::string>() << ", cocycle "
                  << rep["cocycle"].get<std::string>() << ", genus " << rep["genus"]
                  << ", mu_" << rep["modulus"] << "\n";
        std::cout << "orbits: " << rep["orbits"].size() << "\n";
        for (const auto& o : rep["orbits"]) {
            std::string r;
            for (const auto& e : o["representative"]) r += e.get<std::string>() + " ";
            std::cout << "  (" << r << ") size=" << o["orbit_size"] << " |Aut|=" << o["aut_order"]
                      << (o["contributes_section"].get<bool>() ? "  [section]" : "");
            if (!o["contributes_section"].get<bool>()) {
                std::cout << "  chi:";
                for (const auto& [t, v] : o["character"].items())
                    std::cout << " " << t << "->" << v.get<std::string>();
            }
            std::cout << "\n";
        }
        std::cout << "cs_dimension: " << rep["cs_dimension"] << "\n";
        std::cout << "flat_2bundle_classes: " << rep["flat_2bundle_classes"] << "\n";
    }
}

int cmd_moduli(const CliOptions& opt) {
    json rep = moduli_report(opt);
    print_moduli(opt, rep);
    return 0;
}

int cmd_verify(const CliOptions& opt) {
    std::vector<std::string> to_run =
        opt.suite.empty() ? suite_names() : std::vector<std::string>{opt.suite};
    bool all_pass = true;
    json out = json::array();
    for (const auto& name : to_run) {
        SuiteResult r = run_suite(name, opt.cfg);
        all_pass = all_pass && r.pass;
        out.push_back({{"suite", r.suite},
                       {"pass", r.pass},
                       {"checks", r.checks},
                       {"counterexample", r.counterexample}});
        if (opt.format != "json") {
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.suite << " (" << r.checks
                      << " checks)";
            if (!r.pass) std::cout << "\n  counterexample: " << r.counterexample;
            std::cout << "\n";
        }
    }
    if (opt.format == "json") std::cout << out.dump(2) << "\n";
    return all_pass ? 0 : 3;
}

std::vector<int> parse_loop(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            out.push_back(std::stoi(part));
        } catch (const std::logic_error&) {
            throw spec_error("bad loop entry: " + part);
        }
    }
    return out;
}

std::pair<std::map<std::vector<int>, Elt>, std::map<std::vector<int>, int64_t>> load_cech_data(
    const std::string& path, const FiniteGroup& g, int64_t modulus) {
    std::ifstream in(path);
    if (!in) throw spec_error("cannot open cech data file: " + path);
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw spec_error("bad cech data JSON: " + std::string(e.what()));
    }
    auto parse_key = [](const std::string& k) {
        std::vector<int> t;
        std::stringstream ss(k);
        std::string part;
        while (std::getline(ss, part, ',')) t.push_back(std::stoi(part));
        return t;
    };
    std::map<std::vector<int>, Elt> rho;
    std::map<std::vector<int>, int64_t> gamma;
    if (j.contains("rho"))
        for (const auto& [k, v] : j["rho"].items())
            rho[parse_key(k)] = g.element_by_name(v.get<std::string>());
    if (j.contains("gamma"))
        for (const auto& [k, v] : j["gamma"].items())
            gamma[parse_key(k)] =
                parse_circle(v.get<std::string>()).rescaled(modulus).numerator();
    return {std::move(rho), std::move(gamma)};
}

int cmd_cech(const CliOptions& opt) {
    TwoGroup gg = two_group_from_config(opt.cfg);
    Nerve nerve = resolve_nerve(opt.cfg.nerve);
    json out;
    if (opt.cech_action == "classify") {
        auto cls = classify(nerve, gg, opt.cfg.budget, opt.cfg.workers);
        out = json{{"nerve", opt.cfg.nerve},
                   {"group", opt.cfg.group},
                   {"cocycle", opt.cfg.cocycle},
                   {"modulus", gg.modulus()},
                   {"classes", cls.count},
                   {"g_bundle_classes", cls.g_orbit_count}};
    } else if (opt.cech_action == "validate") {
        if (opt.data_file.empty()) throw spec_error("cech validate needs --data <file>");
        auto [rho_in, gamma_in] = load_cech_data(opt.data_file, gg.group(), gg.modulus());
        auto completed = complete_data(nerve, gg, rho_in, gamma_in);
        json verdict;
        if (!completed) {
            verdict = {{"valid", false}, {"reason", "degenerate completion infeasible"}};
        } else if (auto v = validate_object(nerve, gg, *completed)) {
            verdict = {{"valid", false},
                       {"equation", v->equation},
                       {"simplex", v->simplex}};
        } else {
            verdict = {{"valid", true}};
        }
        out = json{{"nerve", opt.cfg.nerve}, {"result", verdict}};
    } else if (opt.cech_action == "holonomy") {
        if (opt.data_file.empty()) throw spec_error("cech holonomy needs --data <file>");
        if (opt.loop.empty()) throw spec_error("cech holonomy needs --loop i,j,...,i");
        auto [rho_in, gamma_in] = load_cech_data(opt.data_file, gg.group(), gg.modulus());
        auto completed = complete_data(nerve, gg, rho_in, gamma_in);
        if (!completed) throw spec_error("cech data does not complete to an object");
        Elt h = holonomy(nerve, gg.group(), *completed, parse_loop(opt.loop));
        out = json{{"nerve", opt.cfg.nerve}, {"holonomy", gg.group().name(h)}};
    } else {
        throw spec_error("unknown cech action: " + opt.cech_action);
    }
    if (opt.format == "pretty") {
        if (out.contains("classes"))
            std::cout << "nerve " << opt.cfg.nerve << ": " << out["classes"]
                      << " classes over " << out["g_bundle_classes"] << " G-bundle classes\n";
        else if (out.contains("result"))
            std::cout << "nerve " << opt.cfg.nerve << ": "
                      << (out["result"]["valid"].get<bool>() ? "valid" : "invalid") << "\n";
        else
            std::cout << "holonomy: " << out["holonomy"].get<std::string>() << "\n";
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact finite 2-group bundle computations"};
    app.require_subcommand(1);

    CliOptions opt;
    try {
        opt.cfg.budget = env_budget(opt.cfg.budget);
    } catch (const spec_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    opt.cfg.workers = default_workers();

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--group", opt.cfg.group, "group spec (Z<n>, Z<n>xZ<m>, D<n>, S<n>, Q8, table:<path>)");
        cmd->add_option("--cocycle", opt.cfg.cocycle,
                        "cocycle spec (trivial, cyclic:<n>:<p>, file:<path>)");
        cmd->add_option("-N,--modulus", opt.cfg.modulus, "circle modulus (ambient is lcm with |G|)");
        cmd->add_option("--genus", opt.cfg.genus, "surface genus");
        cmd->add_option("--nerve", opt.cfg.nerve, "nerve name (circle3, sphere-tetra, torus7) or JSON path");
        cmd->add_option("--source-group", opt.cfg.source_group, "source group Q for representation suites");
        cmd->add_option("--seed", opt.cfg.seed, "seed for randomized sweeps");
        cmd->add_option("--budget", opt.cfg.budget, "enumeration budget");
        cmd->add_option("--workers", opt.cfg.workers, "worker threads for sweeps");
        cmd->add_option("--format", opt.format, "output format: json|csv|pretty");
    };

    CLI::App* moduli_cmd = app.add_subcommand("moduli", "enumerate flat bundles, characters, CS dimensions");
    add_common(moduli_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    add_common(verify_cmd);
    verify_cmd->add_option("--suite", opt.suite,
                           "suite: cocycle|pentagon|composition|cleavage|fq|elliptic|cech|surface");

    CLI::App* cech_cmd = app.add_subcommand("cech", "Cech-data computations on nerves");
    add_common(cech_cmd);
    cech_cmd->add_option("action", opt.cech_action, "classify|validate|holonomy");
    cech_cmd->add_option("--data", opt.data_file, "cech data JSON file");
    cech_cmd->add_option("--loop", opt.loop, "comma-separated closed vertex path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (moduli_cmd->parsed()) return cmd_moduli(opt);
        if (verify_cmd->parsed()) return cmd_verify(opt);
        if (cech_cmd->parsed()) return cmd_cech(opt);
    } catch (const budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const spec_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const invariant_error& e) {
        std::cerr << "property failure: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
