// copic: solve, analyze and generate interaction-cost instances from the
// command line. Consumers are scripts; stdout carries one JSON object per
// invocation and exit codes are part of the contract:
//   0 success, 1 parse/IO error, 2 verification or agreement failure,
//   3 solver precondition (or cap) unmet.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "copic/bruteforce.hpp"
#include "copic/dispatch.hpp"
#include "copic/errors.hpp"
#include "copic/generate.hpp"
#include "copic/jsonio.hpp"
#include "copic/linearize.hpp"
#include "copic/reductions.hpp"

namespace {

using copic::Cost;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitPrecondition = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw copic::DomainError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json cost_strings(const copic::CostVector& v) {
    json a = json::array();
    for (const Cost& x : v) a.push_back(x.str());
    return a;
}

json solution_json(const copic::Solution& s, const std::string& solver) {
    json out;
    out["objective"] = s.objective.str();
    out["s1"] = s.s1;
    out["s2"] = s.s2;
    out["solver"] = solver;
    return out;
}

json certificate_json(const copic::LinearizabilityCertificate& cert, const std::string& method) {
    json out;
    out["method"] = method;
    if (cert.linearizable) {
        out["verdict"] = "linearizable";
        out["a"] = cost_strings(cert.a);
        out["b"] = cost_strings(cert.b);
        return out;
    }
    out["verdict"] = "not-linearizable";
    json witness;
    witness["residual"] = cert.residual.str();
    if (!cert.violation.empty()) witness["violation"] = cert.violation;
    json terms = json::array();
    for (const auto& term : cert.witness) {
        json t;
        t["s1"] = term.s1;
        t["s2"] = term.s2;
        t["coefficient"] = term.coefficient.str();
        terms.push_back(t);
    }
    witness["terms"] = terms;
    out["witness"] = witness;
    return out;
}

void emit(const json& out) { std::cout << out.dump(2) << "\n"; }

int cmd_solve(const std::string& path, const std::string& solver, bool verify, std::size_t cap) {
    copic::ParsedInstance parsed = copic::parse_instance_json(read_file(path));
    const copic::Instance& instance = parsed.instance;

    copic::Solution solution;
    std::string used = solver;
    try {
        if (solver == "auto") {
            copic::DispatchResult r = copic::solve_auto(instance, cap);
            for (const std::string& line : r.rejections) std::cerr << "dispatch: " << line << "\n";
            solution = std::move(r.solution);
            used = r.solver;
        } else {
            solution = copic::solve_named(instance, solver, cap);
        }
    } catch (const copic::NoSolutionError& e) {
        json out;
        out["status"] = "no-solution";
        out["reason"] = e.what();
        out["solver"] = used;
        emit(out);
        return kExitOk;
    }

    json out = solution_json(solution, used);
    int exit_code = kExitOk;
    if (verify) {
        try {
            copic::Solution reference = copic::solve_bruteforce(instance);
            bool ok = reference.objective == solution.objective;
            out["verified"] = ok;
            if (!ok) {
                out["expected_objective"] = reference.objective.str();
                exit_code = kExitMismatch;
            }
        } catch (const copic::EnumerationCapError& e) {
            std::cerr << "verify skipped: " << e.what() << "\n";
        }
    }
    emit(out);
    return exit_code;
}

int cmd_lincheck(const std::string& path, const std::string& method, std::size_t cap) {
    copic::ParsedInstance parsed = copic::parse_instance_json(read_file(path));
    const copic::Instance& instance = parsed.instance;

    if (method == "bruteforce") {
        emit(certificate_json(copic::linearizable_bruteforce(instance, cap), "bruteforce"));
        return kExitOk;
    }
    if (method == "structural") {
        emit(certificate_json(copic::check_copic_linearizable(instance), "structural"));
        return kExitOk;
    }
    if (method != "both") throw copic::DomainError("unknown lincheck method '" + method + "'");

    copic::LinearizabilityCertificate brute = copic::linearizable_bruteforce(instance, cap);
    try {
        copic::LinearizabilityCertificate structural = copic::check_copic_linearizable(instance);
        if (structural.linearizable != brute.linearizable) {
            json out;
            out["error"] = "structural and bruteforce verdicts disagree";
            out["structural"] = certificate_json(structural, "structural");
            out["bruteforce"] = certificate_json(brute, "bruteforce");
            emit(out);
            return kExitMismatch;
        }
        emit(certificate_json(structural, "both"));
    } catch (const copic::UnsupportedError&) {
        emit(certificate_json(brute, "bruteforce (structural unsupported)"));
    }
    return kExitOk;
}

int cmd_gen(const copic::GenOptions& options) {
    std::cout << copic::generate_instance_json(options);
    return kExitOk;
}

int cmd_reduce_cut(const std::string& path, std::size_t cap) {
    copic::KCardCutInstance inst = copic::parse_kcard_json(read_file(path));
    auto solver = [cap](const copic::Instance& instance) {
        return copic::solve_bruteforce(instance, cap);
    };
    copic::KCardCutResult cut = copic::solve_kcard_cut_via_copic(inst, solver);
    json out;
    out["cost"] = cut.cost.str();
    out["left"] = cut.s_left;
    out["right"] = cut.s_right;
    out["k1"] = cut.k1;
    out["k2"] = cut.k2;
    emit(out);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solvers and analyzers for combinatorial optimization with interaction costs"};
    app.require_subcommand(1);

    std::size_t cap = copic::kDefaultEnumerationCap;
    std::uint64_t seed = 0;
    app.add_option("--cap", cap, "Enumeration cap")->capture_default_str();
    app.add_option("--seed", seed, "Random seed")->capture_default_str();

    std::string instance_path, solver = "auto", method = "both";
    bool verify = false;

    CLI::App* solve = app.add_subcommand("solve", "Solve an instance file");
    solve->fallthrough();
    solve->add_option("--instance", instance_path, "Instance JSON file")->required();
    solve->add_option("--solver", solver, "Solver name or 'auto'")->capture_default_str();
    solve->add_flag("--verify", verify, "Cross-check the objective against brute force");

    CLI::App* lincheck = app.add_subcommand("lincheck", "Test linearizability of an instance file");
    lincheck->fallthrough();
    lincheck->add_option("--instance", instance_path, "Instance JSON file")->required();
    lincheck->add_option("--method", method, "structural | bruteforce | both")->capture_default_str();

    copic::GenOptions gen;
    std::vector<std::string> families;
    std::vector<long> cost_range;
    CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a seeded instance");
    gen_cmd->fallthrough();
    gen_cmd->add_option("--families", families, "Family specs for the two sides")
        ->expected(2)
        ->required();
    gen_cmd->add_option("--m", gen.m, "Ground size of side 1");
    gen_cmd->add_option("--n", gen.n, "Ground size of side 2");
    gen_cmd->add_option("--cost-range", cost_range, "Inclusive integer cost range LO HI")->expected(2);
    gen_cmd->add_option("--structure", gen.structure, "random | rank:R | diagonal | linearizable")
        ->capture_default_str();

    CLI::App* reduce = app.add_subcommand("reduce-cut", "Solve a k-card directed min cut instance");
    reduce->fallthrough();
    reduce->add_option("--instance", instance_path, "k-card cut JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(instance_path, solver, verify, cap);
        if (lincheck->parsed()) return cmd_lincheck(instance_path, method, cap);
        if (gen_cmd->parsed()) {
            gen.family1 = families[0];
            gen.family2 = families[1];
            gen.seed = seed;
            if (!cost_range.empty()) {
                gen.cost_lo = cost_range[0];
                gen.cost_hi = cost_range[1];
            }
            return cmd_gen(gen);
        }
        if (reduce->parsed()) return cmd_reduce_cut(instance_path, cap);
    } catch (const copic::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const copic::UnsupportedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const copic::EnumerationCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const copic::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const copic::NegativeCycleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const copic::NoSolutionError& e) {
        json out;
        out["status"] = "no-solution";
        out["reason"] = e.what();
        emit(out);
        return kExitOk;
    } catch (const copic::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
