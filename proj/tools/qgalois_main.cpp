// qgalois: exact verification harness for the q-deformed quantum-group
// family, its Galois objects and the reflected quantum group.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "qgalois/parse.hpp"
#include "qgalois/suites.hpp"

using namespace qgalois;

namespace {

struct CommonOpts {
    RunConfig cfg;
    std::string suite_list = "all";
};

void add_common(CLI::App* app, CommonOpts& o) {
    app->add_option("--n", o.cfg.n, "order of the root of unity (>= 2)");
    app->add_option("--m", o.cfg.m, "twist exponent (coprime to n)");
    app->add_option("--lambda-exp", o.cfg.lambda_exp, "lambda = z^k (k coprime to n)");
    app->add_option("--mu", o.cfg.mu_text, "mu as a scalar literal, e.g. 1, 1/2, z^2");
    app->add_option("--window", o.cfg.window, "window bound P for quantification");
    app->add_option("--format", o.cfg.format, "text or json");
    app->add_option("--out", o.cfg.out, "write the report to this path");
}

void emit(const Report& report, const RunConfig& cfg) {
    std::string body = cfg.format == "json" ? report.to_json() : report.to_text();
    if (cfg.out.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(cfg.out, std::ios::binary);
        f << body;
    }
}

std::vector<std::string> split_list(const std::string& txt) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : txt) {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    if (out.empty()) out.push_back("all");
    return out;
}

int run_verify(CommonOpts& o) {
    o.cfg.suites = split_list(o.suite_list);
    Session session(o.cfg);
    Report report;
    report.n = o.cfg.n;
    report.m = o.cfg.m;
    report.lambda_exp = o.cfg.lambda_exp;
    report.mu = o.cfg.mu_text;
    report.window = o.cfg.window;
    report.suites = o.cfg.suites;
    auto start = std::chrono::steady_clock::now();
    run_suites(session, o.cfg.suites, report);
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    emit(report, o.cfg);
    return report.failure_count() == 0 ? 0 : 1;
}

int run_table(CommonOpts& o) {
    Session session(o.cfg);
    Report report;
    report.n = o.cfg.n;
    report.m = o.cfg.m;
    report.lambda_exp = o.cfg.lambda_exp;
    report.mu = o.cfg.mu_text;
    report.window = o.cfg.window;
    auto start = std::chrono::steady_clock::now();
    fill_structure_table(session, report);
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    emit(report, o.cfg);
    return 0;
}

int run_eval(CommonOpts& o, const std::string& map, const std::string& expr) {
    Session session(o.cfg);
    std::string text = apply_structure_map(session, map, expr);
    if (o.cfg.out.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(o.cfg.out, std::ios::binary);
        f << text << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quantum-group / Galois-object verification"};
    app.require_subcommand(1);

    CommonOpts vo, to, eo;
    std::string eval_map, eval_expr;

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify, vo);
    std::string suite_help = "comma list of suites or labels (default: all); suites:";
    for (const auto& name : suite_names()) suite_help += " " + name;
    verify->add_option("--suite", vo.suite_list, suite_help);

    CLI::App* table = app.add_subcommand("table", "print the derived structure table");
    add_common(table, to);

    CLI::App* eval = app.add_subcommand("eval", "apply a named structure map to a literal");
    add_common(eval, eo);
    std::string map_help = "structure map name, one of:";
    for (const auto& name : structure_map_names()) map_help += " " + name;
    eval->add_option("expr", eval_expr, "element literal")->required();
    eval->add_option("map", eval_map, map_help)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return run_verify(vo);
        if (table->parsed()) return run_table(to);
        if (eval->parsed()) return run_eval(eo, eval_map, eval_expr);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const SolverError& e) {
        std::cerr << "solver inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
