// Command-line surface: generate combinatorial-line hypergraphs, solve for
// exact transversal numbers and weak colorings, build certified polytope
// realizations, re-check stored certificates, and export results.
//
// Output conventions:
//   - result files (--out) are deterministic for a fixed (command, config,
//     seed): no timestamps or timings inside
//   - a one-line-per-fact human summary goes to stderr
//   - one JSON run manifest (config echo, outcome, timings) goes to stdout
//   - exit codes: 0 success, 1 certified failure (an exact check refuted the
//     goal: precision exhausted, retries exhausted, unsupported epsilon,
//     certificate mismatch, impossible coloring), 2 usage/parse/cap errors

#include "CLI11.hpp"

#include "hjpoly/certify.hpp"
#include "hjpoly/cover.hpp"
#include "hjpoly/errors.hpp"
#include "hjpoly/hj.hpp"
#include "hjpoly/io.hpp"
#include "hjpoly/pipeline.hpp"
#include "hjpoly/realize.hpp"

#include <chrono>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using hjpoly::Json;

constexpr const char* kToolVersion = "1.0.0";

struct CommonFlags {
    int d = 5;
    int n = 2;
    std::uint64_t seed = 1;
    std::string eps;
    unsigned precision = 64;
    bool full_hull = false;
    unsigned threads = 1;
    std::string out;
    std::string format = "off";
    unsigned digits = 20;
    double time_budget = 0.0;  // seconds; 0 = unlimited
    std::string in;
    std::string mode = "tau";
    std::string strategy = "exact";
};

hjpoly::Deadline budget_deadline(double seconds) {
    if (seconds <= 0.0) return hjpoly::Deadline::never();
    return hjpoly::Deadline::after(std::chrono::milliseconds(
        static_cast<long long>(seconds * 1000.0)));
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::invalid_argument("cannot open output file: " + path);
    os << content;
    if (!os) throw std::invalid_argument("failed writing output file: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

hjpoly::RealizationFile load_realization(const std::string& path) {
    return hjpoly::realization_file_from_json(Json::parse(read_file(path)));
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

Json tau_fragment(const hjpoly::TauResult& tau) {
    Json js;
    js["bounds"] = Json::array({tau.lower, tau.upper});
    js["exact"] = tau.exact;
    js["witness"] = tau.witness.vertices;
    return js;
}

// ---- commands --------------------------------------------------------------

Json cmd_hj(const CommonFlags& f) {
    const auto hj = hjpoly::hj_hypergraph(f.d, f.n);
    write_file(f.out, hjpoly::dump_json(hjpoly::to_json(hjpoly::hypergraph_file(hj))));
    std::cerr << "hypergraph (" << f.d << ", " << f.n << "): " << hj.graph.vertex_count
              << " vertices, " << hj.graph.edges.size() << " lines -> " << f.out << "\n";
    Json outcome;
    outcome["vertex_count"] = hj.graph.vertex_count;
    outcome["edge_count"] = hj.graph.edges.size();
    return outcome;
}

Json cmd_solve(const CommonFlags& f) {
    const auto file = hjpoly::hypergraph_file_from_json(Json::parse(read_file(f.in)));
    Json outcome;
    if (f.mode == "tau") {
        hjpoly::TauResult tau;
        if (f.strategy == "exact")
            tau = hjpoly::tau_exact(file.graph, budget_deadline(f.time_budget));
        else
            tau = hjpoly::tau_bruteforce(file.graph);
        write_file(f.out, hjpoly::dump_json(hjpoly::tau_solution_json(tau)));
        std::cerr << "transversal number: bounds [" << tau.lower << ", " << tau.upper << "]"
                  << (tau.exact ? " (exact)" : " (budget hit, bounds only)") << " -> " << f.out
                  << "\n";
        outcome["tau"] = tau_fragment(tau);
    } else {
        hjpoly::ChiResult chi;
        if (f.strategy == "exact")
            chi = hjpoly::chi_weak(file.graph);
        else
            chi = hjpoly::chi_bruteforce(file.graph);
        write_file(f.out, hjpoly::dump_json(hjpoly::chi_solution_json(chi)));
        std::cerr << "weak chromatic number: " << chi.chi << " -> " << f.out << "\n";
        outcome["chi"] = chi.chi;
    }
    return outcome;
}

hjpoly::DrawingConfig drawing_config(const CommonFlags& f) {
    hjpoly::DrawingConfig cfg;
    cfg.d = f.d;
    cfg.n = f.n;
    cfg.seed = f.seed;
    cfg.precision_bits = f.precision;
    if (!f.eps.empty()) cfg.epsilon_override = hjpoly::Rat::from_string(f.eps);
    return cfg;
}

Json cmd_build(const CommonFlags& f) {
    const auto res = hjpoly::realize_pipeline(drawing_config(f));
    hjpoly::RealizationFile file{res.realization, res.certificates};
    write_file(f.out, hjpoly::dump_json(hjpoly::to_json(file)));
    std::cerr << "realization (" << f.d << ", " << f.n << ") seed " << f.seed << ": "
              << res.realization.coordinates.size() << " points in R^" << f.d << ", "
              << res.realization.lines.size() << " line facet certificates, "
              << res.certificates.vertices.size() << " vertex certificates, precision "
              << res.realization.precision_bits << " bits -> " << f.out << "\n";
    Json outcome;
    outcome["points"] = res.realization.coordinates.size();
    outcome["facet_certificates"] = res.certificates.facets.size();
    outcome["vertex_certificates"] = res.certificates.vertices.size();
    outcome["precision_bits"] = res.realization.precision_bits;
    outcome["snap_attempts"] = res.snap_attempts;
    outcome["epsilon"] = res.realization.epsilon.str();
    return outcome;
}

Json cmd_certify(const CommonFlags& f) {
    const auto file = load_realization(f.in);
    if (!file.certificates)
        throw std::invalid_argument("realization file carries no certificates to check");
    hjpoly::recheck_bundle(file.realization, *file.certificates);
    std::cerr << "stored certificates verified: " << file.certificates->facets.size()
              << " facet + " << file.certificates->vertices.size() << " vertex certificates\n";
    Json outcome;
    outcome["facet_certificates"] = file.certificates->facets.size();
    outcome["vertex_certificates"] = file.certificates->vertices.size();
    outcome["verified"] = true;
    if (f.full_hull) {
        const auto hj = hjpoly::hj_hypergraph(file.realization.d, file.realization.n);
        hjpoly::CertifyOptions opts;
        opts.full_hull = true;
        opts.threads = f.threads;
        opts.deadline = budget_deadline(f.time_budget);
        const auto tc = hjpoly::certify_theorem(file.realization, hj, opts);
        std::cerr << "full hull: " << tc.report.hull->facets.edges.size() << " facets, simplicial: "
                  << (tc.report.hull->simplicial ? "yes" : "no") << ", all lines contained: "
                  << (*tc.report.lines_contained ? "yes" : "no") << "\n";
        outcome["hull_facets"] = tc.report.hull->facets.edges.size();
        outcome["simplicial"] = tc.report.hull->simplicial;
        outcome["lines_contained"] = *tc.report.lines_contained;
    }
    return outcome;
}

Json report_json(const CommonFlags& f, const hjpoly::HJHypergraph& hj,
                 const hjpoly::TauResult& tau, const hjpoly::Rat& rho,
                 const std::optional<hjpoly::ChiResult>& chi,
                 const hjpoly::BuildResult& res, const hjpoly::TheoremCheck& tc) {
    Json js;
    js["d"] = f.d;
    js["n"] = f.n;
    js["seed"] = f.seed;
    js["epsilon"] = res.realization.epsilon.str();
    js["precision_bits"] = res.realization.precision_bits;
    js["vertex_count"] = hj.graph.vertex_count;
    js["line_count"] = hj.graph.edges.size();
    js["tau"] = tau_fragment(tau);
    js["rho"] = rho.str();
    if (chi) {
        js["chi"] = chi->chi;
        // tau / |V| <= (chi - 1) / chi as exact rationals
        const hjpoly::Rat lhs(static_cast<long>(tau.upper), static_cast<long>(hj.graph.vertex_count));
        const hjpoly::Rat rhs(static_cast<long>(chi->chi - 1), static_cast<long>(chi->chi));
        js["coloring_bound_holds"] = tau.exact && lhs <= rhs;
    }
    Json certs;
    certs["lines_certified"] = tc.bundle.facets.size();
    certs["line_count"] = hj.graph.edges.size();
    certs["vertex_certificates"] = tc.bundle.vertices.size();
    certs["all_lines_are_facets"] = tc.report.all_lines_are_facets;
    certs["convex_position"] = tc.report.convex_position;
    bool slack_positive = true;
    for (const auto& fc : tc.bundle.facets)
        slack_positive = slack_positive && fc.min_slack.sign() > 0;
    certs["min_slack_positive"] = slack_positive;
    js["certificates"] = std::move(certs);
    if (tc.report.hull) {
        Json hull;
        hull["facet_count"] = tc.report.hull->facets.edges.size();
        hull["simplicial"] = tc.report.hull->simplicial;
        hull["lines_contained"] = *tc.report.lines_contained;
        hull["tau_facets"] = tau_fragment(*tc.report.tau_facets);
        hull["tau_monotone"] = tc.report.tau_facets->lower >= tau.upper ||
                               !tc.report.tau_facets->exact || !tau.exact;
        js["full_hull"] = std::move(hull);
    }
    return js;
}

Json cmd_report(const CommonFlags& f) {
    if (f.d < 5)
        throw std::invalid_argument("report: the construction needs dimension d >= 5");
    const auto hj = hjpoly::hj_hypergraph(f.d, f.n);
    const auto deadline = budget_deadline(f.time_budget);
    const auto tau = hjpoly::tau_exact(hj.graph, deadline);
    const auto rho_value = hjpoly::rho(hj.graph);
    std::optional<hjpoly::ChiResult> chi;
    if (hj.graph.vertex_count <= 100) chi = hjpoly::chi_weak(hj.graph);

    const auto res = hjpoly::realize_pipeline(drawing_config(f));
    hjpoly::CertifyOptions opts;
    opts.full_hull = f.full_hull;
    opts.threads = f.threads;
    opts.deadline = deadline;
    const auto tc = hjpoly::certify_theorem(res.realization, hj, opts);

    std::cerr << "hypergraph (" << f.d << ", " << f.n << "): " << hj.graph.vertex_count
              << " vertices, " << hj.graph.edges.size() << " lines\n";
    std::cerr << "tau = " << (tau.exact ? std::to_string(tau.upper)
                                        : "[" + std::to_string(tau.lower) + ", " +
                                              std::to_string(tau.upper) + "]")
              << (tau.exact ? " (exact)" : " (bounds)") << ", rho = " << rho_value.str() << "\n";
    if (chi) {
        const hjpoly::Rat lhs(static_cast<long>(tau.upper),
                              static_cast<long>(hj.graph.vertex_count));
        const hjpoly::Rat rhs(static_cast<long>(chi->chi - 1), static_cast<long>(chi->chi));
        std::cerr << "chi = " << chi->chi << "; coloring bound " << lhs.str()
                  << " <= " << rhs.str() << (lhs <= rhs ? " holds" : " FAILS") << "\n";
    }
    std::cerr << tc.bundle.facets.size() << "/" << hj.graph.edges.size()
              << " lines certified as facets\n";
    std::cerr << tc.bundle.vertices.size() << "/" << hj.graph.vertex_count
              << " vertex certificates pass (convex position)\n";
    if (tc.report.hull) {
        std::cerr << "full hull: " << tc.report.hull->facets.edges.size()
                  << " facets, simplicial: " << (tc.report.hull->simplicial ? "yes" : "no")
                  << ", lines contained: " << (*tc.report.lines_contained ? "yes" : "no") << "\n";
        std::cerr << "tau(hull) bounds [" << tc.report.tau_facets->lower << ", "
                  << tc.report.tau_facets->upper << "] >= tau(lines) " << tau.upper << "\n";
    }

    const Json js = report_json(f, hj, tau, rho_value, chi, res, tc);
    if (!f.out.empty()) {
        write_file(f.out, hjpoly::dump_json(js));
        std::cerr << "report -> " << f.out << "\n";
    }
    Json outcome;
    outcome["report"] = js;
    return outcome;
}

Json cmd_export(const CommonFlags& f) {
    const auto file = load_realization(f.in);
    std::string payload;
    if (f.format == "off")
        payload = hjpoly::off_export(file.realization, f.digits);
    else
        payload = hjpoly::dump_json(hjpoly::to_json(file));
    write_file(f.out, payload);
    std::cerr << "export (" << f.format << "): " << file.realization.coordinates.size()
              << " points -> " << f.out << "\n";
    Json outcome;
    outcome["format"] = f.format;
    outcome["points"] = file.realization.coordinates.size();
    return outcome;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const hjpoly::PrecisionExhaustedError*>(&e) ||
        dynamic_cast<const hjpoly::RetriesExhaustedError*>(&e) ||
        dynamic_cast<const hjpoly::NotSupportingError*>(&e) ||
        dynamic_cast<const hjpoly::CertificateError*>(&e) ||
        dynamic_cast<const hjpoly::DuplicatePlanarPointsError*>(&e) ||
        dynamic_cast<const hjpoly::SizeOneEdgeError*>(&e) ||
        dynamic_cast<const hjpoly::AffinelyDependentError*>(&e))
        return 1;
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorial-line hypergraphs, transversal solvers, and certified "
                 "polytope realizations"};
    app.require_subcommand(1);
    CommonFlags f;

    auto* hj = app.add_subcommand("hj", "generate a combinatorial-line hypergraph as JSON");
    hj->add_option("-d", f.d, "alphabet size (>= 2)")->required();
    hj->add_option("-n", f.n, "word length (>= 1)")->required();
    hj->add_option("--out", f.out, "output hypergraph JSON path")->required();

    auto* solve = app.add_subcommand("solve", "solve a hypergraph file for tau or chi");
    solve->add_option("input", f.in, "hypergraph JSON path")->required();
    solve->add_option("--mode", f.mode, "tau | chi")
        ->check(CLI::IsMember({"tau", "chi"}));
    solve->add_option("--strategy", f.strategy, "exact | bruteforce")
        ->check(CLI::IsMember({"exact", "bruteforce"}));
    solve->add_option("--time-budget", f.time_budget, "seconds for the exact tau search");
    solve->add_option("--out", f.out, "output solution JSON path")->required();

    auto* build = app.add_subcommand("build", "run the certified realization pipeline");
    build->add_option("-d", f.d, "dimension / alphabet size (>= 5)")->required();
    build->add_option("-n", f.n, "word length")->required();
    build->add_option("--seed", f.seed, "deterministic seed for all drawn values");
    build->add_option("--eps", f.eps, "rational perturbation size override, e.g. 3/32");
    build->add_option("--precision", f.precision, "starting snap precision in bits (>= 16)");
    build->add_option("--out", f.out, "output realization JSON path")->required();

    auto* certify = app.add_subcommand("certify", "re-check the certificates stored in a file");
    certify->add_option("input", f.in, "realization JSON path")->required();
    certify->add_flag("--full-hull", f.full_hull, "also enumerate all hull facets");
    certify->add_option("--threads", f.threads, "worker threads for hull enumeration");
    certify->add_option("--time-budget", f.time_budget, "seconds for transversal solves");

    auto* report = app.add_subcommand("report",
                                      "build, certify, and summarize one instance end to end");
    report->add_option("-d", f.d, "dimension / alphabet size (>= 5)")->required();
    report->add_option("-n", f.n, "word length")->required();
    report->add_option("--seed", f.seed, "deterministic seed for all drawn values");
    report->add_option("--eps", f.eps, "rational perturbation size override");
    report->add_option("--precision", f.precision, "starting snap precision in bits");
    report->add_flag("--full-hull", f.full_hull, "enumerate all hull facets");
    report->add_option("--threads", f.threads, "worker threads for hull enumeration");
    report->add_option("--time-budget", f.time_budget, "seconds for transversal solves");
    report->add_option("--out", f.out, "optional report JSON path");

    auto* exp = app.add_subcommand("export", "convert a realization file to OFF or JSON");
    exp->add_option("input", f.in, "realization JSON path")->required();
    exp->add_option("--format", f.format, "off | json")
        ->check(CLI::IsMember({"off", "json"}));
    exp->add_option("--digits", f.digits, "fractional digits for the lossy OFF export");
    exp->add_option("--out", f.out, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Json manifest;
    manifest["versions"] = Json{{"tool", kToolVersion}, {"gmp", gmp_version}};
    Json config;
    config["d"] = f.d;
    config["n"] = f.n;
    config["seed"] = f.seed;
    config["precision"] = f.precision;
    config["full_hull"] = f.full_hull;
    config["threads"] = f.threads;
    config["mode"] = f.mode;
    config["strategy"] = f.strategy;
    config["format"] = f.format;
    config["digits"] = f.digits;
    config["time_budget"] = f.time_budget;
    if (!f.eps.empty()) config["eps"] = f.eps;
    if (!f.in.empty()) config["input"] = f.in;
    if (!f.out.empty()) config["out"] = f.out;
    manifest["config"] = std::move(config);

    const Stopwatch total;
    int rc = 0;
    try {
        Json outcome;
        if (hj->parsed()) {
            manifest["command"] = "hj";
            outcome = cmd_hj(f);
        } else if (solve->parsed()) {
            manifest["command"] = "solve";
            outcome = cmd_solve(f);
        } else if (build->parsed()) {
            manifest["command"] = "build";
            outcome = cmd_build(f);
        } else if (certify->parsed()) {
            manifest["command"] = "certify";
            outcome = cmd_certify(f);
        } else if (report->parsed()) {
            manifest["command"] = "report";
            outcome = cmd_report(f);
        } else if (exp->parsed()) {
            manifest["command"] = "export";
            outcome = cmd_export(f);
        }
        manifest["outcome"] = Json{{"status", "ok"}, {"detail", std::move(outcome)}};
    } catch (const std::exception& e) {
        rc = exit_code_for(e);
        manifest["outcome"] = Json{{"status", rc == 1 ? "certified-failure" : "error"},
                                   {"message", e.what()}};
        std::cerr << "error: " << e.what() << "\n";
    }
    manifest["timings_ms"] = Json{{"total", total.ms()}};
    std::cout << hjpoly::dump_json(manifest);
    return rc;
}
