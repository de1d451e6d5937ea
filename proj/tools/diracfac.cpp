// Command-line front end: verify / enumerate / frac / evolve / heat / levy.
//
// Exit codes: 0 all checks pass, 1 a check or computation failed, 2 usage
// error.  All numeric output is serialized at 17 significant digits, so a
// fixed seed yields byte-identical reports.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "diracfac/diracfac.hpp"

namespace {

using namespace diracfac;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::fputs(payload.c_str(), stdout);
        if (payload.empty() || payload.back() != '\n') std::fputc('\n', stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << payload;
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

const CLI::Validator PowerOfTwo(
    [](std::string& value) -> std::string {
        const unsigned long long n = std::stoull(value);
        if (n == 0 || (n & (n - 1)) != 0) return "grid size must be a power of two";
        return {};
    },
    "POW2");

/// "gaussian" or "gaussian:sigma=S"
SpectralField parse_initial_data(const std::string& init, double length, std::size_t grid) {
    double sigma = 1.0;
    std::string kind = init;
    const std::size_t colon = init.find(':');
    if (colon != std::string::npos) {
        kind = init.substr(0, colon);
        const std::string params = init.substr(colon + 1);
        if (params.rfind("sigma=", 0) != 0)
            throw CLI::ValidationError("--init", "expected gaussian[:sigma=S]");
        sigma = std::stod(params.substr(6));
    }
    if (kind != "gaussian") throw CLI::ValidationError("--init", "unknown initial data: " + kind);
    return SpectralField::gaussian(length, grid, sigma);
}

struct CommonFlags {
    std::uint64_t seed = 42;
    std::string out;
    double tol = 0.0; // 0 = per-check defaults
};

int run_verify(const std::string& family, int n, int trials, const CommonFlags& flags) {
    const FamilyReport report =
        verify_family(family_from_string(family), n, trials, flags.seed, flags.tol);
    write_output(flags.out, report_to_json(report).dump());
    return report.passed ? kExitPass : kExitCheckFailed;
}

int run_enumerate(const CommonFlags& flags) {
    const TripleCatalog catalog = enumerate_triples(3);

    JsonValue counts = JsonValue::object();
    for (const auto& [name, value] : catalog.counts) counts.set(name, value);

    JsonValue triples = JsonValue::array();
    bool all_passed = true;
    for (const TripleCertificate& cert : catalog.triples) {
        JsonValue checks = JsonValue::array();
        for (const auto& [name, residual] : cert.checks) {
            JsonValue c = JsonValue::object();
            c.set("name", name);
            c.set("residual", residual);
            checks.push_back(std::move(c));
        }
        JsonValue matrices = JsonValue::array();
        for (const CMatrix& m : cert.matrices) matrices.push_back(matrix_to_json(m));
        JsonValue t = JsonValue::object();
        t.set("matrices", std::move(matrices));
        t.set("order", cert.order);
        t.set("checks", std::move(checks));
        t.set("passed", cert.passed);
        triples.push_back(std::move(t));
        all_passed = all_passed && cert.passed;
    }

    JsonValue doc = JsonValue::object();
    doc.set("order", 3);
    doc.set("search_space", catalog.search_space);
    doc.set("unital_candidates", catalog.candidates.size());
    doc.set("counts", std::move(counts));
    doc.set("triples", std::move(triples));
    write_output(flags.out, doc.dump());

    std::string summary = "triples:";
    for (const auto& [name, value] : catalog.counts)
        summary += " " + name + "=" + std::to_string(value);
    std::puts(summary.c_str());

    return (all_passed && !catalog.triples.empty()) ? kExitPass : kExitCheckFailed;
}

int run_frac(const std::string& kind_name, double a, double x, bool check_power,
             const CommonFlags& flags) {
    const OperatorKind kind = kind_name == "half" ? OperatorKind::half : OperatorKind::third;
    const OperatorMatrix op = assemble_operator(kind, a);

    // bare matrix schema without the flag; a wrapper with the check report
    // alongside it otherwise
    if (!check_power) {
        write_output(flags.out, matrix_to_json(evaluate_operator(op, x)).dump());
        return kExitPass;
    }

    JsonValue doc = JsonValue::object();
    doc.set("kind", kind_name);
    doc.set("a", a);
    doc.set("x", x);
    doc.set("matrix", matrix_to_json(evaluate_operator(op, x)));

    bool passed = true;
    if (check_power) {
        const std::vector<Rational> exponents = {Rational(0), Rational(1, 2), Rational(1),
                                                 Rational(2), Rational(37, 10)};
        const int n = kind == OperatorKind::half ? 2 : 3;
        std::size_t poles_hit = 0;
        const double err = operator_power_check(kind, a, n, exponents, &poles_hit);
        const double threshold = flags.tol > 0.0 ? std::max(flags.tol, 1e-15) : 1e-12;
        passed = err <= threshold;
        JsonValue exps = JsonValue::array();
        for (const Rational& r : exponents) exps.push_back(r.str());
        JsonValue pc = JsonValue::object();
        pc.set("n", n);
        pc.set("exponents", std::move(exps));
        pc.set("max_relative_error", err);
        pc.set("threshold", threshold);
        pc.set("pole_zero_terms", poles_hit);
        if (poles_hit > 0)
            pc.set("note", "denominator gamma poles mapped to exact zero coefficients");
        pc.set("passed", passed);
        doc.set("power_check", std::move(pc));
    }
    write_output(flags.out, doc.dump());
    return passed ? kExitPass : kExitCheckFailed;
}

int run_evolve(int n, double a, double t, const std::string& method_name, std::size_t grid,
               double length, const std::string& init, bool bch_scan, double scan_p,
               const CommonFlags& flags) {
    if (bch_scan) {
        std::vector<double> ts;
        for (int i = 0; i < 16; ++i) ts.push_back(1e-3 * std::pow(100.0, i / 15.0));
        const BchScanResult scan = bch_error_scan(n, a, scan_p, ts);
        std::string csv = "t,residual,slope\n";
        for (const auto& [tv, rv] : scan.residuals)
            csv += format_number(tv) + "," + format_number(rv) + "," + format_number(scan.slope) + "\n";
        write_output(flags.out, csv);
        const bool expect_cubic = a != 0.0 && scan_p != 0.0;
        return (!expect_cubic || (scan.slope >= 2.9 && scan.slope <= 3.1)) ? kExitPass
                                                                           : kExitCheckFailed;
    }

    const SpectralField f = parse_initial_data(init, length, grid);
    // The scalar-to-vector embedding is a modeling choice, so say so.
    std::fprintf(stderr, "note: all %d components initialized equal to the scalar initial data\n", n);
    const VectorSpectralField phi0 = VectorSpectralField::uniform(f, static_cast<std::size_t>(n));
    PropagatorSpec spec;
    spec.order = n;
    spec.a = a;
    spec.t = t;
    spec.method = method_name == "exact" ? PropagatorMethod::exact : PropagatorMethod::bch1;
    const VectorSpectralField phi = evolve(phi0, spec);

    std::string csv = "x,component,re,im\n";
    for (std::size_t c = 0; c < phi.order(); ++c) {
        const std::vector<Cx> values = phi.components[c].to_real_space();
        for (std::size_t j = 0; j < values.size(); ++j) {
            const double x = length * static_cast<double>(j) / static_cast<double>(values.size());
            csv += format_number(x) + "," + std::to_string(c) + "," + format_number(values[j].real()) +
                   "," + format_number(values[j].imag()) + "\n";
        }
    }
    write_output(flags.out, csv);
    return kExitPass;
}

int run_heat(int n, double k, double t, const std::string& solver, std::size_t grid, double length,
             const std::string& init, const CommonFlags& flags) {
    const SpectralField f = parse_initial_data(init, length, grid);
    const HeatProblem problem(n, k, f, t);

    SpectralField solution = solver == "levy" ? heat_solve_levy(problem) : heat_solve_fourier(problem);
    bool passed = true;
    if (solver == "both") {
        const double discrepancy = compare_heat_solvers(problem);
        const double threshold = flags.tol > 0.0 ? std::max(flags.tol, 1e-15) : 1e-4;
        passed = discrepancy <= threshold;
        JsonValue doc = JsonValue::object();
        doc.set("relative_l2_discrepancy", discrepancy);
        doc.set("threshold", threshold);
        doc.set("passed", passed);
        std::puts(doc.dump().c_str());
    }

    const std::vector<Cx> values = solution.to_real_space();
    std::string csv = "x,re,im\n";
    for (std::size_t j = 0; j < values.size(); ++j) {
        const double x = length * static_cast<double>(j) / static_cast<double>(values.size());
        csv += format_number(x) + "," + format_number(values[j].real()) + "," +
               format_number(values[j].imag()) + "\n";
    }
    write_output(flags.out, csv);
    return passed ? kExitPass : kExitCheckFailed;
}

int run_levy(const std::string& nu_text, bool check_identity, double c, double pmin, double pmax,
             int points, const CommonFlags& flags) {
    Rational nu;
    try {
        const std::size_t slash = nu_text.find('/');
        nu = slash == std::string::npos
                 ? Rational(std::stoll(nu_text))
                 : Rational(std::stoll(nu_text.substr(0, slash)),
                            std::stoll(nu_text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--nu", "expected a rational like 1/3");
    }
    if (!(Rational(0) < nu && nu < Rational(1)))
        throw CLI::ValidationError("--nu", "must lie strictly in (0,1)");

    JsonValue doc = JsonValue::object();
    doc.set("nu", nu.str());
    bool passed = true;
    if (check_identity) {
        std::vector<double> grid;
        for (int i = 0; i < points; ++i)
            grid.push_back(pmin * std::pow(pmax / pmin, points == 1 ? 0.0 : i / double(points - 1)));
        const double err = levy_identity_check(nu, c, grid);
        const double threshold = flags.tol > 0.0 ? std::max(flags.tol, 1e-15) : 1e-6;
        passed = err <= threshold;
        doc.set("c", c);
        doc.set("p_min", pmin);
        doc.set("p_max", pmax);
        doc.set("points", points);
        doc.set("max_error", err);
        doc.set("threshold", threshold);
        doc.set("passed", passed);
    }
    write_output(flags.out, doc.dump());
    return passed ? kExitPass : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Root-of-unity matrix factorizations, fractional operators, and the "
                 "generalized heat equation"};
    app.require_subcommand(1);

    CommonFlags flags;
    app.add_option("--seed", flags.seed, "Seed for randomized checks")->capture_default_str();
    app.add_option("--out", flags.out, "Write the report to a file instead of stdout");
    app.add_option("--tol", flags.tol, "Override default tolerances (floor 1e-15)");
    app.fallthrough();

    // verify
    auto* verify = app.add_subcommand("verify", "Verify the identities of one matrix family");
    std::string family;
    int family_n = 3;
    int trials = 100;
    verify->add_option("--family", family, "Family to verify")
        ->required()
        ->check(CLI::IsMember({"sigma", "quaternion", "lambda", "phi", "chi", "tau"}));
    verify->add_option("--n", family_n, "Order for the tau family (word identities cap the order at 8)")
        ->check(CLI::Range(2, 8));
    verify->add_option("--trials", trials, "Random coefficient draws")->check(CLI::PositiveNumber);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate all valid cubic triples");
    int enum_n = 3;
    enumerate->add_option("--n", enum_n, "Factorization order (cubic catalog only)")
        ->check(CLI::IsMember({3}));

    // frac
    auto* frac = app.add_subcommand("frac", "Evaluate a fractional root operator matrix");
    std::string frac_kind;
    double frac_a = 0.0, frac_x = 1.0;
    bool check_power = false;
    frac->add_option("--kind", frac_kind, "half (O_1/2) or third (O_1/3)")
        ->required()
        ->check(CLI::IsMember({"half", "third"}));
    frac->add_option("--a", frac_a, "Shift constant a >= 0")->check(CLI::NonNegativeNumber);
    frac->add_option("--x", frac_x, "Evaluation point x > 0")->check(CLI::PositiveNumber);
    frac->add_flag("--check-power", check_power, "Run the operator power check");

    // evolve
    auto* evolve_cmd = app.add_subcommand("evolve", "Evolve the linearized fractional system");
    int ev_n = 2;
    double ev_a = 0.0, ev_t = 0.0, ev_length = 20.0, ev_p = 1.0;
    std::size_t ev_grid = 256;
    std::string ev_method = "exact", ev_init = "gaussian:sigma=1";
    bool bch_scan = false;
    evolve_cmd->add_option("--n", ev_n, "Factorization order n >= 2")->check(CLI::Range(2, 16));
    evolve_cmd->add_option("--a", ev_a, "Coefficient a");
    evolve_cmd->add_option("--t", ev_t, "Evolution time");
    evolve_cmd->add_option("--method", ev_method, "exact or bch1")
        ->check(CLI::IsMember({"exact", "bch1"}));
    evolve_cmd->add_option("--grid", ev_grid, "Grid size (power of two)")->check(PowerOfTwo);
    evolve_cmd->add_option("--length", ev_length, "Period L")->check(CLI::PositiveNumber);
    evolve_cmd->add_option("--init", ev_init, "Initial data, gaussian[:sigma=S]");
    evolve_cmd->add_flag("--bch-scan", bch_scan, "Emit the BCH residual scan instead of a snapshot");
    evolve_cmd->add_option("--p", ev_p, "Mode frequency for --bch-scan");

    // heat
    auto* heat = app.add_subcommand("heat", "Solve the generalized heat equation");
    int heat_n = 2;
    double heat_k = 0.0, heat_t = 0.0, heat_length = 20.0;
    std::size_t heat_grid = 256;
    std::string heat_solver = "both", heat_init = "gaussian:sigma=1";
    heat->add_option("--n", heat_n, "Root order n >= 1")->check(CLI::Range(1, 16));
    heat->add_option("--k", heat_k, "Shift constant k >= 0")->check(CLI::NonNegativeNumber);
    heat->add_option("--t", heat_t, "Time t >= 0")->check(CLI::NonNegativeNumber);
    heat->add_option("--solver", heat_solver, "levy, fourier, or both")
        ->check(CLI::IsMember({"levy", "fourier", "both"}));
    heat->add_option("--grid", heat_grid, "Grid size (power of two)")->check(PowerOfTwo);
    heat->add_option("--length", heat_length, "Period L")->check(CLI::PositiveNumber);
    heat->add_option("--init", heat_init, "Initial data, gaussian[:sigma=S]");

    // levy
    auto* levy = app.add_subcommand("levy", "One-sided stable density checks");
    std::string levy_nu = "1/2";
    bool check_identity = false;
    double levy_c = 1.0, levy_pmin = 0.1, levy_pmax = 10.0;
    int levy_points = 25;
    levy->add_option("--nu", levy_nu, "Index nu in (0,1), e.g. 1/3")->required();
    levy->add_flag("--check-identity", check_identity, "Check the exponential-transform identity");
    levy->add_option("--c", levy_c, "Identity constant c > 0")->check(CLI::PositiveNumber);
    levy->add_option("--pmin", levy_pmin, "Grid lower end")->check(CLI::PositiveNumber);
    levy->add_option("--pmax", levy_pmax, "Grid upper end")->check(CLI::PositiveNumber);
    levy->add_option("--points", levy_points, "Grid points")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) return run_verify(family, family_n, trials, flags);
        if (enumerate->parsed()) return run_enumerate(flags);
        if (frac->parsed()) return run_frac(frac_kind, frac_a, frac_x, check_power, flags);
        if (evolve_cmd->parsed())
            return run_evolve(ev_n, ev_a, ev_t, ev_method, ev_grid, ev_length, ev_init, bch_scan,
                              ev_p, flags);
        if (heat->parsed())
            return run_heat(heat_n, heat_k, heat_t, heat_solver, heat_grid, heat_length, heat_init,
                            flags);
        if (levy->parsed())
            return run_levy(levy_nu, check_identity, levy_c, levy_pmin, levy_pmax, levy_points, flags);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
