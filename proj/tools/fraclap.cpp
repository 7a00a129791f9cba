// Command-line front end: radial profiles, cross-method comparisons, the
// point-source asymptote table, and a self-test suite. Emits CSV or JSON
// for external plotting.
//
// Exit codes: 0 success, 1 failed self-test, 2 evaluator error,
// 64 invalid flags or parameters.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fraclap/dequad.hpp"
#include "fraclap/hankel.hpp"
#include "fraclap/mellin.hpp"
#include "fraclap/model.hpp"
#include "fraclap/specfun.hpp"

namespace fl = fraclap;
namespace md = fraclap::model;
using nlohmann::json;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct CliOptions {
    double alpha = 1.0;
    double sigma = 1.0;
    double q = 1.0;
    double L = 1.0;
    double D = 1.0;
    double rmin = 0.0;  // 0 means "0.05 * L" after L is known
    double rmax = 0.0;  // 0 means "20 * L"
    int points = 200;
    std::string methods = "full_quadrature";
    double tol = 1e-6;
    std::string format = "csv";
    std::string output = "-";
};

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::optional<md::SolveMethod> parse_method(const std::string& name) {
    if (name == "integer_closed") return md::SolveMethod::integer_closed;
    if (name == "full_quadrature") return md::SolveMethod::full_quadrature;
    if (name == "ring") return md::SolveMethod::ring;
    if (name == "point_asymptotic") return md::SolveMethod::point_asymptotic;
    if (name == "tail_asymptotic") return md::SolveMethod::tail_asymptotic;
    if (name == "hfun") return md::SolveMethod::hfun;
    return std::nullopt;
}

const char* method_name(md::SolveMethod m) {
    switch (m) {
        case md::SolveMethod::integer_closed: return "integer_closed";
        case md::SolveMethod::full_quadrature: return "full_quadrature";
        case md::SolveMethod::ring: return "ring";
        case md::SolveMethod::point_asymptotic: return "point_asymptotic";
        case md::SolveMethod::tail_asymptotic: return "tail_asymptotic";
        default: return "hfun";
    }
}

bool method_has_err(md::SolveMethod m) {
    return m == md::SolveMethod::full_quadrature || m == md::SolveMethod::ring ||
           m == md::SolveMethod::point_asymptotic;
}

std::vector<md::SolveMethod> parse_methods(const std::string& list) {
    std::vector<md::SolveMethod> out;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        const auto m = parse_method(tok);
        if (!m) throw std::invalid_argument("unknown method '" + tok + "'");
        out.push_back(*m);
    }
    return out;
}

int env_threads() {
    const char* v = std::getenv("FRACLAP_THREADS");
    if (!v) return 0; // auto
    return std::atoi(v);
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, double>> summary; // optional trailer
};

json config_json(const std::string& command, const CliOptions& o) {
    return json{{"command", command}, {"alpha", o.alpha},   {"sigma", o.sigma},
                {"q", o.q},           {"L", o.L},           {"D", o.D},
                {"rmin", o.rmin},     {"rmax", o.rmax},     {"points", o.points},
                {"methods", o.methods}, {"tol", o.tol},     {"format", o.format},
                {"output", o.output}};
}

int emit(const Table& t, const std::string& command, const CliOptions& o) {
    std::ostringstream body;
    if (o.format == "csv") {
        for (size_t i = 0; i < t.columns.size(); ++i)
            body << (i ? "," : "") << t.columns[i];
        body << "\n";
        for (const auto& row : t.rows) {
            for (size_t i = 0; i < row.size(); ++i)
                body << (i ? "," : "") << format_double(row[i]);
            body << "\n";
        }
        for (const auto& [k, v] : t.summary) body << "# " << k << " = " << format_double(v) << "\n";
    } else {
        json rows = json::array();
        for (const auto& row : t.rows) rows.push_back(row);
        json doc{{"config", config_json(command, o)}, {"columns", t.columns}, {"rows", rows}};
        for (const auto& [k, v] : t.summary) doc["summary"][k] = v;
        body << doc.dump(2) << "\n";
    }
    if (o.output == "-" || o.output.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(o.output);
        if (!f) {
            std::cerr << "error: cannot open output file '" << o.output << "'\n";
            return 2;
        }
        f << body.str();
    }
    return 0;
}

void resolve_grid(CliOptions& o) {
    if (o.rmin == 0.0) o.rmin = 0.05 * o.L;
    if (o.rmax == 0.0) o.rmax = 20.0 * o.L;
    if (!(o.rmin > 0.0) || !(o.rmin < o.rmax))
        throw std::invalid_argument("need 0 < rmin < rmax");
    if (o.points < 2) throw std::invalid_argument("need at least two grid points");
}

int cmd_profile(CliOptions o) {
    resolve_grid(o);
    const auto methods = parse_methods(o.methods);
    if (methods.empty()) throw std::invalid_argument("no methods requested");
    const md::ModelParams params(o.sigma, o.q, o.D, o.L, o.alpha);

    Table t;
    t.columns.push_back("r");
    std::vector<md::RadialProfile> profiles;
    for (const auto m : methods) {
        profiles.push_back(md::profile(params, m, o.rmin, o.rmax, o.points, env_threads()));
        t.columns.push_back(method_name(m));
        if (method_has_err(m)) t.columns.push_back(std::string("err_") + method_name(m));
    }
    for (int i = 0; i < o.points; ++i) {
        std::vector<double> row{profiles[0].samples[i].r};
        for (size_t m = 0; m < methods.size(); ++m) {
            row.push_back(profiles[m].samples[i].c);
            if (method_has_err(methods[m])) row.push_back(profiles[m].samples[i].err_est);
        }
        t.rows.push_back(std::move(row));
    }
    return emit(t, "profile", o);
}

int cmd_compare(CliOptions o) {
    resolve_grid(o);
    const auto methods = parse_methods(o.methods);
    if (methods.size() != 2)
        throw std::invalid_argument("compare needs exactly two methods");
    const md::ModelParams params(o.sigma, o.q, o.D, o.L, o.alpha);

    const auto pa = md::profile(params, methods[0], o.rmin, o.rmax, o.points, env_threads());
    const auto pb = md::profile(params, methods[1], o.rmin, o.rmax, o.points, env_threads());

    Table t;
    t.columns = {"r", method_name(methods[0]), method_name(methods[1]), "abs_diff",
                 "rel_diff"};
    double max_abs = 0.0;
    for (int i = 0; i < o.points; ++i) {
        const double a = pa.samples[i].c;
        const double b = pb.samples[i].c;
        const double ad = std::abs(a - b);
        const double scale = std::max(std::abs(a), std::abs(b));
        const double rd = (scale > 0.0) ? ad / scale : 0.0;
        max_abs = std::max(max_abs, ad);
        t.rows.push_back({pa.samples[i].r, a, b, ad, rd});
    }
    t.summary.emplace_back("max_abs_diff", max_abs);
    return emit(t, "compare", o);
}

int cmd_asymptote(CliOptions o) {
    resolve_grid(o);
    const md::ModelParams params(o.sigma, o.q, o.D, o.L, o.alpha);
    const auto pp =
        md::profile(params, md::SolveMethod::point_asymptotic, o.rmin, o.rmax, o.points,
                    env_threads());
    const auto pt = md::profile(params, md::SolveMethod::tail_asymptotic, o.rmin, o.rmax,
                                o.points, env_threads());
    Table t;
    t.columns = {"r", "point_asymptotic", "err_point_asymptotic", "tail_asymptotic",
                 "ratio"};
    for (int i = 0; i < o.points; ++i) {
        const double c = pp.samples[i].c;
        const double tail = pt.samples[i].c;
        t.rows.push_back({pp.samples[i].r, c, pp.samples[i].err_est, tail,
                          tail != 0.0 ? c / tail : 0.0});
    }
    return emit(t, "asymptote", o);
}

struct Check {
    const char* name;
    double err;
};

int cmd_selftest(double tol) {
    namespace sf = fl::specfun;
    namespace dq = fl::dequad;
    std::vector<Check> checks;

    {
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double x = 1e-3 * std::pow(50.0 / 1e-3, i / 49.0);
            const double w =
                x * (sf::k0(x) * sf::i1(x) + sf::i0(x) * sf::k1(x));
            worst = std::max(worst, std::abs(w - 1.0));
        }
        checks.push_back({"wronskian_identity", worst});
    }
    {
        const md::ModelParams p(1.0, 1.0, 1.0, 1.0, 1.0);
        double worst = 0.0;
        for (double r : {0.5, 1.0, 2.0, 5.0}) {
            const double got = md::solve_point(p, r).value;
            const double ref = sf::k0(std::sqrt(p.q()) * r);
            worst = std::max(worst, std::abs(got - ref) / ref);
        }
        checks.push_back({"k0_reduction", worst});
    }
    checks.push_back({"de_exponential",
                      std::abs(dq::de_semiinfinite([](double x) { return std::exp(-x); }).value - 1.0)});
    checks.push_back(
        {"de_algebraic",
         std::abs(dq::de_semiinfinite([](double x) { return 1.0 / (1.0 + x * x); }).value -
                  kPi / 2.0)});
    checks.push_back(
        {"de_endpoint_singular",
         std::abs(dq::de_finite([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0).value -
                  2.0)});
    checks.push_back(
        {"de_oscillatory_j0",
         std::abs(dq::de_oscillatory([](double) { return 1.0; }, dq::OscKernel::bessel_j0, 1.0)
                      .value -
                  1.0)});
    {
        std::vector<double> sums;
        double s = 0.0;
        for (int k = 0; k < 21; ++k) {
            s += ((k % 2) ? -1.0 : 1.0) / (2.0 * k + 1.0);
            sums.push_back(s);
        }
        checks.push_back({"wynn_leibniz",
                          std::abs(fl::hankel::wynn_epsilon(fl::hankel::PartialSumTable(sums)) -
                                   std::atan(1.0))});
    }
    {
        const auto r = fl::hankel::hankel_partitioned(
            [](double rho) { return rho / (rho * rho + 1.0); }, 1.0);
        checks.push_back({"hankel_k0", std::abs(r.value - sf::k0(1.0))});
    }
    checks.push_back(
        {"contour_reduction",
         std::abs(fl::mellin::hfun_point_solution(2.0, 1.0, 1.0,
                                                  fl::mellin::HfunStrategy::contour) -
                  sf::k0(1.0))});
    {
        const md::ModelParams p(1.0, 1.0, 1.0, 1.0, 0.9);
        const double got =
            fl::mellin::hfun_point_solution(1.8, 1.0, 2.0, fl::mellin::HfunStrategy::contour);
        checks.push_back(
            {"contour_vs_quadrature", std::abs(got - md::solve_point(p, 2.0).value)});
    }

    bool all_ok = true;
    for (const auto& c : checks) {
        const bool ok = c.err <= tol;
        all_ok = all_ok && ok;
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3e", c.err);
        std::cout << (ok ? "PASS " : "FAIL ") << c.name << " err=" << buf << "\n";
    }
    std::cout << (all_ok ? "selftest: all checks passed\n" : "selftest: FAILURES present\n");
    return all_ok ? 0 : 1;
}

void add_common_flags(CLI::App* cmd, CliOptions& o) {
    cmd->add_option("--alpha", o.alpha, "fractional order in (0, 1]");
    cmd->add_option("--sigma", o.sigma, "source intensity");
    cmd->add_option("--q", o.q, "elimination rate");
    cmd->add_option("--L", o.L, "source radius");
    cmd->add_option("--D", o.D, "diffusion constant (folded into sigma, q)");
    cmd->add_option("--rmin", o.rmin, "grid start (default 0.05 L)");
    cmd->add_option("--rmax", o.rmax, "grid end (default 20 L)");
    cmd->add_option("--points", o.points, "grid size");
    cmd->add_option("--methods", o.methods, "comma-separated method list");
    cmd->add_option("--tol", o.tol, "tolerance (selftest)");
    cmd->add_option("--format", o.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", o.output, "output path, '-' for stdout");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"steady-state radial profiles of a space-fractional "
                 "reaction-diffusion system"};
    app.require_subcommand(1);

    CliOptions opt;
    auto* profile_cmd = app.add_subcommand("profile", "tabulate solution methods on a grid");
    add_common_flags(profile_cmd, opt);
    auto* compare_cmd = app.add_subcommand("compare", "difference table of two methods");
    add_common_flags(compare_cmd, opt);
    auto* asym_cmd = app.add_subcommand("asymptote", "point solution against its algebraic tail");
    add_common_flags(asym_cmd, opt);
    auto* selftest_cmd = app.add_subcommand("selftest", "run the built-in identity suite");
    add_common_flags(selftest_cmd, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 64;
    }

    try {
        if (app.got_subcommand(profile_cmd)) return cmd_profile(opt);
        if (app.got_subcommand(compare_cmd)) return cmd_compare(opt);
        if (app.got_subcommand(asym_cmd)) return cmd_asymptote(opt);
        return cmd_selftest(opt.tol);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
