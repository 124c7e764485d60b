// Command-line front end: emits figure-ready CSV/JSON for the density
// matrix, photon statistics, channel capacity, and phase-space
// distributions, and runs the oracle cross-check suite (`verify`).

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "secst/errors.hpp"
#include "secst/information.hpp"
#include "secst/oracle.hpp"
#include "secst/parallel.hpp"
#include "secst/phase_space.hpp"
#include "secst/special_functions.hpp"
#include "secst/state.hpp"
#include "secst/statistics.hpp"
#include "secst/version.hpp"

namespace {

using json = nlohmann::json;
using secst::Complex;
using secst::SecstParams;

enum ExitCode : int {
    kOk = 0,
    kValidationError = 1,
    kNumericalError = 2,
    kIoError = 3,
};

// Shortest round-trip decimal form; locale-independent and byte-stable.
std::string fmt(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string fmt(int v) { return std::to_string(v); }

struct OutputOptions {
    std::string format = "csv";
    std::string path = "-";
    bool strict = false;
};

void add_output_options(CLI::App* sub, OutputOptions& out) {
    sub->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("-o,--output", out.path, "Output file path, '-' for stdout")
        ->capture_default_str();
    sub->add_flag("--strict", out.strict,
                  "Promote truncation/convergence warnings to exit code 2");
}

struct ParamOptions {
    double alpha_re = 0.0;
    double alpha_im = 0.0;
    int m = 0;
    double nbar = 0.0;

    SecstParams params() const { return SecstParams(Complex(alpha_re, alpha_im), m, nbar); }
};

void add_param_options(CLI::App* sub, ParamOptions& p) {
    sub->add_option("--alpha-re", p.alpha_re, "Re(alpha)")->capture_default_str();
    sub->add_option("--alpha-im", p.alpha_im, "Im(alpha)")->capture_default_str();
    sub->add_option("--m", p.m, "Number of photon additions")->capture_default_str();
    sub->add_option("--nbar", p.nbar, "Thermal mean photon number")->capture_default_str();
}

// One result artifact: a flat table plus config and diagnostics metadata.
struct Artifact {
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    json diagnostics = json::object();

    void cfg(const std::string& k, const std::string& v) { config.emplace_back(k, v); }
    void cfg(const std::string& k, double v) { config.emplace_back(k, fmt(v)); }
    void cfg(const std::string& k, int v) { config.emplace_back(k, fmt(v)); }

    std::string to_csv() const {
        std::ostringstream os;
        os << "# tool=secst version=" << secst::kVersion << "\n";
        for (const auto& [k, v] : config) os << "# " << k << "=" << v << "\n";
        for (std::size_t i = 0; i < columns.size(); ++i)
            os << columns[i] << (i + 1 < columns.size() ? "," : "");
        os << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                os << row[i] << (i + 1 < row.size() ? "," : "");
            os << "\n";
        }
        if (!diagnostics.empty()) os << "# diagnostics " << diagnostics.dump() << "\n";
        return os.str();
    }

    std::string to_json() const {
        json root;
        root["tool"] = "secst";
        root["version"] = secst::kVersion;
        json cfg_obj = json::object();
        for (const auto& [k, v] : config) cfg_obj[k] = v;
        root["config"] = cfg_obj;
        json data = json::array();
        for (const auto& row : rows) {
            json obj = json::object();
            for (std::size_t i = 0; i < row.size(); ++i) {
                // Values were formatted with to_chars; re-parse for typed JSON.
                const char* b = row[i].data();
                const char* e = b + row[i].size();
                long long iv = 0;
                const auto ires = std::from_chars(b, e, iv);
                if (ires.ec == std::errc() && ires.ptr == e) {
                    obj[columns[i]] = iv;
                    continue;
                }
                double v = 0.0;
                const auto res = std::from_chars(b, e, v);
                if (res.ec == std::errc() && res.ptr == e)
                    obj[columns[i]] = v;
                else
                    obj[columns[i]] = row[i];
            }
            data.push_back(obj);
        }
        root["data"] = data;
        root["diagnostics"] = diagnostics;
        return root.dump(2) + "\n";
    }
};

int write_artifact(const Artifact& art, const OutputOptions& out) {
    const std::string text = out.format == "json" ? art.to_json() : art.to_csv();
    if (out.path == "-") {
        std::cout << text;
        return std::cout ? kOk : kIoError;
    }
    std::ofstream f(out.path, std::ios::binary);
    if (!f) return kIoError;
    f << text;
    return f ? kOk : kIoError;
}

void emit_error(const std::string& msg, int code) {
    json diag;
    diag["error"] = msg;
    diag["exit"] = code;
    std::cerr << diag.dump() << "\n";
}

// ---------------------------------------------------------------------------
// Subcommand bodies
// ---------------------------------------------------------------------------

int run_matrix(const ParamOptions& po, int n_max, const OutputOptions& out) {
    const SecstParams p = po.params();
    const int n = n_max > 0 ? n_max : secst::default_n_max(p);
    const auto rho = secst::build_density_matrix(p, n);

    Artifact art;
    art.cfg("subcommand", "matrix");
    art.cfg("alpha_re", po.alpha_re);
    art.cfg("alpha_im", po.alpha_im);
    art.cfg("m", po.m);
    art.cfg("nbar", po.nbar);
    art.cfg("nmax", n);
    art.columns = {"n", "m", "re", "im"};
    for (int r = 0; r < rho.dim; ++r)
        for (int c = 0; c < rho.dim; ++c)
            art.rows.push_back({fmt(r), fmt(c), fmt(rho.at(r, c).real()), fmt(rho.at(r, c).imag())});
    art.diagnostics["trace_deficit"] = rho.trace_deficit;
    art.diagnostics["hermiticity_defect"] = rho.hermiticity_defect;
    art.diagnostics["truncation_warning"] = rho.truncation_warning;
    const int rc = write_artifact(art, out);
    if (rc != kOk) return rc;
    if (out.strict && rho.truncation_warning) {
        emit_error("truncation warning in strict mode: trace deficit " +
                       fmt(rho.trace_deficit),
                   kNumericalError);
        return kNumericalError;
    }
    return kOk;
}

int run_pnd(const ParamOptions& po, int n_max, const OutputOptions& out) {
    const SecstParams p = po.params();
    const int n = n_max > 0 ? n_max : secst::default_n_max(p);
    const auto dist = secst::photon_number_distribution(p, n);

    Artifact art;
    art.cfg("subcommand", "pnd");
    art.cfg("alpha_re", po.alpha_re);
    art.cfg("alpha_im", po.alpha_im);
    art.cfg("m", po.m);
    art.cfg("nbar", po.nbar);
    art.cfg("nmax", n);
    art.columns = {"n", "sigma_n"};
    for (int i = 0; i <= n; ++i) art.rows.push_back({fmt(i), fmt(dist.p[i])});
    art.diagnostics["sum"] = dist.sum;
    art.diagnostics["truncation_warning"] = dist.truncation_warning;
    const int rc = write_artifact(art, out);
    if (rc != kOk) return rc;
    if (out.strict && dist.truncation_warning) {
        emit_error("distribution sum " + fmt(dist.sum) + " below 1 - 1e-6 in strict mode",
                   kNumericalError);
        return kNumericalError;
    }
    return kOk;
}

struct SweepOptions {
    double alpha_min = 0.0;
    double alpha_max = 3.0;
    double nbar_min = 0.0;
    double nbar_max = 1.0;
    int grid = 100;
};

void add_sweep_options(CLI::App* sub, SweepOptions& s) {
    sub->add_option("--alpha-min", s.alpha_min, "Smallest |alpha|")->capture_default_str();
    sub->add_option("--alpha-max", s.alpha_max, "Largest |alpha|")->capture_default_str();
    sub->add_option("--nbar-min", s.nbar_min, "Smallest n_bar_t")->capture_default_str();
    sub->add_option("--nbar-max", s.nbar_max, "Largest n_bar_t")->capture_default_str();
    sub->add_option("--grid", s.grid, "Points per axis")->check(CLI::Range(2, 2000))
        ->capture_default_str();
}

int run_q_surface(int m, const SweepOptions& sw, const OutputOptions& out) {
    Artifact art;
    art.cfg("subcommand", "q-surface");
    art.cfg("m", m);
    art.cfg("alpha_min", sw.alpha_min);
    art.cfg("alpha_max", sw.alpha_max);
    art.cfg("nbar_min", sw.nbar_min);
    art.cfg("nbar_max", sw.nbar_max);
    art.cfg("grid", sw.grid);
    art.columns = {"nbar", "alpha_abs", "q"};

    const int g = sw.grid;
    std::vector<secst::QPoint> points(static_cast<std::size_t>(g) * g);
    int vacuum_points = 0;
    secst::parallel_for(static_cast<std::int64_t>(g) * g, [&](std::int64_t idx) {
        const int i = static_cast<int>(idx / g);  // nbar index
        const int j = static_cast<int>(idx % g);  // alpha index
        const double nb = sw.nbar_min + (sw.nbar_max - sw.nbar_min) * i / (g - 1);
        const double a = sw.alpha_min + (sw.alpha_max - sw.alpha_min) * j / (g - 1);
        secst::QPoint qp{nb, a, m, 0.0};
        try {
            qp.q = secst::mandel_q(SecstParams(Complex(a, 0.0), m, nb));
        } catch (const secst::VacuumError&) {
            // Continuous limit at the vacuum corner: both the coherent and
            // the thermal approach give Q -> 1.
            qp.q = 1.0;
        }
        points[idx] = qp;
    });
    for (const auto& qp : points) {
        if (qp.n_bar_t == 0.0 && qp.alpha_abs == 0.0 && m == 0) ++vacuum_points;
        art.rows.push_back({fmt(qp.n_bar_t), fmt(qp.alpha_abs), fmt(qp.q)});
    }
    if (vacuum_points > 0) art.diagnostics["vacuum_limit_points"] = vacuum_points;
    return write_artifact(art, out);
}

int run_capacity(int m, const SweepOptions& sw, int n_max, bool bits,
                 const OutputOptions& out) {
    Artifact art;
    art.cfg("subcommand", "capacity");
    art.cfg("m", m);
    art.cfg("alpha_min", sw.alpha_min);
    art.cfg("alpha_max", sw.alpha_max);
    art.cfg("nbar_min", sw.nbar_min);
    art.cfg("nbar_max", sw.nbar_max);
    art.cfg("grid", sw.grid);
    art.cfg("nmax", n_max);
    art.cfg("unit", bits ? "bits" : "nats");
    art.columns = {"nbar", "alpha_abs", "m", "s_act", "s_max", "info"};

    const double unit = bits ? 1.0 / std::log(2.0) : 1.0;
    const int g = sw.grid;
    std::vector<secst::CapacityResult> results(static_cast<std::size_t>(g) * g);
    std::vector<char> vacuum(static_cast<std::size_t>(g) * g, 0);
    secst::parallel_for(static_cast<std::int64_t>(g) * g, [&](std::int64_t idx) {
        const int i = static_cast<int>(idx / g);
        const int j = static_cast<int>(idx % g);
        const double nb = sw.nbar_min + (sw.nbar_max - sw.nbar_min) * i / (g - 1);
        const double a = sw.alpha_min + (sw.alpha_max - sw.alpha_min) * j / (g - 1);
        try {
            results[idx] = secst::channel_capacity(SecstParams(Complex(a, 0.0), m, nb), n_max);
        } catch (const secst::VacuumError&) {
            results[idx] = secst::CapacityResult{0.0, 0.0, 0.0, n_max, false};
            vacuum[idx] = 1;
        }
    });

    int warnings = 0, vacuum_points = 0;
    for (std::size_t idx = 0; idx < results.size(); ++idx) {
        const int i = static_cast<int>(idx) / g;
        const int j = static_cast<int>(idx) % g;
        const double nb = sw.nbar_min + (sw.nbar_max - sw.nbar_min) * i / (g - 1);
        const double a = sw.alpha_min + (sw.alpha_max - sw.alpha_min) * j / (g - 1);
        const auto& r = results[idx];
        if (r.truncation_warning) ++warnings;
        if (vacuum[idx]) ++vacuum_points;
        art.rows.push_back({fmt(nb), fmt(a), fmt(m), fmt(r.s_act * unit), fmt(r.s_max * unit),
                            fmt(r.info * unit)});
    }
    art.diagnostics["truncation_warnings"] = warnings;
    if (vacuum_points > 0) art.diagnostics["vacuum_limit_points"] = vacuum_points;
    const int rc = write_artifact(art, out);
    if (rc != kOk) return rc;
    if (out.strict && warnings > 0) {
        emit_error(fmt(warnings) + " truncation warnings in strict mode", kNumericalError);
        return kNumericalError;
    }
    return kOk;
}

struct GridOptions {
    double x_min = -4.0, x_max = 4.0, y_min = -4.0, y_max = 4.0;
    int nx = 201, ny = 201;
};

void add_grid_options(CLI::App* sub, GridOptions& g) {
    sub->add_option("--x-min", g.x_min)->capture_default_str();
    sub->add_option("--x-max", g.x_max)->capture_default_str();
    sub->add_option("--y-min", g.y_min)->capture_default_str();
    sub->add_option("--y-max", g.y_max)->capture_default_str();
    sub->add_option("--nx", g.nx)->capture_default_str();
    sub->add_option("--ny", g.ny)->capture_default_str();
}

int run_wigner(const ParamOptions& po, const GridOptions& go, const OutputOptions& out) {
    const SecstParams p = po.params();
    secst::PhaseGrid grid;
    grid.x_min = go.x_min;
    grid.x_max = go.x_max;
    grid.y_min = go.y_min;
    grid.y_max = go.y_max;
    grid.nx = go.nx;
    grid.ny = go.ny;
    const auto surf = secst::wigner_surface(p, grid);

    Artifact art;
    art.cfg("subcommand", "wigner");
    art.cfg("alpha_re", po.alpha_re);
    art.cfg("alpha_im", po.alpha_im);
    art.cfg("m", po.m);
    art.cfg("nbar", po.nbar);
    art.cfg("x_min", grid.x_min);
    art.cfg("x_max", grid.x_max);
    art.cfg("y_min", grid.y_min);
    art.cfg("y_max", grid.y_max);
    art.cfg("nx", grid.nx);
    art.cfg("ny", grid.ny);
    art.columns = {"x", "y", "w"};
    for (int i = 0; i < grid.nx; ++i)
        for (int j = 0; j < grid.ny; ++j)
            art.rows.push_back({fmt(grid.x_at(i)), fmt(grid.y_at(j)), fmt(surf.at(i, j))});
    art.diagnostics["integral_estimate"] = surf.integral_estimate;
    art.diagnostics["min_value"] = surf.min_value;
    art.diagnostics["min_x"] = surf.min_location.x;
    art.diagnostics["min_y"] = surf.min_location.y;
    return write_artifact(art, out);
}

struct MarginalOptions {
    std::string axis = "x";
    double min = -4.0;
    double max = 4.0;
    int points = 161;
};

int run_marginal(const ParamOptions& po, const MarginalOptions& mo, const OutputOptions& out) {
    const SecstParams p = po.params();
    // One consistency probe per invocation; if the closed form ever drifted
    // from the numeric oracle we would trust the oracle for every point and
    // mark the rows.
    const bool consistent = secst::marginal_closed_form_consistent(p);
    const char axis = mo.axis == "y" ? 'y' : 'x';

    Artifact art;
    art.cfg("subcommand", "marginal");
    art.cfg("alpha_re", po.alpha_re);
    art.cfg("alpha_im", po.alpha_im);
    art.cfg("m", po.m);
    art.cfg("nbar", po.nbar);
    art.cfg("axis", mo.axis);
    art.cfg("min", mo.min);
    art.cfg("max", mo.max);
    art.cfg("points", mo.points);
    art.columns = {"coord", "value", "closed_form_flag"};

    std::vector<secst::MarginalValue> vals(mo.points);
    secst::parallel_for(mo.points, [&](std::int64_t i) {
        const double c = mo.min + (mo.max - mo.min) * i / (mo.points - 1);
        if (!consistent) {
            vals[i] = {secst::detail::marginal_numeric(p, axis, c), false, true};
        } else {
            vals[i] = axis == 'x' ? secst::marginal_x(p, c) : secst::marginal_y(p, c);
        }
    });
    for (int i = 0; i < mo.points; ++i) {
        const double c = mo.min + (mo.max - mo.min) * i / (mo.points - 1);
        art.rows.push_back({fmt(c), fmt(vals[i].value), vals[i].closed_form ? "1" : "0"});
    }
    art.diagnostics["closed_form_consistent"] = consistent;
    art.diagnostics["discrepant"] = !consistent;
    return write_artifact(art, out);
}

// ---------------------------------------------------------------------------
// verify: the oracle cross-check battery
// ---------------------------------------------------------------------------

struct VerifyCheck {
    std::string name;
    int cases = 0;
    double max_err = 0.0;
    double tol = 0.0;
    bool pass = true;
};

SecstParams draw_params(std::mt19937_64& rng, int m_max, double alpha_max, double nbar_max) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double a = alpha_max * unit(rng);
    const double phi = 2.0 * M_PI * unit(rng);
    const int m = static_cast<int>(unit(rng) * (m_max + 1)) % (m_max + 1);
    const double nb = 0.05 + (nbar_max - 0.05) * unit(rng);
    return SecstParams(std::polar(a, phi), m, nb);
}

secst::QuadratureSpec verify_quadrature_spec(const SecstParams& p, int n_max) {
    secst::QuadratureSpec spec;
    spec.radial_nodes = 128;
    spec.angular_nodes = 2 * n_max + 4 * p.m + 16;
    const double lam2 = p.lambda_t_sq();
    spec.radius_cutoff =
        std::max(std::sqrt(p.n_bar_t * std::log(1e16)),
                 std::sqrt(n_max * lam2) + 4.5 * std::sqrt(lam2) + std::abs(p.alpha) + 2.0);
    return spec;
}

double rel_err(Complex a, Complex b) {
    const double s = std::max(std::abs(a), std::abs(b));
    return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

int run_verify(int cases, unsigned long long seed, double tol, const OutputOptions& out) {
    std::vector<VerifyCheck> checks;

    {  // trace identity
        std::mt19937_64 rng(seed);
        VerifyCheck c{"trace_identity", cases, 0.0, 1e-8};
        for (int i = 0; i < cases; ++i) {
            const SecstParams p = draw_params(rng, 3, 2.0, 2.0);
            const auto rho = secst::build_density_matrix(p, secst::suggest_n_max(p, 1e-10));
            c.max_err = std::max(c.max_err, std::abs(rho.trace_deficit));
        }
        c.pass = c.max_err <= c.tol;
        checks.push_back(c);
    }
    {  // closed-form elements vs quadrature
        std::mt19937_64 rng(seed + 1);
        const int n_cases = std::min(cases, 10);
        VerifyCheck c{"fock_vs_quadrature", n_cases, 0.0, tol};
        for (int i = 0; i < n_cases; ++i) {
            const SecstParams p = draw_params(rng, 3, 2.0, 2.0);
            const int w = std::min(32, secst::suggest_n_max(p, 1e-6));
            const auto q = secst::rho_numeric(p, w, verify_quadrature_spec(p, w));
            for (int n = 0; n <= w; ++n)
                for (int m = 0; m <= w; ++m)
                    if (std::abs(q.at(n, m)) > 1e-12)
                        c.max_err =
                            std::max(c.max_err, rel_err(secst::fock_element(p, n, m), q.at(n, m)));
        }
        c.pass = c.max_err <= c.tol;
        checks.push_back(c);
    }
    {  // Mandel Q: closed form vs recombination vs matrix trace
        std::mt19937_64 rng(seed + 2);
        VerifyCheck c{"q_consistency", cases, 0.0, std::max(tol, 1e-10)};
        for (int i = 0; i < cases; ++i) {
            const SecstParams p = draw_params(rng, 6, 3.0, 2.0);
            c.max_err = std::max(
                c.max_err, std::abs(secst::mandel_q(p) - secst::detail::mandel_q_from_moments(p)) /
                               std::max(1.0, std::abs(secst::mandel_q(p))));
        }
        std::mt19937_64 rng2(seed + 3);
        for (int i = 0; i < std::min(cases, 8); ++i) {
            const SecstParams p = draw_params(rng2, 3, 2.0, 2.0);
            const auto rho = secst::build_density_matrix(
                p, std::min(secst::kNMaxEnvelope, secst::suggest_n_max(p, 1e-12) + 8));
            const auto nm = secst::moments_numeric(rho);
            c.max_err = std::max(c.max_err, rel_err(secst::mandel_q(p), nm.q));
        }
        c.pass = c.max_err <= std::max(tol, 1e-6);
        checks.push_back(c);
    }
    {  // entropy identities
        std::mt19937_64 rng(seed + 4);
        VerifyCheck c{"entropy_identities", cases, 0.0, 1e-8};
        std::uniform_real_distribution<double> unb(0.05, 2.0);
        for (int i = 0; i < cases; ++i) {
            const double nb = unb(rng);
            const SecstParams th(Complex(0, 0), 0, nb);
            const int n_max = std::min(secst::kNMaxEnvelope, secst::suggest_n_max(th, 1e-12) + 16);
            c.max_err = std::max(c.max_err, std::abs(secst::actual_entropy(th, n_max) -
                                                     secst::thermal_entropy(nb)));
            const SecstParams p = draw_params(rng, 4, 2.0, 2.0);
            c.max_err =
                std::max(c.max_err, rel_err(secst::max_entropy(p),
                                            secst::detail::max_entropy_expanded(p)));
        }
        c.pass = c.max_err <= c.tol;
        checks.push_back(c);
    }
    {  // Wigner closed form vs displaced parity
        std::mt19937_64 rng(seed + 5);
        const int n_cases = std::min(cases, 6);
        VerifyCheck c{"wigner_vs_parity", n_cases, 0.0, std::max(tol, 1e-6)};
        for (int i = 0; i < n_cases; ++i) {
            const SecstParams p = draw_params(rng, 4, 1.5, 1.5);
            const auto rho = secst::build_density_matrix(
                p, std::min(secst::kNMaxEnvelope, secst::suggest_n_max(p, 1e-13) + 8));
            for (int k = 0; k < 9; ++k) {
                const secst::PhasePoint g{-2.0 + 0.5 * k, 1.5 - 0.4 * k};
                c.max_err = std::max(
                    c.max_err, std::abs(secst::wigner(p, g) - secst::wigner_numeric(rho, g)));
            }
        }
        c.pass = c.max_err <= c.tol;
        checks.push_back(c);
    }
    {  // marginals: closed form vs numeric integration
        std::mt19937_64 rng(seed + 6);
        const int n_cases = std::min(cases, 6);
        VerifyCheck c{"marginal_consistency", n_cases, 0.0, 1e-5};
        for (int i = 0; i < n_cases; ++i) {
            const SecstParams p = draw_params(rng, 3, 1.5, 2.0);
            for (int k = 0; k < 7; ++k) {
                const double coord = -1.8 + 0.6 * k;
                c.max_err = std::max(c.max_err,
                                     std::abs(secst::marginal_x(p, coord).value -
                                              secst::detail::marginal_numeric(p, 'x', coord)));
                c.max_err = std::max(c.max_err,
                                     std::abs(secst::marginal_y(p, coord).value -
                                              secst::detail::marginal_numeric(p, 'y', coord)));
            }
        }
        c.pass = c.max_err <= c.tol;
        checks.push_back(c);
    }
    {  // Wigner normalization under the canonical measure
        std::mt19937_64 rng(seed + 7);
        VerifyCheck c{"wigner_normalization", 2, 0.0, 1e-4};
        secst::PhaseGrid grid;
        grid.x_min = grid.y_min = -6.0;
        grid.x_max = grid.y_max = 6.0;
        grid.nx = grid.ny = 301;
        for (int i = 0; i < 2; ++i) {
            const SecstParams p = draw_params(rng, 3, 1.5, 2.0);
            const auto surf = secst::wigner_surface(p, grid);
            c.max_err = std::max(c.max_err, std::abs(surf.integral_estimate - 1.0));
        }
        c.pass = c.max_err <= c.tol;
        checks.push_back(c);
    }

    Artifact art;
    art.cfg("subcommand", "verify");
    art.cfg("cases", cases);
    art.cfg("seed", std::to_string(seed));
    art.cfg("tol", tol);
    art.columns = {"check", "cases", "max_err", "tol", "status"};
    bool all_pass = true;
    for (const auto& c : checks) {
        art.rows.push_back(
            {c.name, fmt(c.cases), fmt(c.max_err), fmt(c.tol), c.pass ? "pass" : "fail"});
        all_pass = all_pass && c.pass;
    }
    art.diagnostics["all_pass"] = all_pass;
    const int rc = write_artifact(art, out);
    if (rc != kOk) return rc;
    if (!all_pass) {
        emit_error("verification failed", kNumericalError);
        return kNumericalError;
    }
    return kOk;
}

}

int main(int argc, char** argv) {
    CLI::App app{"Photon-added coherent states in thermal noise: closed-form "
                 "density matrices, photon statistics, channel capacity, and "
                 "phase-space distributions"};
    app.require_subcommand(1);

    ParamOptions po_matrix, po_pnd, po_wigner, po_marginal;
    OutputOptions out_matrix, out_pnd, out_q, out_cap, out_wigner, out_marginal, out_verify;
    SweepOptions sw_q, sw_cap;
    GridOptions grid_wigner;
    MarginalOptions mo;
    int nmax_matrix = 0, nmax_pnd = 0, nmax_cap = 70;
    int m_q = 0, m_cap = 0;
    bool cap_bits = false;
    int verify_cases = 25;
    unsigned long long verify_seed = 42;
    double verify_tol = 1e-6;

    auto* matrix = app.add_subcommand("matrix", "Density matrix in the Fock basis");
    add_param_options(matrix, po_matrix);
    matrix->add_option("--nmax", nmax_matrix, "Fock truncation (0 = automatic)");
    add_output_options(matrix, out_matrix);

    auto* pnd = app.add_subcommand("pnd", "Photon number distribution");
    add_param_options(pnd, po_pnd);
    pnd->add_option("--nmax", nmax_pnd, "Fock truncation (0 = automatic)");
    add_output_options(pnd, out_pnd);

    auto* qsurf = app.add_subcommand("q-surface", "Mandel Q over (nbar, |alpha|)");
    qsurf->add_option("--m", m_q, "Number of photon additions")->capture_default_str();
    add_sweep_options(qsurf, sw_q);
    add_output_options(qsurf, out_q);

    auto* cap = app.add_subcommand("capacity", "Entropies and maximum information");
    cap->add_option("--m", m_cap, "Number of photon additions")->capture_default_str();
    add_sweep_options(cap, sw_cap);
    cap->add_option("--nmax", nmax_cap, "Fock truncation for the entropy sum")
        ->capture_default_str();
    cap->add_flag("--bits", cap_bits, "Report entropies in bits instead of nats");
    add_output_options(cap, out_cap);

    auto* wig = app.add_subcommand("wigner", "Wigner function over a phase-plane grid");
    add_param_options(wig, po_wigner);
    add_grid_options(wig, grid_wigner);
    add_output_options(wig, out_wigner);

    auto* marg = app.add_subcommand("marginal", "Quadrature marginal distribution");
    add_param_options(marg, po_marginal);
    marg->add_option("--axis", mo.axis, "Marginal axis")->check(CLI::IsMember({"x", "y"}))
        ->capture_default_str();
    marg->add_option("--min", mo.min, "Smallest coordinate")->capture_default_str();
    marg->add_option("--max", mo.max, "Largest coordinate")->capture_default_str();
    marg->add_option("--points", mo.points, "Sample count")->check(CLI::Range(2, 100000))
        ->capture_default_str();
    add_output_options(marg, out_marginal);

    auto* verify = app.add_subcommand("verify", "Run the oracle cross-check battery");
    verify->add_option("--cases", verify_cases, "Random parameter sets per check")
        ->check(CLI::Range(1, 500))
        ->capture_default_str();
    verify->add_option("--seed", verify_seed, "Random seed")->capture_default_str();
    verify->add_option("--tol", verify_tol, "Relative tolerance for oracle checks")
        ->capture_default_str();
    add_output_options(verify, out_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error(e.what(), kValidationError);
        return kValidationError;
    }

    try {
        if (matrix->parsed()) return run_matrix(po_matrix, nmax_matrix, out_matrix);
        if (pnd->parsed()) return run_pnd(po_pnd, nmax_pnd, out_pnd);
        if (qsurf->parsed()) return run_q_surface(m_q, sw_q, out_q);
        if (cap->parsed()) return run_capacity(m_cap, sw_cap, nmax_cap, cap_bits, out_cap);
        if (wig->parsed()) return run_wigner(po_wigner, grid_wigner, out_wigner);
        if (marg->parsed()) return run_marginal(po_marginal, mo, out_marginal);
        if (verify->parsed()) return run_verify(verify_cases, verify_seed, verify_tol, out_verify);
    } catch (const secst::VacuumError& e) {
        emit_error(e.what(), kValidationError);
        return kValidationError;
    } catch (const std::domain_error& e) {
        emit_error(e.what(), kValidationError);
        return kValidationError;
    } catch (const std::exception& e) {
        emit_error(e.what(), kNumericalError);
        return kNumericalError;
    }
    return kOk;
}
