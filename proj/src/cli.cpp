#include <sskdv/cli.hpp>
#include <sskdv/errors.hpp>
#include <sskdv/hirota.hpp>
#include <sskdv/residual.hpp>
#include <sskdv/serialize.hpp>
#include <sskdv/soliton.hpp>
#include <sskdv/yablonskii.hpp>

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>

namespace sskdv
{

namespace
{

namespace fs = std::filesystem;
using cplx = std::complex<double>;

class io_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class verification_failed : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

std::string num(double v)
{
    return fmt::format("{:.17g}", v == 0 ? 0. : v);
}

std::string one_line(std::string s)
{
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

fs::path resolve_output(const std::string &p)
{
    fs::path path(p);
    if (path.is_relative()) {
        if (const char *dir = std::getenv(out_dir_env); dir && *dir) {
            path = fs::path(dir) / path;
        }
    }
    return path;
}

std::ofstream open_output(const fs::path &path)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw io_error("cannot open '" + path.string() + "' for writing");
    }
    return f;
}

void finish_output(std::ofstream &f, const fs::path &path)
{
    f.flush();
    if (!f) {
        throw io_error("failed writing '" + path.string() + "'");
    }
}

// out.csv -> out_t-10.csv
fs::path slice_path(const fs::path &base, double t)
{
    fs::path p = base;
    p.replace_filename(base.stem().string() + "_t" + fmt::format("{:g}", t) + base.extension().string());
    return p;
}

std::vector<qcomplex> parse_values(const std::vector<std::string> &items, const char *what)
{
    std::vector<qcomplex> r;
    for (const auto &s : items) {
        try {
            r.push_back(parse_qcomplex(s));
        } catch (const config_error &e) {
            throw config_error(std::string(what) + ": " + e.what());
        }
    }
    return r;
}

std::pair<double, double> x_range(const std::vector<double> &v, std::pair<double, double> dflt)
{
    if (v.empty()) {
        return dflt;
    }
    if (v.size() != 2 || !(v[1] > v[0])) {
        throw config_error("--x-range expects two increasing values a,b");
    }
    return {v[0], v[1]};
}

std::vector<double> linspace(double a, double b, std::size_t n)
{
    if (n < 2) {
        throw config_error("--nx must be at least 2");
    }
    std::vector<double> v(n);
    for (std::size_t k = 0; k < n; ++k) {
        v[k] = a + (b - a) * static_cast<double>(k) / static_cast<double>(n - 1);
    }
    return v;
}

// Spec from --preset or --kappa/--amp (amplitudes default to i).
soliton_spec spec_from(const std::string &preset, const std::vector<std::string> &kappa,
                       const std::vector<std::string> &amp, int n)
{
    if (!preset.empty()) {
        if (!kappa.empty() || !amp.empty()) {
            throw config_error("--preset cannot be combined with --kappa/--amp");
        }
        auto s = soliton_preset(preset);
        if (n > 0 && static_cast<std::size_t>(n) != s.size()) {
            throw config_error("--n " + std::to_string(n) + " does not match preset " + preset);
        }
        return s;
    }
    if (kappa.empty()) {
        throw config_error("give --preset or --kappa");
    }
    const auto ks = parse_values(kappa, "--kappa");
    auto as = amp.empty() ? std::vector<qcomplex>(ks.size(), qcomplex::i()) : parse_values(amp, "--amp");
    if (n > 0 && static_cast<std::size_t>(n) != ks.size()) {
        throw config_error("--n " + std::to_string(n) + " but " + std::to_string(ks.size()) + " wavenumbers");
    }
    return soliton_spec(ks, std::move(as));
}

// One profile column pair per t slice.
struct figure_columns {
    std::string first, second;
    std::function<std::pair<double, double>(double x, double t)> eval;
    bool skip_poles = false;
};

void write_figure(std::ostream &out, const std::string &target, const std::string &comment, const figure_columns &cols,
                  const std::vector<double> &xs, const std::vector<double> &ts, bool wide)
{
    if (ts.empty()) {
        throw config_error("--t needs at least one value");
    }
    const fs::path base = resolve_output(target);
    const auto row = [&](double x, double t) -> std::optional<std::pair<double, double>> {
        try {
            return cols.eval(x, t);
        } catch (const singularity_error &) {
            if (!cols.skip_poles) {
                throw;
            }
            return std::nullopt;
        }
    };
    if (wide) {
        auto f = open_output(base);
        f << "# " << comment << "\n" << "x";
        for (double t : ts) {
            f << "," << cols.first << "@t=" << fmt::format("{:g}", t) << "," << cols.second << "@t="
              << fmt::format("{:g}", t);
        }
        f << "\n";
        for (double x : xs) {
            f << num(x);
            for (double t : ts) {
                const auto v = row(x, t);
                f << "," << (v ? num(v->first) : "nan") << "," << (v ? num(v->second) : "nan");
            }
            f << "\n";
        }
        finish_output(f, base);
        out << "wrote " << base.string() << " (" << xs.size() << " rows)\n";
        return;
    }
    for (double t : ts) {
        const fs::path p = slice_path(base, t);
        auto f = open_output(p);
        f << "# " << comment << " t=" << fmt::format("{:g}", t) << "\n";
        f << "x," << cols.first << "," << cols.second << "\n";
        std::size_t rows = 0, skipped = 0;
        for (double x : xs) {
            if (const auto v = row(x, t)) {
                f << num(x) << "," << num(v->first) << "," << num(v->second) << "\n";
                ++rows;
            } else {
                ++skipped;
            }
        }
        finish_output(f, p);
        out << "wrote " << p.string() << " (" << rows << " rows";
        if (skipped) {
            out << ", " << skipped << " pole points skipped";
        }
        out << ")\n";
    }
}

void print_point(std::ostream &out, const field_bundle &f, double x, double t)
{
    const cplx u = f.u(x, t), v = f.v(x, t), f1 = f.f1(x, t), f2 = f.f2(x, t);
    out << "x,t,re_u,im_u,re_v,im_v,re_f1,im_f1,re_f2,im_f2\n";
    out << num(x) << "," << num(t);
    for (const cplx &c : {u, v, f1, f2}) {
        out << "," << num(c.real()) << "," << num(c.imag());
    }
    out << "\n";
}

std::pair<double, double> point(const std::vector<double> &v)
{
    if (v.size() != 2) {
        throw config_error("--eval expects x,t");
    }
    return {v[0], v[1]};
}

// ---- soliton --------------------------------------------------------------------------------

struct soliton_opts {
    int n = 0;
    std::vector<std::string> kappa, amp;
    std::string preset;
    std::vector<double> eval;
    std::vector<double> t{-10, 0, 10};
    std::string figure;
    std::vector<double> xr;
    std::size_t nx = 801;
    bool wide = false;
    bool tau = false;
};

int run_soliton(const soliton_opts &o, std::ostream &out)
{
    const soliton_spec spec = spec_from(o.preset, o.kappa, o.amp, o.n);
    bool did = false;
    if (o.tau) {
        const auto [t1, t2] = build_tau_pair(spec);
        out << json{{"spec", spec.describe()}, {"tau1", to_json(t1)}, {"tau2", to_json(t2)}}.dump(2) << "\n";
        did = true;
    }
    const auto fields = reconstruct_fields(spec);
    if (!o.eval.empty()) {
        const auto [x, t] = point(o.eval);
        print_point(out, fields, x, t);
        did = true;
    }
    if (!o.figure.empty()) {
        const auto [a, b] = x_range(o.xr, {-20., 20.});
        figure_columns cols{"abs_u", "minus_f1", [&fields](double x, double t) {
                                return std::pair{std::abs(fields.u(x, t)), -fields.f1(x, t).real()};
                            }};
        const std::string comment = (o.preset.empty() ? "" : "preset=" + o.preset + " ") + spec.describe();
        write_figure(out, o.figure, comment, cols, linspace(a, b, o.nx), o.t, o.wide);
        did = true;
    }
    if (!did) {
        out << spec.describe() << "\n";
    }
    return exit_ok;
}

// ---- yv -------------------------------------------------------------------------------------

struct yv_opts {
    int n = -1;
    bool print = false;
    std::string preset;
    std::vector<double> eval;
    std::vector<double> t{-10, 0, 10};
    std::string figure;
    std::vector<double> xr;
    std::size_t nx = 401;
    bool wide = false;
};

void print_poly(std::ostream &out, const yv_poly &q)
{
    out << "Q_" << q.n << " degree " << q.poly.degree() << "; coefficient of z^k as a b c = a + b 3^(1/3) + c 3^(2/3)\n";
    const auto &c = q.poly.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (!c[k].is_zero()) {
            out << "z^" << k << ": " << to_string(c[k].a()) << " " << to_string(c[k].b()) << " " << to_string(c[k].c())
                << "\n";
        }
    }
}

int run_yv(const yv_opts &o, std::ostream &out)
{
    int n = o.n;
    if (!o.preset.empty()) {
        if (o.preset != "fig3") {
            throw config_error("unknown yv preset '" + o.preset + "' (expected fig3)");
        }
        if (n >= 0 && n != 1) {
            throw config_error("preset fig3 uses n = 1");
        }
        n = 1;
    }
    if (n < 0) {
        throw config_error("give --n or --preset fig3");
    }
    if (n > 40) {
        throw config_error("--n must be at most 40");
    }
    const auto un = static_cast<unsigned>(n);
    bool did = false;
    if (o.print) {
        print_poly(out, yv_polynomial(un));
        did = true;
    }
    const auto fields = similarity_fields(un);
    if (!o.eval.empty()) {
        const auto [x, t] = point(o.eval);
        print_point(out, fields, x, t);
        did = true;
    }
    if (!o.figure.empty()) {
        const auto [a, b] = x_range(o.xr, {-10., 10.});
        figure_columns cols{"im_u", "im_f1",
                            [&fields](double x, double t) {
                                return std::pair{fields.u(x, t).imag(), fields.f1(x, t).imag()};
                            },
                            true};
        const std::string comment = (o.preset.empty() ? "" : "preset=" + o.preset + " ") + "yv n=" + std::to_string(n);
        write_figure(out, o.figure, comment, cols, linspace(a, b, o.nx), o.t, o.wide);
        did = true;
    }
    if (!did) {
        print_poly(out, yv_polynomial(un));
    }
    return exit_ok;
}

// ---- verify bilinear ------------------------------------------------------------------------

struct bilinear_opts {
    int n = 0;
    std::vector<std::string> kappa, amp;
    std::string preset;
    int similarity = -1;
    int random = 0;
    std::uint64_t seed = 1;
    std::string mode = "exact";
    double tol = 1e-9;
    std::string json;
};

struct bilinear_case {
    std::string label;
    bool first_zero = false, second_zero = false;
    double first_max = 0, second_max = 0;
    double first_rel = 0, second_rel = 0;
    bool passed = false;
};

template <typename E>
bilinear_case check_pair(std::string label, const superfield<E> &t1, const superfield<E> &t2, bool exact, double tol)
{
    const auto [h1, sd] = verify_bilinear(t1, t2);
    bilinear_case c{std::move(label), h1.is_zero, sd.is_zero, h1.max_abs_coeff, sd.max_abs_coeff,
                    h1.relative(), sd.relative()};
    c.passed = exact ? (c.first_zero && c.second_zero) : (c.first_rel <= tol && c.second_rel <= tol);
    return c;
}

bilinear_case check_spec(const soliton_spec &s, bool exact, double tol)
{
    if (exact) {
        const auto [t1, t2] = build_tau_pair<qcomplex>(s);
        return check_pair(s.describe(), t1, t2, true, tol);
    }
    const auto [t1, t2] = build_tau_pair<cplx>(s);
    return check_pair(s.describe(), t1, t2, false, tol);
}

soliton_spec random_spec(std::mt19937_64 &rng, std::size_t n)
{
    std::uniform_int_distribution<int> numer(-30, 30), denom(1, 10);
    std::vector<qcomplex> ks, as;
    while (ks.size() < n) {
        const qcomplex k(rational(numer(rng), denom(rng)));
        bool ok = !k.is_zero();
        for (const auto &q : ks) {
            ok = ok && !(q == k) && !(q + k).is_zero();
        }
        if (ok) {
            ks.push_back(k);
        }
    }
    while (as.size() < n) {
        const qcomplex a(rational(numer(rng), denom(rng)), rational(numer(rng), denom(rng)));
        if (!a.is_zero()) {
            as.push_back(a);
        }
    }
    return soliton_spec(std::move(ks), std::move(as));
}

int run_bilinear(const bilinear_opts &o, std::ostream &out, std::ostream &err)
{
    if (o.mode != "exact" && o.mode != "float") {
        throw config_error("--mode must be exact or float");
    }
    if (!(o.tol >= 0)) {
        throw config_error("--tol must be non-negative");
    }
    const bool exact = o.mode == "exact";
    std::vector<bilinear_case> cases;
    if (o.similarity >= 0) {
        if (o.similarity > 12) {
            throw config_error("--similarity must be at most 12");
        }
        const auto [t1, t2] = similarity_tau(static_cast<unsigned>(o.similarity));
        const std::string label = "similarity n=" + std::to_string(o.similarity);
        cases.push_back(exact ? check_pair(label, t1, t2, true, o.tol)
                              : check_pair(label, to_float(t1), to_float(t2), false, o.tol));
    } else if (o.random > 0) {
        if (!o.kappa.empty() || !o.preset.empty()) {
            throw config_error("--random draws its own wavenumbers; drop --kappa/--preset");
        }
        if (o.n < 0 || o.n > 6) {
            throw config_error("--n must be in [1, 6] with --random (0 cycles through 1..4)");
        }
        std::mt19937_64 rng(o.seed);
        for (int k = 0; k < o.random; ++k) {
            const std::size_t size = o.n > 0 ? static_cast<std::size_t>(o.n) : static_cast<std::size_t>(1 + k % 4);
            cases.push_back(check_spec(random_spec(rng, size), exact, o.tol));
        }
    } else {
        cases.push_back(check_spec(spec_from(o.preset, o.kappa, o.amp, o.n), exact, o.tol));
    }

    std::size_t passed = 0;
    json report = json::array();
    for (const auto &c : cases) {
        passed += c.passed;
        out << (c.passed ? "PASS " : "FAIL ") << c.label << ": (D_t + D_x^3) "
            << (c.first_zero ? "zero" : "max " + num(c.first_max) + " relative " + num(c.first_rel)) << "; SD_x "
            << (c.second_zero ? "zero" : "max " + num(c.second_max) + " relative " + num(c.second_rel)) << "\n";
        report.push_back({{"case", c.label},
                          {"first_is_zero", c.first_zero},
                          {"first_max_abs_coeff", c.first_max},
                          {"first_relative", c.first_rel},
                          {"second_is_zero", c.second_zero},
                          {"second_max_abs_coeff", c.second_max},
                          {"second_relative", c.second_rel},
                          {"passed", c.passed}});
    }
    const bool ok = passed == cases.size();
    out << "bilinear " << (ok ? "PASS" : "FAIL") << " (" << passed << "/" << cases.size() << " cases, " << o.mode
        << " mode)\n";
    if (!o.json.empty()) {
        const fs::path p = resolve_output(o.json);
        auto f = open_output(p);
        f << json{{"check", "bilinear"}, {"mode", o.mode}, {"tolerance", o.tol}, {"seed", o.seed},
                  {"passed", ok}, {"cases", report}}
                 .dump(2)
          << "\n";
        finish_output(f, p);
    }
    if (!ok) {
        throw verification_failed(std::to_string(cases.size() - passed) + " of " + std::to_string(cases.size())
                                  + " bilinear cases have nonzero residuals");
    }
    (void)err;
    return exit_ok;
}

// ---- verify pde -----------------------------------------------------------------------------

struct pde_opts {
    std::string solution = "soliton:fig1";
    std::vector<std::string> kappa, amp;
    std::string grid = "default";
    std::vector<double> t;
    double tol = 1e-7;
    double radius = 2;
    fd_stencil stencil{};
    std::string json;
};

residual_grid parse_grid(const std::string &g, std::vector<double> ts)
{
    residual_grid grid = residual_grid::standard(std::move(ts));
    if (g == "default") {
        return grid;
    }
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : g + ",") {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    try {
        if (parts.size() != 3) {
            throw std::invalid_argument("");
        }
        std::size_t used = 0;
        grid.x_min = std::stod(parts[0]);
        grid.x_max = std::stod(parts[1]);
        const long nx = std::stol(parts[2], &used);
        if (used != parts[2].size() || nx < 1 || !(grid.x_max >= grid.x_min)) {
            throw std::invalid_argument("");
        }
        grid.nx = static_cast<std::size_t>(nx);
    } catch (const std::logic_error &) {
        throw config_error("--grid expects 'default' or x_min,x_max,nx");
    }
    return grid;
}

json report_json(const residual_report &r)
{
    json worst = json::array();
    for (const auto &w : r.worst) {
        worst.push_back({{"x", w.x}, {"t", w.t}, {"value", w.value}});
    }
    return {{"equation", r.equation}, {"max_abs", r.max_abs},       {"tolerance", r.tolerance},
            {"passed", r.passed()},  {"evaluated", r.evaluated},   {"excluded", r.excluded},
            {"grid_warning", r.grid_warning}, {"worst", worst}};
}

int run_pde(const pde_opts &o, std::ostream &out)
{
    if (!(o.tol > 0)) {
        throw config_error("--tol must be positive");
    }
    field_bundle fields;
    std::function<bool(double, double)> exclude;
    const auto colon = o.solution.find(':');
    const std::string kind = o.solution.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : o.solution.substr(colon + 1);
    if (kind == "soliton") {
        fields = reconstruct_fields(spec_from(arg, o.kappa, o.amp, 0));
    } else if (kind == "yv") {
        if (!o.kappa.empty() || !o.amp.empty()) {
            throw config_error("--kappa/--amp apply to soliton solutions only");
        }
        std::size_t used = 0;
        int n = -1;
        try {
            n = std::stoi(arg, &used);
        } catch (const std::logic_error &) {
        }
        if (n < 0 || n > 12 || used != arg.size()) {
            throw config_error("yv solution index must be an integer in [0, 12], got '" + arg + "'");
        }
        const auto un = static_cast<unsigned>(n);
        fields = similarity_fields(un);
        if (!(o.radius >= 0)) {
            throw config_error("--exclude-radius must be non-negative");
        }
        exclude = exclude_near([un](double t) { return similarity_poles(un, t); }, o.radius);
    } else {
        throw config_error("--solution must be soliton:fig1, soliton:fig2, soliton (with --kappa) or yv:<n>");
    }

    residual_grid grid = parse_grid(o.grid, o.t.empty() ? std::vector<double>{-10, 0, 10} : o.t);
    grid.exclude = exclude;
    residual_options opt;
    opt.tolerance = o.tol;
    if (!(o.stencil.h > 0) || !(o.stencil.h3 > 0)) {
        throw config_error("finite-difference steps must be positive");
    }
    opt.stencil = o.stencil;

    const std::vector<residual_report> reports{
        residual_mkdv(fields.u, grid, opt),
        residual_v(fields.u, fields.v, grid, opt),
        residual_fermion(fields.u, fields.v, fields.f1, fields.f2, grid, opt),
        residual_phi(fields.u, fields.u, grid, opt),
    };
    std::size_t failed = 0;
    json arr = json::array();
    out << "solution " << o.solution << "; grid " << grid.describe() << "\n";
    for (const auto &r : reports) {
        failed += !r.passed();
        out << (r.passed() ? "PASS " : "FAIL ") << r.equation << ": max " << num(r.max_abs)
            << " (tol " << fmt::format("{:g}", r.tolerance)
            << ", evaluated " << r.evaluated << ", excluded " << r.excluded << ")"
            << (r.grid_warning ? " [grid-too-coarse warning]" : "") << "\n";
        arr.push_back(report_json(r));
    }
    if (!o.json.empty()) {
        const fs::path p = resolve_output(o.json);
        auto f = open_output(p);
        f << json{{"check", "pde"}, {"solution", o.solution}, {"grid", grid.describe()}, {"passed", failed == 0},
                  {"reports", arr}}
                 .dump(2)
          << "\n";
        finish_output(f, p);
    }
    if (failed) {
        throw verification_failed(std::to_string(failed) + " of 4 residual reports exceed tolerance");
    }
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact solutions of the N=2 supersymmetric KdV equation (a = -2) from Hirota tau functions", "sskdv"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "sskdv 1.0.0");

    soliton_opts so;
    auto *sol = app.add_subcommand("soliton", "N-super-soliton tau pairs and fields");
    sol->add_option("--n", so.n, "number of solitons (checked against --kappa)");
    sol->add_option("--kappa", so.kappa, "wavenumbers, comma separated (exact: 1/2, 0.7, 1+i)")->delimiter(',');
    sol->add_option("--amp", so.amp, "amplitudes a_i, comma separated (default i)")->delimiter(',');
    sol->add_option("--preset", so.preset, "fig1 or fig2");
    sol->add_option("--eval", so.eval, "print u, v, f1, f2 at x,t")->delimiter(',')->expected(2);
    sol->add_option("--t", so.t, "t slices for --figure-data")->delimiter(',');
    sol->add_option("--figure-data", so.figure, "CSV output: x, |u|, -f1 per t slice");
    sol->add_option("--x-range", so.xr, "x interval a,b (default -20,20)")->delimiter(',')->expected(2);
    sol->add_option("--nx", so.nx, "grid points")->check(CLI::PositiveNumber);
    sol->add_flag("--wide", so.wide, "one CSV with a column pair per t slice");
    sol->add_flag("--tau", so.tau, "print the exact tau pair as JSON");

    yv_opts yo;
    auto *yv = app.add_subcommand("yv", "Yablonskii-Vorob'ev polynomials and rational similarity solutions");
    yv->add_option("--n", yo.n, "polynomial / solution index");
    yv->add_flag("--print", yo.print, "print exact coefficients of Q_n");
    yv->add_option("--preset", yo.preset, "fig3 (n = 1, t = -10, 0, 10)");
    yv->add_option("--eval", yo.eval, "print u_n, v, f1, f2 at x,t")->delimiter(',')->expected(2);
    yv->add_option("--t", yo.t, "t slices for --figure-data")->delimiter(',');
    yv->add_option("--figure-data", yo.figure, "CSV output: x, Im u_n, Im f1 per t slice");
    yv->add_option("--x-range", yo.xr, "x interval a,b (default -10,10)")->delimiter(',')->expected(2);
    yv->add_option("--nx", yo.nx, "grid points")->check(CLI::PositiveNumber);
    yv->add_flag("--wide", yo.wide, "one CSV with a column pair per t slice");

    auto *verify = app.add_subcommand("verify", "verification reports");
    verify->require_subcommand(1);

    bilinear_opts bo;
    auto *bil = verify->add_subcommand("bilinear", "exact residuals of the bilinear system");
    bil->add_option("--n", bo.n, "number of solitons");
    bil->add_option("--kappa", bo.kappa, "wavenumbers, comma separated")->delimiter(',');
    bil->add_option("--amp", bo.amp, "amplitudes, comma separated (default i)")->delimiter(',');
    bil->add_option("--preset", bo.preset, "fig1 or fig2");
    bil->add_option("--similarity", bo.similarity, "check the similarity tau pair of index n instead");
    bil->add_option("--random", bo.random, "number of random valid specs")->check(CLI::NonNegativeNumber);
    bil->add_option("--seed", bo.seed, "seed for --random");
    bil->add_option("--mode", bo.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    bil->add_option("--tol", bo.tol, "float-mode tolerance on max |coefficient| relative to the largest summand");
    bil->add_option("--json", bo.json, "write a JSON report");

    pde_opts po;
    auto *pde = verify->add_subcommand("pde", "finite-difference residuals of the component equations");
    pde->add_option("--solution", po.solution, "soliton:fig1, soliton:fig2, soliton (with --kappa) or yv:<n>");
    pde->add_option("--kappa", po.kappa, "wavenumbers for --solution soliton")->delimiter(',');
    pde->add_option("--amp", po.amp, "amplitudes for --solution soliton")->delimiter(',');
    pde->add_option("--grid", po.grid, "'default' (x in [-15,15], 301 points) or x_min,x_max,nx");
    pde->add_option("--t", po.t, "t slices (default -10,0,10)")->delimiter(',');
    pde->add_option("--tol", po.tol, "residual tolerance");
    pde->add_option("--exclude-radius", po.radius, "skip points this close to a pole (yv only)");
    pde->add_option("--fd-h", po.stencil.h, "finite-difference step for first and second derivatives");
    pde->add_option("--fd-h3", po.stencil.h3, "finite-difference step for third derivatives");
    pde->add_option("--json", po.json, "write a JSON report");

    const auto fail = [&err](const char *kind, const std::string &msg, int code) {
        err << "error[" << kind << "]: " << one_line(msg) << "\n";
        return code;
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            return app.exit(e, out, err);
        }
        return fail("config", e.what(), exit_config);
    }

    try {
        if (sol->parsed()) {
            return run_soliton(so, out);
        }
        if (yv->parsed()) {
            return run_yv(yo, out);
        }
        if (bil->parsed()) {
            return run_bilinear(bo, out, err);
        }
        if (pde->parsed()) {
            return run_pde(po, out);
        }
        return fail("config", "no subcommand", exit_config);
    } catch (const verification_failed &e) {
        return fail("verification", e.what(), exit_verification_failed);
    } catch (const config_error &e) {
        return fail("config", e.what(), exit_config);
    } catch (const singularity_error &e) {
        return fail("pole", e.what(), exit_pole);
    } catch (const std::domain_error &e) {
        return fail("domain", e.what(), exit_pole);
    } catch (const io_error &e) {
        return fail("io", e.what(), exit_io);
    } catch (const std::exception &e) {
        return fail("internal", e.what(), exit_internal);
    }
}

} // namespace sskdv
