#include <doctest.h>

#include <cmath>
#include <complex>

#include <sskdv/residual.hpp>
#include <sskdv/soliton.hpp>
#include <sskdv/yablonskii.hpp>

using namespace sskdv;
using cplx = std::complex<double>;
using ES = exp_sum<qcomplex>;

namespace
{

const cplx I{0, 1};

double sech(double z)
{
    return 1 / std::cosh(z);
}

field_bundle sech_bundle()
{
    field_bundle b;
    b.u = [](double x, double t) { return cplx(sech(x - t)); };
    b.f1 = [](double x, double t) { return cplx(-sech(x - t) * std::tanh(x - t)); };
    b.v = [](double x, double t) { return -I * (-sech(x - t) * std::tanh(x - t)); };
    b.f2 = [](double x, double t) { return I * (-sech(x - t) * std::tanh(x - t)); };
    return b;
}

residual_grid small_grid(double x0, double x1, std::size_t nx, std::vector<double> ts)
{
    residual_grid g;
    g.x_min = x0;
    g.x_max = x1;
    g.nx = nx;
    g.t_values = std::move(ts);
    return g;
}

std::vector<double> linspace(double a, double b, std::size_t n)
{
    std::vector<double> v(n);
    for (std::size_t k = 0; k < n; ++k) {
        v[k] = a + (b - a) * static_cast<double>(k) / static_cast<double>(n - 1);
    }
    return v;
}

const field_fn zero = [](double, double) { return cplx(0); };

// num / P^k with P = b1 b2 fixed; exact derivatives in the exp_sum backend.
struct over_power {
    ES num;
    int k = 0;
};

over_power derive(const over_power &f, const ES &p, bool time)
{
    const ES d = time ? dt(f.num) : dx(f.num);
    const ES dp = time ? dt(p) : dx(p);
    return {d * p - qcomplex(f.k) * f.num * dp, f.k + 1};
}

ES raise(const over_power &f, int k, const ES &p)
{
    ES r = f.num;
    for (int j = f.k; j < k; ++j) {
        r = r * p;
    }
    return r;
}

// Numerator of (u_t + u_xxx + 6u^2 u_x) P^4 for u = -i (b1_x / b1 - b2_x / b2).
ES exact_mkdv_numerator(const ES &b1, const ES &b2)
{
    const ES p = b1 * b2;
    const over_power u{-qcomplex::i() * (dx(b1) * b2 - b1 * dx(b2)), 1};
    const over_power ut = derive(u, p, true);
    const over_power ux = derive(u, p, false);
    const over_power uxxx = derive(derive(ux, p, false), p, false);
    const ES nonlin = qcomplex(6) * u.num * u.num * ux.num;
    return raise(ut, 4, p) + raise(uxxx, 4, p) + nonlin;
}

} // namespace

TEST_CASE("sech passes all four equations")
{
    const auto b = sech_bundle();
    const auto g = small_grid(-10, 10, 101, linspace(-1, 1, 11));
    const auto m = residual_mkdv(b.u, g);
    CHECK(m.passed());
    CHECK(m.evaluated == 101 * 11);
    CHECK(m.excluded == 0);
    CHECK_FALSE(m.grid_warning);
    CHECK(residual_v(b.u, b.v, g).passed());
    CHECK(residual_fermion(b.u, b.v, b.f1, b.f2, g).passed());
    CHECK(residual_phi(b.u, b.u, g).passed());
}

TEST_CASE("zero fields give zero residuals")
{
    const auto g = small_grid(-5, 5, 21, {0., 1.});
    CHECK(residual_mkdv(zero, g).max_abs == 0);
    CHECK(residual_v(zero, zero, g).max_abs == 0);
    CHECK(residual_fermion(zero, zero, zero, zero, g).max_abs == 0);
    CHECK(residual_phi(zero, zero, g).max_abs == 0);
}

TEST_CASE("report bookkeeping")
{
    const field_fn bad = [](double x, double) { return cplx(x * x); };
    auto g = small_grid(-2, 2, 41, {0.});
    residual_options opt;
    opt.keep_worst = 3;
    const auto r = residual_mkdv(bad, g, opt);
    // 6 x^4 (2x) is largest at the ends
    REQUIRE(r.worst.size() == 3);
    CHECK(r.worst[0].value >= r.worst[1].value);
    CHECK(std::abs(r.worst[0].x) == doctest::Approx(2));
    CHECK(r.max_abs == doctest::Approx(12 * 32).epsilon(1e-6));
    CHECK_FALSE(r.passed());

    g.exclude = [](double x, double) { return std::abs(x) > 1; };
    const auto e = residual_mkdv(bad, g);
    CHECK(e.excluded == 20);
    CHECK(e.evaluated == 21);
    CHECK(e.grid.find("excluded") != std::string::npos);

    g.nx = 0;
    CHECK_THROWS_AS(residual_mkdv(bad, g), config_error);
}

TEST_CASE("singular points are excluded, not reported")
{
    const field_fn pole = [](double x, double) -> cplx {
        if (std::abs(x) < 0.01) {
            throw singularity_error("x", "pole at 0");
        }
        return cplx(0);
    };
    const auto r = residual_mkdv(pole, small_grid(-1, 1, 21, {0.}));
    CHECK(r.excluded == 1);
    CHECK(r.evaluated == 20);
}

TEST_CASE("soliton presets pass all four equations")
{
    for (const char *name : {"fig1", "fig2"}) {
        const auto f = reconstruct_fields(soliton_preset(name));
        const auto g = residual_grid::standard({-5., 0., 5.});
        INFO(name);
        CHECK(residual_mkdv(f.u, g).passed());
        CHECK(residual_v(f.u, f.v, g).passed());
        CHECK(residual_fermion(f.u, f.v, f.f1, f.f2, g).passed());
        CHECK(residual_phi(f.u, f.u, g).passed());
    }
}

TEST_CASE("u_1 passes all four equations away from its poles")
{
    const auto f = similarity_fields(1);
    auto g = residual_grid::standard({-10., 10.});
    g.exclude = exclude_near([](double t) { return similarity_poles(1, t); }, 2.);
    const auto m = residual_mkdv(f.u, g);
    CHECK(m.passed());
    CHECK(m.excluded > 0);
    CHECK(residual_v(f.u, f.v, g).passed());
    CHECK(residual_fermion(f.u, f.v, f.f1, f.f2, g).passed());
    CHECK(residual_phi(f.u, f.u, g).passed());
}

TEST_CASE("u_n for n <= 5 passes on the standard grid")
{
    // The poles of u_n cluster at x = 0 as t -> 0 and their order grows with n; radius 3 keeps the
    // finite-difference truncation under tolerance up to n = 5.
    for (unsigned n : {0u, 2u, 3u, 4u, 5u}) {
        const auto f = similarity_fields(n);
        auto g = residual_grid::standard({-10., 0., 10.});
        g.exclude = exclude_near([n](double t) { return similarity_poles(n, t); }, 3.);
        INFO("n = " << n);
        CHECK(residual_mkdv(f.u, g).passed());
        CHECK(residual_v(f.u, f.v, g).passed());
        CHECK(residual_fermion(f.u, f.v, f.f1, f.f2, g).passed());
        CHECK(residual_phi(f.u, f.u, g).passed());
    }
}

TEST_CASE("broken constraints trip a residual")
{
    const auto b = sech_bundle();
    const auto g = small_grid(-10, 10, 101, linspace(-1, 1, 5));
    const field_fn ux = b.f1;

    SUBCASE("v = 0")
    {
        CHECK(residual_v(b.u, zero, g).max_abs > 1e-3);
    }
    SUBCASE("v = +i u_x solves the v-equation but not the fermion equations")
    {
        const field_fn vp = [ux](double x, double t) { return I * ux(x, t); };
        CHECK(residual_v(b.u, vp, g).passed());
        CHECK(residual_fermion(b.u, vp, b.f1, b.f2, g).max_abs > 1e-3);
    }
    SUBCASE("f2 = -i f1")
    {
        const field_fn f2 = [ux](double x, double t) { return -I * ux(x, t); };
        CHECK(residual_fermion(b.u, b.v, b.f1, f2, g).max_abs > 1e-3);
    }
    SUBCASE("f1 = u")
    {
        const field_fn f2 = [u = b.u](double x, double t) { return I * u(x, t); };
        CHECK(residual_fermion(b.u, b.v, b.u, f2, g).max_abs > 1e-3);
    }
    SUBCASE("phi = x")
    {
        const field_fn phi = [](double x, double) { return cplx(x); };
        CHECK(residual_phi(b.u, phi, g).max_abs > 1e-3);
    }
    SUBCASE("u = 2 sech")
    {
        const field_fn u2 = [u = b.u](double x, double t) { return 2. * u(x, t); };
        CHECK(residual_mkdv(u2, g).max_abs > 1e-3);
    }
}

TEST_CASE("fermion bilinears vanish under bosonization")
{
    CHECK(bosonized_pair(cplx(1.5, -2), cplx(0.25, 3)).is_zero());
    CHECK(bosonized_pair(cplx(7), cplx(7), odd_generator(3)).is_zero());
}

TEST_CASE("exact residual of the exponential-sum solutions vanishes")
{
    for (const auto &spec : {soliton_spec({qcomplex(1)}, {qcomplex::i()}), soliton_preset("fig1")}) {
        const auto [t1, t2] = build_tau_pair(spec);
        CHECK(exact_mkdv_numerator(t1.body(), t2.body()).is_zero());
        // the oracle must then pass as well
        const auto f = reconstruct_fields(spec);
        CHECK(residual_mkdv(f.u, small_grid(-10, 10, 41, {-2., 2.})).passed());
    }
    // a pair violating the dispersion relation is caught by the exact test
    const ES b1 = ES(qcomplex(1)) + ES::exponential(qcomplex(1), qcomplex(-2), grassmann<qcomplex>(qcomplex::i()));
    const ES b2 = ES(qcomplex(1)) + ES::exponential(qcomplex(1), qcomplex(-2), grassmann<qcomplex>(-qcomplex::i()));
    CHECK_FALSE(exact_mkdv_numerator(b1, b2).is_zero());
}

TEST_CASE("finite-difference stencils on polynomials")
{
    const field_fn cubic = [](double x, double t) { return cplx(x * x * x + 2 * t * t); };
    CHECK(std::abs(fd::dx1(cubic, 1.5, 0.5, 1e-3) - 6.75) <= 1e-9);
    CHECK(std::abs(fd::dx2(cubic, 1.5, 0.5, 1e-3) - 9.) <= 1e-6);
    CHECK(std::abs(fd::dx3(cubic, 1.5, 0.5, 2e-2) - 6.) <= 1e-7);
    CHECK(std::abs(fd::dt1(cubic, 1.5, 0.5, 1e-3) - 2.) <= 1e-9);
}
