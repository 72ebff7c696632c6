#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <sskdv/fields.hpp>
#include <sskdv/grassmann.hpp>

namespace sskdv
{

// Finite-difference steps. First and second derivatives use h, third derivatives h3;
// each derivative is Richardson-extrapolated from steps (h, h/2).
struct fd_stencil {
    double h = 1e-3;
    double h3 = 2e-2;
};

namespace fd
{

// Central differences of order h^4 (5 points, 7 for dx3) + one Richardson step.
std::complex<double> dx1(const field_fn &f, double x, double t, double h);
std::complex<double> dx2(const field_fn &f, double x, double t, double h);
std::complex<double> dx3(const field_fn &f, double x, double t, double h);
std::complex<double> dt1(const field_fn &f, double x, double t, double h);

} // namespace fd

struct residual_grid {
    double x_min = -15;
    double x_max = 15;
    std::size_t nx = 301;
    std::vector<double> t_values{0.};
    // Points for which this returns true are skipped (pole neighbourhoods).
    std::function<bool(double, double)> exclude;

    static residual_grid standard(std::vector<double> t_values);

    double x_at(std::size_t k) const
    {
        return nx == 1 ? x_min : x_min + (x_max - x_min) * static_cast<double>(k) / static_cast<double>(nx - 1);
    }

    std::string describe() const;
};

struct residual_offender {
    double x = 0;
    double t = 0;
    double value = 0;
};

struct residual_report {
    std::string equation;
    std::string grid;
    double tolerance = 1e-7;
    double max_abs = 0;
    std::vector<residual_offender> worst; // descending by value
    std::size_t evaluated = 0;
    std::size_t excluded = 0;
    // Set when the residual computed with steps (2h, h) differs from (h, h/2) by more than 10x tolerance.
    bool grid_warning = false;

    bool passed() const
    {
        return max_abs <= tolerance;
    }
};

struct residual_options {
    fd_stencil stencil{};
    double tolerance = 1e-7;
    std::size_t keep_worst = 5;
};

// u_t + u_xxx + 6 u^2 u_x (u-equation; the 3 xi1 xi2 term vanishes under bosonization).
residual_report residual_mkdv(const field_fn &u, const residual_grid &grid, const residual_options &opt = {});

// v_t + (v_xx + 3 v^2 + 6 u^2 v + 3 u_x^2)_x, fermion bilinears dropped.
residual_report residual_v(const field_fn &u, const field_fn &v, const residual_grid &grid,
                           const residual_options &opt = {});

// Both linear equations for the bosonized profiles f1, f2; max over the two.
residual_report residual_fermion(const field_fn &u, const field_fn &v, const field_fn &f1, const field_fn &f2,
                                 const residual_grid &grid, const residual_options &opt = {});

// phi_t + phi_xxx + 6 (U0_x)^2 phi_x.
residual_report residual_phi(const field_fn &u0x, const field_fn &phi, const residual_grid &grid,
                             const residual_options &opt = {});

// (zeta fa)(zeta fb) for one odd generator; identically zero since zeta^2 = 0. This is why the
// fermion bilinears (3 xi1 xi2, 3 xi2 xi2_x, 12 u xi1 xi2) contribute nothing to the residuals.
grassmann<std::complex<double>> bosonized_pair(std::complex<double> fa, std::complex<double> fb,
                                               odd_generator zeta = odd_generator(0));

// Predicate excluding points within `radius` of any listed pole x-position at time t.
std::function<bool(double, double)> exclude_near(std::function<std::vector<double>(double)> poles_at, double radius);

} // namespace sskdv
