#include <sskdv/errors.hpp>
#include <sskdv/residual.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace sskdv
{

namespace fd
{

namespace
{

using cplx = std::complex<double>;

template <typename Stencil>
cplx richardson(Stencil &&d, double h, double factor)
{
    const cplx coarse = d(h);
    const cplx fine = d(h / 2);
    return (factor * fine - coarse) / (factor - 1);
}

} // namespace

// (-f(2h) + 8f(h) - 8f(-h) + f(-2h)) / 12h, error O(h^4).
cplx dx1(const field_fn &f, double x, double t, double h)
{
    auto d = [&](double s) { return (-f(x + 2 * s, t) + 8. * f(x + s, t) - 8. * f(x - s, t) + f(x - 2 * s, t)) / (12 * s); };
    return richardson(d, h, 16);
}

cplx dx2(const field_fn &f, double x, double t, double h)
{
    auto d = [&](double s) {
        return (-f(x + 2 * s, t) + 16. * f(x + s, t) - 30. * f(x, t) + 16. * f(x - s, t) - f(x - 2 * s, t))
               / (12 * s * s);
    };
    return richardson(d, h, 16);
}

// (-f(3h) + 8f(2h) - 13f(h) + 13f(-h) - 8f(-2h) + f(-3h)) / 8h^3, error O(h^4).
cplx dx3(const field_fn &f, double x, double t, double h)
{
    auto d = [&](double s) {
        return (-f(x + 3 * s, t) + 8. * f(x + 2 * s, t) - 13. * f(x + s, t) + 13. * f(x - s, t)
                - 8. * f(x - 2 * s, t) + f(x - 3 * s, t))
               / (8 * s * s * s);
    };
    return richardson(d, h, 16);
}

cplx dt1(const field_fn &f, double x, double t, double h)
{
    auto d = [&](double s) { return (-f(x, t + 2 * s) + 8. * f(x, t + s) - 8. * f(x, t - s) + f(x, t - 2 * s)) / (12 * s); };
    return richardson(d, h, 16);
}

} // namespace fd

residual_grid residual_grid::standard(std::vector<double> t_values)
{
    residual_grid g;
    g.t_values = std::move(t_values);
    return g;
}

std::string residual_grid::describe() const
{
    std::ostringstream os;
    os.precision(17);
    os << "x in [" << x_min << ", " << x_max << "], " << nx << " points; t in {";
    for (std::size_t k = 0; k < t_values.size(); ++k) {
        os << (k ? ", " : "") << t_values[k];
    }
    os << "}";
    if (exclude) {
        os << "; pole neighbourhoods excluded";
    }
    return os.str();
}

namespace
{

using cplx = std::complex<double>;

// Residual at (x, t) computed with the given stencil steps.
using pointwise = std::function<cplx(double x, double t, const fd_stencil &st)>;

residual_report sweep(std::string name, const residual_grid &grid, const residual_options &opt, const pointwise &r)
{
    if (grid.nx == 0 || grid.t_values.empty() || !(grid.x_max >= grid.x_min)) {
        throw config_error("residual grid is empty or inverted");
    }
    residual_report rep;
    rep.equation = std::move(name);
    rep.grid = grid.describe();
    rep.tolerance = opt.tolerance;
    const fd_stencil fine = opt.stencil;
    const fd_stencil coarse{2 * fine.h, 2 * fine.h3};
    for (double t : grid.t_values) {
        for (std::size_t k = 0; k < grid.nx; ++k) {
            const double x = grid.x_at(k);
            if (grid.exclude && grid.exclude(x, t)) {
                ++rep.excluded;
                continue;
            }
            cplx rf, rc;
            try {
                rf = r(x, t, fine);
                rc = r(x, t, coarse);
            } catch (const singularity_error &) {
                ++rep.excluded;
                continue;
            } catch (const domain_error &) {
                ++rep.excluded;
                continue;
            }
            ++rep.evaluated;
            const double a = std::abs(rf);
            if (!std::isfinite(a)) {
                rep.max_abs = std::numeric_limits<double>::infinity();
            } else {
                rep.max_abs = std::max(rep.max_abs, a);
            }
            if (!(std::abs(rc - rf) <= 10 * opt.tolerance)) {
                rep.grid_warning = true;
            }
            rep.worst.push_back({x, t, a});
            std::sort(rep.worst.begin(), rep.worst.end(),
                      [](const residual_offender &p, const residual_offender &q) { return p.value > q.value; });
            if (rep.worst.size() > opt.keep_worst) {
                rep.worst.pop_back();
            }
        }
    }
    return rep;
}

} // namespace

residual_report residual_mkdv(const field_fn &u, const residual_grid &grid, const residual_options &opt)
{
    return sweep("mkdv: u_t + u_xxx + 6 u^2 u_x", grid, opt, [&](double x, double t, const fd_stencil &st) {
        const cplx uu = u(x, t);
        return fd::dt1(u, x, t, st.h) + fd::dx3(u, x, t, st.h3) + 6. * uu * uu * fd::dx1(u, x, t, st.h);
    });
}

residual_report residual_v(const field_fn &u, const field_fn &v, const residual_grid &grid,
                           const residual_options &opt)
{
    return sweep("v: v_t + (v_xx + 3v^2 + 6u^2 v + 3u_x^2)_x", grid, opt,
                 [&](double x, double t, const fd_stencil &st) {
                     const cplx uu = u(x, t), vv = v(x, t);
                     const cplx ux = fd::dx1(u, x, t, st.h), uxx = fd::dx2(u, x, t, st.h);
                     const cplx vx = fd::dx1(v, x, t, st.h);
                     return fd::dt1(v, x, t, st.h) + fd::dx3(v, x, t, st.h3) + 6. * vv * vx + 12. * uu * ux * vv
                            + 6. * uu * uu * vx + 6. * ux * uxx;
                 });
}

residual_report residual_fermion(const field_fn &u, const field_fn &v, const field_fn &f1, const field_fn &f2,
                                 const residual_grid &grid, const residual_options &opt)
{
    return sweep("fermion: xi_t + (xi_xx + 3(v + 2u^2) xi +- 3u_x xi')_x", grid, opt,
                 [&](double x, double t, const fd_stencil &st) {
                     const cplx uu = u(x, t), vv = v(x, t);
                     const cplx ux = fd::dx1(u, x, t, st.h), uxx = fd::dx2(u, x, t, st.h);
                     const cplx vx = fd::dx1(v, x, t, st.h);
                     const cplx a = f1(x, t), b = f2(x, t);
                     const cplx ax = fd::dx1(f1, x, t, st.h), bx = fd::dx1(f2, x, t, st.h);
                     const cplx pot = 3. * (vv + 2. * uu * uu);
                     const cplx pot_x = 3. * (vx + 4. * uu * ux);
                     const cplx r1 = fd::dt1(f1, x, t, st.h) + fd::dx3(f1, x, t, st.h3) + pot_x * a + pot * ax
                                     + 3. * uxx * b + 3. * ux * bx;
                     const cplx r2 = fd::dt1(f2, x, t, st.h) + fd::dx3(f2, x, t, st.h3) + pot_x * b + pot * bx
                                     - 3. * uxx * a - 3. * ux * ax;
                     return std::abs(r1) >= std::abs(r2) ? r1 : r2;
                 });
}

residual_report residual_phi(const field_fn &u0x, const field_fn &phi, const residual_grid &grid,
                             const residual_options &opt)
{
    return sweep("phi: phi_t + phi_xxx + 6 (U0_x)^2 phi_x", grid, opt, [&](double x, double t, const fd_stencil &st) {
        const cplx w = u0x(x, t);
        return fd::dt1(phi, x, t, st.h) + fd::dx3(phi, x, t, st.h3) + 6. * w * w * fd::dx1(phi, x, t, st.h);
    });
}

grassmann<std::complex<double>> bosonized_pair(std::complex<double> fa, std::complex<double> fb, odd_generator zeta)
{
    using G = grassmann<std::complex<double>>;
    return G::generator(zeta, fa) * G::generator(zeta, fb);
}

std::function<bool(double, double)> exclude_near(std::function<std::vector<double>(double)> poles_at, double radius)
{
    return [poles_at = std::move(poles_at), radius](double x, double t) {
        for (double p : poles_at(t)) {
            if (std::abs(x - p) < radius) {
                return true;
            }
        }
        return false;
    };
}

} // namespace sskdv
