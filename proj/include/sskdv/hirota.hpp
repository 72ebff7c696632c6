#pragma once

#include <algorithm>
#include <complex>
#include <type_traits>
#include <utility>
#include <vector>

#include <sskdv/errors.hpp>
#include <sskdv/expsum.hpp>
#include <sskdv/rational.hpp>
#include <sskdv/superfield.hpp>

namespace sskdv
{

namespace detail
{

inline rational binomial(unsigned n, unsigned k)
{
    rational r(1);
    for (unsigned j = 1; j <= k; ++j) {
        r = r * rational(n - k + j) / rational(j);
    }
    return r;
}

// table[i][k] = dx^i dt^k f
template <typename T>
std::vector<std::vector<T>> derivative_table(const T &f, unsigned n, unsigned m)
{
    std::vector<std::vector<T>> table(n + 1, std::vector<T>(m + 1));
    table[0][0] = f;
    for (unsigned i = 0; i <= n; ++i) {
        if (i > 0) {
            table[i][0] = dx(table[i - 1][0]);
        }
        for (unsigned k = 1; k <= m; ++k) {
            table[i][k] = dt(table[i][k - 1]);
        }
    }
    return table;
}

} // namespace detail

// D_x^n D_t^m (f . g) = sum_{j,k} (-1)^{j+k} C(n,j) C(m,k) (dx^{n-j} dt^{m-k} f)(dx^j dt^k g).
// T is a scalar expression or a superfield; products keep f on the left.
template <typename T>
T hirota_dx_dt(unsigned n, unsigned m, const T &f, const T &g)
{
    using C = typename T::coeff_type;
    const auto ft = detail::derivative_table(f, n, m);
    const auto gt = detail::derivative_table(g, n, m);
    T acc;
    for (unsigned j = 0; j <= n; ++j) {
        for (unsigned k = 0; k <= m; ++k) {
            rational w = detail::binomial(n, j) * detail::binomial(m, k);
            if ((j + k) % 2 == 1) {
                w = -w;
            }
            acc = acc + coeff_traits<C>::from_rational(w) * (ft[n - j][m - k] * gt[j][k]);
        }
    }
    return acc;
}

// SD_x^n(tau1 . tau2) = (D_Theta1 - D_Theta2)(d_x1 - d_x2)^n tau1(x1; Theta1) tau2(x2; Theta2) at coincidence.
// For even tau's D_Theta2 passes tau1 without a sign, giving H^n(D1 tau1, tau2) - H^n(tau1, D1 tau2).
template <scalar_expression E>
superfield<E> super_hirota_sdx(unsigned n, const superfield<E> &tau1, const superfield<E> &tau2)
{
    if (tau1.parity() != parity::even || tau2.parity() != parity::even) {
        throw config_error("super Hirota derivative requires even tau superfields");
    }
    return hirota_dx_dt(n, 0, d1(tau1), tau2) - hirota_dx_dt(n, 0, tau1, d1(tau2));
}

// Largest coefficient among the individual summands of D_x^n D_t^m (f . g): the scale of the
// cancellation a floating-point residual is measured against.
template <typename T>
double hirota_term_scale(unsigned n, unsigned m, const T &f, const T &g)
{
    const auto ft = detail::derivative_table(f, n, m);
    const auto gt = detail::derivative_table(g, n, m);
    double scale = 0;
    for (unsigned j = 0; j <= n; ++j) {
        for (unsigned k = 0; k <= m; ++k) {
            const double w = to_double(detail::binomial(n, j) * detail::binomial(m, k));
            scale = std::max(scale, w * (ft[n - j][m - k] * gt[j][k]).max_abs_coeff());
        }
    }
    return scale;
}

template <scalar_expression E>
struct bilinear_residual {
    superfield<E> expression;
    bool is_zero = false;
    double max_abs_coeff = 0;
    double scale = 0; // largest summand, see hirota_term_scale

    bilinear_residual(superfield<E> e, double summand_scale)
        : expression(std::move(e)), is_zero(expression.is_zero()), max_abs_coeff(expression.max_abs_coeff()),
          scale(summand_scale)
    {
        if constexpr (std::is_same_v<E, exp_sum<std::complex<double>>>) {
            max_abs_coeff = std::max(merge_close_phases(expression.body()).max_abs_coeff(),
                                     merge_close_phases(expression.soul()).max_abs_coeff());
        }
    }

    // max_abs_coeff / max(1, scale)
    double relative() const
    {
        return max_abs_coeff / std::max(1., scale);
    }
};

// Residuals of (D_t + D_x^3)(tau1 . tau2) and SD_x(tau1 . tau2).
// With exact coefficients is_zero is an exact normal-form test.
template <scalar_expression E>
std::pair<bilinear_residual<E>, bilinear_residual<E>> verify_bilinear(const superfield<E> &tau1,
                                                                      const superfield<E> &tau2)
{
    auto first = hirota_dx_dt(0, 1, tau1, tau2) + hirota_dx_dt(3, 0, tau1, tau2);
    auto second = super_hirota_sdx(1, tau1, tau2);
    const double s1 = std::max(hirota_term_scale(0, 1, tau1, tau2), hirota_term_scale(3, 0, tau1, tau2));
    const double s2 = std::max(hirota_term_scale(1, 0, d1(tau1), tau2), hirota_term_scale(1, 0, tau1, d1(tau2)));
    return {bilinear_residual<E>(std::move(first), s1), bilinear_residual<E>(std::move(second), s2)};
}

} // namespace sskdv
