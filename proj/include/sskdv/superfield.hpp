#pragma once

#include <complex>
#include <concepts>
#include <ostream>
#include <string>
#include <utility>

#include <sskdv/errors.hpp>
#include <sskdv/expsum.hpp>
#include <sskdv/grassmann.hpp>
#include <sskdv/laurent.hpp>

namespace sskdv
{

// Backends a superfield can be built on: exp_sum<C> and laurent_xs<C>.
template <typename E>
concept scalar_expression = requires(const E &a, const E &b, const typename E::coeff_type &c, double x) {
    { a + b } -> std::convertible_to<E>;
    { a - b } -> std::convertible_to<E>;
    { a * b } -> std::convertible_to<E>;
    { c * a } -> std::convertible_to<E>;
    { dx(a) } -> std::convertible_to<E>;
    { dt(a) } -> std::convertible_to<E>;
    { a.parity() } -> std::same_as<parity>;
    { a.eval(x, x) } -> std::same_as<grassmann<std::complex<double>>>;
    { a.magnitude(x, x) } -> std::convertible_to<double>;
    { a.is_zero() } -> std::convertible_to<bool>;
};

// f(x, t; theta1) = body(x, t) + theta1 * soul(x, t), theta1 kept to the left of the soul.
// An even superfield has even body and odd soul coefficients; an odd one the reverse.
template <scalar_expression E>
class superfield
{
public:
    using expr_type = E;
    using coeff_type = typename E::coeff_type;

    superfield() = default;

    superfield(E body, E soul, sskdv::parity p = sskdv::parity::even) : m_body(std::move(body)), m_soul(std::move(soul)), m_parity(p)
    {
        if (p == sskdv::parity::mixed) {
            throw config_error("superfield parity must be even or odd");
        }
        const sskdv::parity other = (p == sskdv::parity::even) ? sskdv::parity::odd : sskdv::parity::even;
        if (!m_body.is_zero() && m_body.parity() != p) {
            throw config_error(std::string("superfield body is not ") + to_string(p));
        }
        if (!m_soul.is_zero() && m_soul.parity() != other) {
            throw config_error(std::string("superfield soul is not ") + to_string(other));
        }
    }

    const E &body() const noexcept
    {
        return m_body;
    }
    const E &soul() const noexcept
    {
        return m_soul;
    }
    sskdv::parity parity() const noexcept
    {
        return m_parity;
    }

    bool is_zero() const
    {
        return m_body.is_zero() && m_soul.is_zero();
    }

    double max_abs_coeff() const
    {
        return std::max(m_body.max_abs_coeff(), m_soul.max_abs_coeff());
    }

    friend superfield operator+(const superfield &a, const superfield &b)
    {
        return {a.m_body + b.m_body, a.m_soul + b.m_soul, combined_parity(a, b)};
    }
    friend superfield operator-(const superfield &a, const superfield &b)
    {
        return {a.m_body - b.m_body, a.m_soul - b.m_soul, combined_parity(a, b)};
    }
    friend superfield operator-(const superfield &a)
    {
        return {-a.m_body, -a.m_soul, a.m_parity};
    }

    // (a0 + th a1)(b0 + th b1) = a0 b0 + th (a1 b0 + (-1)^{|a0|} a0 b1).
    friend superfield operator*(const superfield &a, const superfield &b)
    {
        E cross = a.m_body * b.m_soul;
        E soul = a.m_soul * b.m_body;
        if (a.m_parity == sskdv::parity::odd) {
            soul -= cross;
        } else {
            soul += cross;
        }
        const auto p = (a.m_parity == b.m_parity) ? sskdv::parity::even : sskdv::parity::odd;
        return {a.m_body * b.m_body, std::move(soul), p};
    }

    friend superfield operator*(const coeff_type &c, const superfield &a)
    {
        return {c * a.m_body, c * a.m_soul, a.m_parity};
    }

    friend bool operator==(const superfield &a, const superfield &b)
    {
        return a.m_body == b.m_body && a.m_soul == b.m_soul && (a.m_parity == b.m_parity || a.is_zero());
    }

    friend superfield dx(const superfield &f)
    {
        return {dx(f.m_body), dx(f.m_soul), f.m_parity};
    }
    friend superfield dt(const superfield &f)
    {
        return {dt(f.m_body), dt(f.m_soul), f.m_parity};
    }

    // D1 = d/dtheta1 + theta1 d/dx:  (f0, f1) -> (f1, f0_x), parity flips.
    friend superfield d1(const superfield &f)
    {
        return {f.m_soul, dx(f.m_body), f.m_parity == sskdv::parity::even ? sskdv::parity::odd : sskdv::parity::even};
    }

private:
    static sskdv::parity combined_parity(const superfield &a, const superfield &b)
    {
        if (a.is_zero()) {
            return b.m_parity;
        }
        if (b.is_zero()) {
            return a.m_parity;
        }
        if (a.m_parity != b.m_parity) {
            throw config_error("adding superfields of different parity");
        }
        return a.m_parity;
    }

    E m_body;
    E m_soul;
    sskdv::parity m_parity = sskdv::parity::even;
};

template <scalar_expression E>
std::ostream &operator<<(std::ostream &os, const superfield<E> &f)
{
    return os << "{" << to_string(f.parity()) << " body: " << f.body() << " | soul: " << f.soul() << "}";
}

// Numerical (body, soul) at the point.
template <scalar_expression E>
std::pair<grassmann<std::complex<double>>, grassmann<std::complex<double>>> eval(const superfield<E> &f, double x,
                                                                                 double t)
{
    return {f.body().eval(x, t), f.soul().eval(x, t)};
}

template <scalar_expression E>
auto to_float(const superfield<E> &f)
{
    using F = decltype(f.body().to_float());
    return superfield<F>(f.body().to_float(), f.soul().to_float(), f.parity());
}

// Components of u^b = d/dx U^b, U^b = -i log(tau1/tau2), at one point.
struct log_ratio_jet {
    std::complex<double> u;                 // body of u^b
    std::complex<double> u_x;               // d/dx of u
    grassmann<std::complex<double>> xi1;    // soul of u^b
};

namespace detail
{

// Relative threshold below which a tau body is treated as vanishing.
inline constexpr double tau_zero_tolerance = 1e-14;

template <scalar_expression E>
grassmann<std::complex<double>> checked_body(const E &body, double x, double t, const char *name)
{
    auto v = body.eval(x, t);
    const double scale = body.magnitude(x, t);
    if (std::abs(v.body()) <= tau_zero_tolerance * scale) {
        throw singularity_error(name, std::string(name) + " body vanishes at (x, t) = (" + std::to_string(x) + ", "
                                          + std::to_string(t) + ")");
    }
    return v;
}

} // namespace detail

// Precomputes the tau derivatives needed for u^b so repeated point evaluation is cheap.
template <scalar_expression E>
class log_ratio_evaluator
{
public:
    log_ratio_evaluator(const superfield<E> &tau1, const superfield<E> &tau2)
        : m_b1(tau1.body()), m_b2(tau2.body()), m_b1x(dx(m_b1)), m_b2x(dx(m_b2)), m_b1xx(dx(m_b1x)),
          m_b2xx(dx(m_b2x)), m_s1(tau1.soul()), m_s2(tau2.soul()), m_s1x(dx(m_s1)), m_s2x(dx(m_s2))
    {
    }

    log_ratio_jet operator()(double x, double t) const
    {
        using G = grassmann<std::complex<double>>;
        const std::complex<double> minus_i{0., -1.};
        const G b1 = detail::checked_body(m_b1, x, t, "tau1");
        const G b2 = detail::checked_body(m_b2, x, t, "tau2");
        const G b1x = m_b1x.eval(x, t), b2x = m_b2x.eval(x, t);
        const G b1xx = m_b1xx.eval(x, t), b2xx = m_b2xx.eval(x, t);
        const G s1 = m_s1.eval(x, t), s2 = m_s2.eval(x, t);
        const G s1x = m_s1x.eval(x, t), s2x = m_s2x.eval(x, t);

        const G i1 = b1.inverse(), i2 = b2.inverse();
        // d/dx log b and d^2/dx^2 log b.
        const G l1 = b1x * i1, l2 = b2x * i2;
        const G l1x = b1xx * i1 - l1 * l1, l2x = b2xx * i2 - l2 * l2;
        // The soul of log tau is sigma / b; its x-derivative is (sigma_x b - sigma b_x) / b^2.
        const G q1 = (s1x * b1 - s1 * b1x) * i1 * i1;
        const G q2 = (s2x * b2 - s2 * b2x) * i2 * i2;

        return {(minus_i * (l1 - l2)).body(), (minus_i * (l1x - l2x)).body(), minus_i * (q1 - q2)};
    }

private:
    E m_b1, m_b2, m_b1x, m_b2x, m_b1xx, m_b2xx, m_s1, m_s2, m_s1x, m_s2x;
};

template <scalar_expression E>
log_ratio_jet log_ratio_derivatives(const superfield<E> &tau1, const superfield<E> &tau2, double x, double t)
{
    return log_ratio_evaluator<E>(tau1, tau2)(x, t);
}

// (u, xi1) of u^b = d/dx(-i log(tau1/tau2)).
template <scalar_expression E>
std::pair<std::complex<double>, grassmann<std::complex<double>>> log_ratio_dx(const superfield<E> &tau1,
                                                                              const superfield<E> &tau2, double x,
                                                                              double t)
{
    auto j = log_ratio_derivatives(tau1, tau2, x, t);
    return {j.u, std::move(j.xi1)};
}

} // namespace sskdv
