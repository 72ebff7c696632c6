#pragma once

#include <complex>
#include <utility>
#include <vector>

#include <sskdv/cubic.hpp>
#include <sskdv/fields.hpp>
#include <sskdv/grassmann.hpp>
#include <sskdv/laurent.hpp>
#include <sskdv/superfield.hpp>

namespace sskdv
{

// Dense univariate polynomial over Q(3^{1/3}); coeffs[k] multiplies z^k.
class cubic_poly
{
public:
    cubic_poly() = default;
    explicit cubic_poly(std::vector<cubic3> coeffs);

    const std::vector<cubic3> &coeffs() const noexcept
    {
        return m_coeffs;
    }
    // -1 for the zero polynomial.
    int degree() const noexcept
    {
        return static_cast<int>(m_coeffs.size()) - 1;
    }
    bool is_zero() const noexcept
    {
        return m_coeffs.empty();
    }
    cubic3 coeff(std::size_t k) const
    {
        return k < m_coeffs.size() ? m_coeffs[k] : cubic3{};
    }

    cubic_poly derivative() const;

    // Horner evaluation in floating point.
    double eval(double z) const;
    std::complex<double> eval(std::complex<double> z) const;

    friend cubic_poly operator+(const cubic_poly &a, const cubic_poly &b);
    friend cubic_poly operator-(const cubic_poly &a, const cubic_poly &b);
    friend cubic_poly operator*(const cubic_poly &a, const cubic_poly &b);
    friend cubic_poly operator*(const cubic3 &c, const cubic_poly &a);
    friend bool operator==(const cubic_poly &a, const cubic_poly &b)
    {
        return a.m_coeffs == b.m_coeffs;
    }

    // Polynomial long division; divisor must be nonzero.
    friend std::pair<cubic_poly, cubic_poly> divmod(const cubic_poly &num, const cubic_poly &den);

private:
    void normalize();

    std::vector<cubic3> m_coeffs;
};

// The n-th Yablonskii-Vorob'ev polynomial.
struct yv_poly {
    unsigned n = 0;
    cubic_poly poly;
};

// Q_0, ..., Q_nmax from 3^{1/3} Q_{n+1} Q_{n-1} = z Q_n^2 - 12 (Q_n Q_n'' - Q_n'^2),
// Q_0 = 3^{-1/3}, Q_1 = z. Throws std::logic_error if a division leaves a remainder.
std::vector<yv_poly> yv_sequence(unsigned nmax);

yv_poly yv_polynomial(unsigned n);

// tau_{1,n} = t^{n(n+1)/6} Q_n(z), tau_{2,n} = t^{(n+1)(n+2)/6} Q_{n+1}(z), z = t^{-1/3}(x + theta1 zeta),
// expanded in x and s = t^{1/3}.
std::pair<superfield<laurent_xs<cubic3>>, superfield<laurent_xs<cubic3>>>
similarity_tau(unsigned n, odd_generator zeta = odd_generator(0));

// s^d Q((x + theta1 zeta)/s) as a superfield, d = deg Q.
superfield<laurent_xs<cubic3>> homogenize(const cubic_poly &q, odd_generator zeta);

// u = i s^{-1} d/dz log(upper/lower) at z = x/s, s = t^{1/3}; f1 = d/dx u.
// Throws domain_error at t = 0 and singularity_error at zeros of either factor.
std::complex<double> similarity_u(const cubic_poly &upper, const cubic_poly &lower, double x, double t);
std::complex<double> similarity_f1(const cubic_poly &upper, const cubic_poly &lower, double x, double t);

// u_n = i t^{-1/3} d/dz0 log(Q_{n+1}/Q_n) and its x-derivative.
std::complex<double> yv_u(unsigned n, double x, double t);
std::complex<double> yv_f1(unsigned n, double x, double t);

// Field bundle of the n-th rational similarity solution, evaluated through the tau pipeline.
field_bundle similarity_fields(unsigned n, odd_generator zeta = odd_generator(0));

// Real x-positions at time t where tau_{1,n} or tau_{2,n} vanishes (poles of u_n).
std::vector<double> similarity_poles(unsigned n, double t);

// Real zeros of Q in z, ascending (all zeros of Q_n are simple).
std::vector<double> real_roots(const cubic_poly &q);

} // namespace sskdv
