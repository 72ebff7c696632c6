#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include <sskdv/rational.hpp>

namespace sskdv
{

// Coefficient rings usable inside grassmann<C>, exp_sum<C> and laurent_xs<C>.
// Specializations: qcomplex (exact), std::complex<double> (float), cubic3 (exact, in cubic.hpp).
template <typename C>
struct coeff_traits;

template <>
struct coeff_traits<qcomplex> {
    static constexpr bool exact = true;

    static bool is_zero(const qcomplex &c)
    {
        return c.is_zero();
    }
    static std::complex<double> to_complex(const qcomplex &c)
    {
        return c.to_complex();
    }
    static qcomplex from_rational(const rational &q)
    {
        return qcomplex(q);
    }
    static qcomplex from_qcomplex(const qcomplex &q)
    {
        return q;
    }
    static bool less(const qcomplex &a, const qcomplex &b)
    {
        return a < b;
    }
};

template <>
struct coeff_traits<std::complex<double>> {
    static constexpr bool exact = false;

    static bool is_zero(const std::complex<double> &c)
    {
        return c == std::complex<double>{};
    }
    static std::complex<double> to_complex(const std::complex<double> &c)
    {
        return c;
    }
    static std::complex<double> from_rational(const rational &q)
    {
        return {to_double(q), 0.};
    }
    static std::complex<double> from_qcomplex(const qcomplex &q)
    {
        return q.to_complex();
    }
    static bool less(const std::complex<double> &a, const std::complex<double> &b)
    {
        if (a.real() != b.real()) {
            return a.real() < b.real();
        }
        return a.imag() < b.imag();
    }
};

template <typename C>
concept coefficient = requires(const C &a, const C &b) {
    { a + b } -> std::convertible_to<C>;
    { a - b } -> std::convertible_to<C>;
    { a * b } -> std::convertible_to<C>;
    { -a } -> std::convertible_to<C>;
    { coeff_traits<C>::is_zero(a) } -> std::convertible_to<bool>;
};

} // namespace sskdv
