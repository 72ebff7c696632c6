#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include <sskdv/coeff.hpp>
#include <sskdv/errors.hpp>
#include <sskdv/grassmann.hpp>

namespace sskdv
{

// |s-exponent| ceiling; exceeding it is an overflow_error rather than wraparound.
inline constexpr int max_s_exponent = 4096;

struct xs_exponent {
    int x = 0; // >= 0
    int s = 0; // s = t^{1/3}, any sign

    friend bool operator<(const xs_exponent &a, const xs_exponent &b)
    {
        return a.x != b.x ? a.x < b.x : a.s < b.s;
    }
    friend bool operator==(const xs_exponent &a, const xs_exponent &b)
    {
        return a.x == b.x && a.s == b.s;
    }
};

inline int checked_s_exponent(long e)
{
    if (e > max_s_exponent || e < -max_s_exponent) {
        throw std::overflow_error("s-exponent " + std::to_string(e) + " outside [-" + std::to_string(max_s_exponent)
                                  + ", " + std::to_string(max_s_exponent) + "]");
    }
    return static_cast<int>(e);
}

// Laurent polynomial  sum c_{a,b} x^a s^b  in x and s = t^{1/3}, Grassmann coefficients.
template <coefficient C>
class laurent_xs
{
public:
    using coeff_type = C;
    using term_map = std::map<xs_exponent, grassmann<C>>;

    laurent_xs() = default;
    laurent_xs(grassmann<C> constant)
    {
        add_term({0, 0}, std::move(constant));
    }
    laurent_xs(C constant) : laurent_xs(grassmann<C>(std::move(constant))) {}

    static laurent_xs monomial(int xexp, int sexp, grassmann<C> coeff = grassmann<C>(C(1)))
    {
        if (xexp < 0) {
            throw config_error("negative x exponent in laurent_xs");
        }
        laurent_xs r;
        r.add_term({xexp, checked_s_exponent(sexp)}, std::move(coeff));
        return r;
    }

    const term_map &terms() const noexcept
    {
        return m_terms;
    }

    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }

    void add_term(const xs_exponent &e, grassmann<C> c)
    {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(e, std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                m_terms.erase(it);
            }
        }
    }

    sskdv::parity parity() const
    {
        bool has_even = false, has_odd = false;
        for (const auto &[e, c] : m_terms) {
            switch (c.parity()) {
                case sskdv::parity::even:
                    has_even = true;
                    break;
                case sskdv::parity::odd:
                    has_odd = true;
                    break;
                default:
                    return sskdv::parity::mixed;
            }
        }
        if (has_even && has_odd) {
            return sskdv::parity::mixed;
        }
        return has_odd ? sskdv::parity::odd : sskdv::parity::even;
    }

    double max_abs_coeff() const
    {
        double m = 0;
        for (const auto &[e, c] : m_terms) {
            m = std::max(m, c.max_abs_coeff());
        }
        return m;
    }

    bool has_negative_s() const
    {
        for (const auto &[e, c] : m_terms) {
            if (e.s < 0) {
                return true;
            }
        }
        return false;
    }

    laurent_xs &operator+=(const laurent_xs &o)
    {
        for (const auto &[e, c] : o.m_terms) {
            add_term(e, c);
        }
        return *this;
    }
    laurent_xs &operator-=(const laurent_xs &o)
    {
        for (const auto &[e, c] : o.m_terms) {
            add_term(e, -c);
        }
        return *this;
    }
    friend laurent_xs operator+(laurent_xs a, const laurent_xs &b)
    {
        return a += b;
    }
    friend laurent_xs operator-(laurent_xs a, const laurent_xs &b)
    {
        return a -= b;
    }
    friend laurent_xs operator-(const laurent_xs &a)
    {
        laurent_xs r;
        for (const auto &[e, c] : a.m_terms) {
            r.add_term(e, -c);
        }
        return r;
    }

    friend laurent_xs operator*(const laurent_xs &a, const laurent_xs &b)
    {
        laurent_xs r;
        for (const auto &[ea, ca] : a.m_terms) {
            for (const auto &[eb, cb] : b.m_terms) {
                r.add_term({ea.x + eb.x, checked_s_exponent(static_cast<long>(ea.s) + eb.s)}, ca * cb);
            }
        }
        return r;
    }

    friend laurent_xs operator*(const C &k, const laurent_xs &a)
    {
        laurent_xs r;
        for (const auto &[e, c] : a.m_terms) {
            r.add_term(e, k * c);
        }
        return r;
    }

    friend bool operator==(const laurent_xs &a, const laurent_xs &b)
    {
        return a.m_terms == b.m_terms;
    }

    friend laurent_xs dx(const laurent_xs &a)
    {
        laurent_xs r;
        for (const auto &[e, c] : a.m_terms) {
            if (e.x > 0) {
                r.add_term({e.x - 1, e.s}, coeff_traits<C>::from_rational(rational(e.x)) * c);
            }
        }
        return r;
    }

    // d/dt = (1/3) s^{-2} d/ds.
    friend laurent_xs dt(const laurent_xs &a)
    {
        laurent_xs r;
        for (const auto &[e, c] : a.m_terms) {
            if (e.s != 0) {
                r.add_term({e.x, checked_s_exponent(static_cast<long>(e.s) - 3)},
                           coeff_traits<C>::from_rational(rational(e.s, 3)) * c);
            }
        }
        return r;
    }

    // Real cube root convention s = sign(t)|t|^{1/3}.
    grassmann<std::complex<double>> eval(double x, double t) const
    {
        const double s = std::cbrt(t);
        if (t == 0 && has_negative_s()) {
            throw domain_error("laurent_xs: t = 0 with negative powers of t^{1/3}");
        }
        grassmann<std::complex<double>> r;
        for (const auto &[e, c] : m_terms) {
            const double m = std::pow(x, e.x) * std::pow(s, e.s);
            r += std::complex<double>(m, 0.) * sskdv::to_float(c);
        }
        return r;
    }

    double magnitude(double x, double t) const
    {
        const double s = std::cbrt(t);
        double m = 0;
        for (const auto &[e, c] : m_terms) {
            m += std::abs(std::pow(x, e.x) * std::pow(s, e.s)) * c.max_abs_coeff();
        }
        return m;
    }

    template <coefficient D, typename F>
    laurent_xs<D> map_coeffs(F &&f) const
    {
        laurent_xs<D> r;
        for (const auto &[e, c] : m_terms) {
            r.add_term(e, c.template map_coeffs<D>(f));
        }
        return r;
    }

    laurent_xs<std::complex<double>> to_float() const
    {
        return map_coeffs<std::complex<double>>([](const C &c) { return coeff_traits<C>::to_complex(c); });
    }

private:
    term_map m_terms;
};

template <coefficient C>
std::ostream &operator<<(std::ostream &os, const laurent_xs<C> &p)
{
    if (p.is_zero()) {
        return os << '0';
    }
    bool first = true;
    for (const auto &[e, c] : p.terms()) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << '[' << c << "]*x^" << e.x << "*s^" << e.s;
    }
    return os;
}

} // namespace sskdv
