#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include <sskdv/coeff.hpp>
#include <sskdv/grassmann.hpp>

namespace sskdv
{

// Linear phase kappa*x + omega*t.
template <coefficient C>
struct phase {
    C kappa{0};
    C omega{0};

    friend phase operator+(const phase &a, const phase &b)
    {
        return {a.kappa + b.kappa, a.omega + b.omega};
    }
    friend bool operator==(const phase &a, const phase &b)
    {
        return a.kappa == b.kappa && a.omega == b.omega;
    }
};

template <coefficient C>
struct phase_less {
    bool operator()(const phase<C> &a, const phase<C> &b) const
    {
        if (coeff_traits<C>::less(a.kappa, b.kappa)) {
            return true;
        }
        if (coeff_traits<C>::less(b.kappa, a.kappa)) {
            return false;
        }
        return coeff_traits<C>::less(a.omega, b.omega);
    }
};

// Finite sum  sum_p c_p exp(kappa_p x + omega_p t)  with Grassmann coefficients.
template <coefficient C>
class exp_sum
{
public:
    using coeff_type = C;
    using term_map = std::map<phase<C>, grassmann<C>, phase_less<C>>;

    exp_sum() = default;
    exp_sum(grassmann<C> constant)
    {
        add_term(phase<C>{}, std::move(constant));
    }
    exp_sum(C constant) : exp_sum(grassmann<C>(std::move(constant))) {}

    static exp_sum exponential(C kappa, C omega, grassmann<C> coeff = grassmann<C>(C(1)))
    {
        exp_sum r;
        r.add_term(phase<C>{std::move(kappa), std::move(omega)}, std::move(coeff));
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

    void add_term(const phase<C> &p, grassmann<C> c)
    {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(p, std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                m_terms.erase(it);
            }
        }
    }

    // Parity of the combined coefficient content; zero counts as even.
    sskdv::parity parity() const
    {
        bool has_even = false, has_odd = false;
        for (const auto &[p, c] : m_terms) {
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
        for (const auto &[p, c] : m_terms) {
            m = std::max(m, c.max_abs_coeff());
        }
        return m;
    }

    exp_sum &operator+=(const exp_sum &o)
    {
        for (const auto &[p, c] : o.m_terms) {
            add_term(p, c);
        }
        return *this;
    }
    exp_sum &operator-=(const exp_sum &o)
    {
        for (const auto &[p, c] : o.m_terms) {
            add_term(p, -c);
        }
        return *this;
    }
    friend exp_sum operator+(exp_sum a, const exp_sum &b)
    {
        return a += b;
    }
    friend exp_sum operator-(exp_sum a, const exp_sum &b)
    {
        return a -= b;
    }
    friend exp_sum operator-(const exp_sum &a)
    {
        exp_sum r;
        for (const auto &[p, c] : a.m_terms) {
            r.add_term(p, -c);
        }
        return r;
    }

    // Coefficient order is preserved: (c e^p)(d e^q) = (c d) e^{p+q}.
    friend exp_sum operator*(const exp_sum &a, const exp_sum &b)
    {
        exp_sum r;
        for (const auto &[pa, ca] : a.m_terms) {
            for (const auto &[pb, cb] : b.m_terms) {
                r.add_term(pa + pb, ca * cb);
            }
        }
        return r;
    }

    friend exp_sum operator*(const C &s, const exp_sum &a)
    {
        exp_sum r;
        for (const auto &[p, c] : a.m_terms) {
            r.add_term(p, s * c);
        }
        return r;
    }

    friend bool operator==(const exp_sum &a, const exp_sum &b)
    {
        return a.m_terms == b.m_terms;
    }

    friend exp_sum dx(const exp_sum &a)
    {
        exp_sum r;
        for (const auto &[p, c] : a.m_terms) {
            r.add_term(p, p.kappa * c);
        }
        return r;
    }

    friend exp_sum dt(const exp_sum &a)
    {
        exp_sum r;
        for (const auto &[p, c] : a.m_terms) {
            r.add_term(p, p.omega * c);
        }
        return r;
    }

    grassmann<std::complex<double>> eval(double x, double t) const
    {
        grassmann<std::complex<double>> r;
        for (const auto &[p, c] : m_terms) {
            const auto k = coeff_traits<C>::to_complex(p.kappa);
            const auto w = coeff_traits<C>::to_complex(p.omega);
            r += std::exp(k * x + w * t) * sskdv::to_float(c);
        }
        return r;
    }

    // Sum of term magnitudes at (x, t); the scale against which cancellation to zero is judged.
    double magnitude(double x, double t) const
    {
        double m = 0;
        for (const auto &[p, c] : m_terms) {
            const auto k = coeff_traits<C>::to_complex(p.kappa);
            const auto w = coeff_traits<C>::to_complex(p.omega);
            m += std::exp((k * x + w * t).real()) * c.max_abs_coeff();
        }
        return m;
    }

    template <coefficient D, typename F>
    exp_sum<D> map_coeffs(F &&f) const
    {
        exp_sum<D> r;
        for (const auto &[p, c] : m_terms) {
            r.add_term(phase<D>{f(p.kappa), f(p.omega)}, c.template map_coeffs<D>(f));
        }
        return r;
    }

    exp_sum<std::complex<double>> to_float() const
    {
        return map_coeffs<std::complex<double>>([](const C &c) { return coeff_traits<C>::to_complex(c); });
    }

private:
    term_map m_terms;
};

// Floating sums can hold one phase under several keys that differ in the last bits (0.7 + 0.4 vs 1.1),
// so cancelling terms never meet. Terms whose phases agree to tol (relative) are summed onto one key.
inline exp_sum<std::complex<double>> merge_close_phases(const exp_sum<std::complex<double>> &e, double tol = 1e-12)
{
    using P = phase<std::complex<double>>;
    std::vector<std::pair<P, grassmann<std::complex<double>>>> groups;
    for (const auto &[p, c] : e.terms()) {
        const double scale = std::max(1., std::abs(p.kappa) + std::abs(p.omega));
        auto it = std::find_if(groups.begin(), groups.end(), [&](const auto &g) {
            return std::abs(g.first.kappa - p.kappa) + std::abs(g.first.omega - p.omega) <= tol * scale;
        });
        if (it == groups.end()) {
            groups.emplace_back(p, c);
        } else {
            it->second += c;
        }
    }
    exp_sum<std::complex<double>> r;
    for (auto &[p, c] : groups) {
        r.add_term(p, std::move(c));
    }
    return r;
}

template <coefficient C>
std::ostream &operator<<(std::ostream &os, const exp_sum<C> &e)
{
    if (e.is_zero()) {
        return os << '0';
    }
    bool first = true;
    for (const auto &[p, c] : e.terms()) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << '[' << c << "]*exp((" << p.kappa << ")x + (" << p.omega << ")t)";
    }
    return os;
}

} // namespace sskdv
