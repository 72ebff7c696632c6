#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include <sskdv/coeff.hpp>
#include <sskdv/errors.hpp>

namespace sskdv
{

inline constexpr unsigned max_generators = 8;

// A monomial in the odd generators, stored as a bitmask: bit k set <=> generator k present.
// Reading the set bits in ascending order gives the canonical (strictly increasing) key.
using blade = std::uint8_t;

class odd_generator
{
public:
    explicit odd_generator(unsigned id) : m_id(static_cast<std::uint8_t>(id))
    {
        if (id >= max_generators) {
            throw config_error("odd generator id " + std::to_string(id) + " exceeds the table size "
                               + std::to_string(max_generators));
        }
    }

    unsigned id() const noexcept
    {
        return m_id;
    }

    blade mask() const noexcept
    {
        return static_cast<blade>(1u << m_id);
    }

    friend bool operator==(odd_generator a, odd_generator b) noexcept
    {
        return a.m_id == b.m_id;
    }

private:
    std::uint8_t m_id;
};

enum class parity { even, odd, mixed };

inline const char *to_string(parity p)
{
    switch (p) {
        case sskdv::parity::even:
            return "even";
        case sskdv::parity::odd:
            return "odd";
        default:
            return "mixed";
    }
}

inline unsigned grade(blade b) noexcept
{
    return static_cast<unsigned>(std::popcount(static_cast<unsigned>(b)));
}

// Sign picked up when the product of the ordered monomials a and b is brought into canonical
// order: (-1)^(number of pairs i in a, j in b with i > j). Zero if they share a generator.
inline int merge_sign(blade a, blade b) noexcept
{
    if ((a & b) != 0) {
        return 0;
    }
    unsigned inversions = 0;
    for (unsigned j = 0; j < max_generators; ++j) {
        if (b & (1u << j)) {
            inversions += grade(static_cast<blade>(a & ~((2u << j) - 1u)));
        }
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

template <coefficient C>
class grassmann
{
public:
    using coeff_type = C;
    using term_map = std::map<blade, C>;

    grassmann() = default;
    grassmann(C scalar)
    {
        if (!coeff_traits<C>::is_zero(scalar)) {
            m_terms.emplace(blade{0}, std::move(scalar));
        }
    }

    static grassmann generator(odd_generator g, C coeff = C(1))
    {
        grassmann r;
        r.add_term(g.mask(), std::move(coeff));
        return r;
    }

    static grassmann monomial(blade b, C coeff)
    {
        grassmann r;
        r.add_term(b, std::move(coeff));
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

    C coeff(blade b) const
    {
        auto it = m_terms.find(b);
        return it == m_terms.end() ? C(0) : it->second;
    }

    C body() const
    {
        return coeff(0);
    }

    grassmann soul() const
    {
        grassmann r = *this;
        r.m_terms.erase(blade{0});
        return r;
    }

    // Zero counts as even.
    sskdv::parity parity() const
    {
        bool has_even = false, has_odd = false;
        for (const auto &[b, c] : m_terms) {
            (grade(b) % 2 == 0 ? has_even : has_odd) = true;
        }
        if (has_even && has_odd) {
            return sskdv::parity::mixed;
        }
        return has_odd ? sskdv::parity::odd : sskdv::parity::even;
    }

    bool is_even() const
    {
        return parity() == sskdv::parity::even;
    }
    bool is_odd() const
    {
        return is_zero() || parity() == sskdv::parity::odd;
    }

    void add_term(blade b, C c)
    {
        if (coeff_traits<C>::is_zero(c)) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(b, std::move(c));
        if (!inserted) {
            it->second = it->second + c;
            if (coeff_traits<C>::is_zero(it->second)) {
                m_terms.erase(it);
            }
        }
    }

    grassmann &operator+=(const grassmann &o)
    {
        for (const auto &[b, c] : o.m_terms) {
            add_term(b, c);
        }
        return *this;
    }
    grassmann &operator-=(const grassmann &o)
    {
        for (const auto &[b, c] : o.m_terms) {
            add_term(b, -c);
        }
        return *this;
    }

    friend grassmann operator+(grassmann a, const grassmann &b)
    {
        return a += b;
    }
    friend grassmann operator-(grassmann a, const grassmann &b)
    {
        return a -= b;
    }
    friend grassmann operator-(const grassmann &a)
    {
        grassmann r;
        for (const auto &[b, c] : a.m_terms) {
            r.m_terms.emplace(b, -c);
        }
        return r;
    }

    friend grassmann operator*(const grassmann &x, const grassmann &y)
    {
        grassmann r;
        for (const auto &[bx, cx] : x.m_terms) {
            for (const auto &[by, cy] : y.m_terms) {
                const int s = merge_sign(bx, by);
                if (s == 0) {
                    continue;
                }
                C prod = cx * cy;
                r.add_term(static_cast<blade>(bx | by), s > 0 ? std::move(prod) : -prod);
            }
        }
        return r;
    }
    grassmann &operator*=(const grassmann &o)
    {
        return *this = *this * o;
    }

    // Scalars are central.
    friend grassmann operator*(const C &s, const grassmann &x)
    {
        grassmann r;
        for (const auto &[b, c] : x.m_terms) {
            r.add_term(b, s * c);
        }
        return r;
    }

    friend bool operator==(const grassmann &a, const grassmann &b)
    {
        return a.m_terms == b.m_terms;
    }
    friend bool operator!=(const grassmann &a, const grassmann &b)
    {
        return !(a == b);
    }

    // (b0 + n)^{-1} = b0^{-1} sum_k (-n b0^{-1})^k, terminating since n is nilpotent.
    grassmann inverse() const
    {
        const C b0 = body();
        if (coeff_traits<C>::is_zero(b0)) {
            throw domain_error("grassmann inverse: zero body");
        }
        const C inv0 = C(1) / b0;
        const grassmann step = -(inv0 * soul());
        grassmann power(C(1)), acc(C(1));
        for (unsigned k = 0; k < max_generators; ++k) {
            power = power * step;
            if (power.is_zero()) {
                break;
            }
            acc += power;
        }
        return inv0 * acc;
    }

    double max_abs_coeff() const
    {
        double m = 0;
        for (const auto &[b, c] : m_terms) {
            m = std::max(m, std::abs(coeff_traits<C>::to_complex(c)));
        }
        return m;
    }

    template <coefficient D, typename F>
    grassmann<D> map_coeffs(F &&f) const
    {
        grassmann<D> r;
        for (const auto &[b, c] : m_terms) {
            r.add_term(b, f(c));
        }
        return r;
    }

private:
    term_map m_terms;
};

template <coefficient C>
grassmann<std::complex<double>> to_float(const grassmann<C> &g)
{
    return g.template map_coeffs<std::complex<double>>([](const C &c) { return coeff_traits<C>::to_complex(c); });
}

template <coefficient C>
std::ostream &operator<<(std::ostream &os, const grassmann<C> &g)
{
    if (g.is_zero()) {
        return os << '0';
    }
    bool first = true;
    for (const auto &[b, c] : g.terms()) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << '(' << c << ')';
        for (unsigned k = 0; k < max_generators; ++k) {
            if (b & (1u << k)) {
                os << "*zeta" << k;
            }
        }
    }
    return os;
}

} // namespace sskdv
