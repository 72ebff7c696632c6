#pragma once

#include <complex>
#include <ostream>
#include <string>

#include <sskdv/coeff.hpp>
#include <sskdv/rational.hpp>

namespace sskdv
{

// Element a + b*3^{1/3} + c*3^{2/3} of the cubic field Q(3^{1/3}).
class cubic3
{
public:
    cubic3() = default;
    cubic3(int a) : m_a(a) {}
    cubic3(rational a) : m_a(std::move(a)) {}
    cubic3(rational a, rational b, rational c) : m_a(std::move(a)), m_b(std::move(b)), m_c(std::move(c)) {}

    // 3^{1/3}
    static cubic3 root()
    {
        return {rational(0), rational(1), rational(0)};
    }

    const rational &a() const noexcept
    {
        return m_a;
    }
    const rational &b() const noexcept
    {
        return m_b;
    }
    const rational &c() const noexcept
    {
        return m_c;
    }

    bool is_zero() const
    {
        return m_a == 0 && m_b == 0 && m_c == 0;
    }

    // a^3 + 3b^3 + 9c^3 - 9abc; nonzero for every nonzero element.
    rational norm() const;
    // Throws std::domain_error for zero.
    cubic3 inverse() const;

    double to_double() const;

    cubic3 &operator+=(const cubic3 &o)
    {
        m_a += o.m_a;
        m_b += o.m_b;
        m_c += o.m_c;
        return *this;
    }
    cubic3 &operator-=(const cubic3 &o)
    {
        m_a -= o.m_a;
        m_b -= o.m_b;
        m_c -= o.m_c;
        return *this;
    }
    cubic3 &operator*=(const cubic3 &o);
    cubic3 &operator/=(const cubic3 &o)
    {
        return *this *= o.inverse();
    }

    friend cubic3 operator+(cubic3 x, const cubic3 &y)
    {
        return x += y;
    }
    friend cubic3 operator-(cubic3 x, const cubic3 &y)
    {
        return x -= y;
    }
    friend cubic3 operator*(cubic3 x, const cubic3 &y)
    {
        return x *= y;
    }
    friend cubic3 operator/(cubic3 x, const cubic3 &y)
    {
        return x /= y;
    }
    friend cubic3 operator-(const cubic3 &x)
    {
        return {-x.m_a, -x.m_b, -x.m_c};
    }
    friend bool operator==(const cubic3 &x, const cubic3 &y)
    {
        return x.m_a == y.m_a && x.m_b == y.m_b && x.m_c == y.m_c;
    }
    friend bool operator!=(const cubic3 &x, const cubic3 &y)
    {
        return !(x == y);
    }
    friend bool operator<(const cubic3 &x, const cubic3 &y)
    {
        if (x.m_a != y.m_a) {
            return x.m_a < y.m_a;
        }
        if (x.m_b != y.m_b) {
            return x.m_b < y.m_b;
        }
        return x.m_c < y.m_c;
    }

private:
    rational m_a{0};
    rational m_b{0};
    rational m_c{0};
};

std::string to_string(const cubic3 &x);

std::ostream &operator<<(std::ostream &os, const cubic3 &x);

template <>
struct coeff_traits<cubic3> {
    static constexpr bool exact = true;

    static bool is_zero(const cubic3 &c)
    {
        return c.is_zero();
    }
    static std::complex<double> to_complex(const cubic3 &c)
    {
        return {c.to_double(), 0.};
    }
    static cubic3 from_rational(const rational &q)
    {
        return cubic3(q);
    }
    // Throws config_error if q has a nonzero imaginary part.
    static cubic3 from_qcomplex(const qcomplex &q);
    static bool less(const cubic3 &x, const cubic3 &y)
    {
        return x < y;
    }
};

} // namespace sskdv
