#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace sskdv
{

using rational = boost::multiprecision::mpq_rational;

// Parses "3", "-7/4", "0.125", "1e-3", "2.5e2" exactly.
rational parse_rational(std::string_view s);

std::string to_string(const rational &q);

double to_double(const rational &q);

// Exact complex number with rational real and imaginary parts.
class qcomplex
{
public:
    qcomplex() = default;
    qcomplex(int re) : m_re(re) {}
    qcomplex(rational re) : m_re(std::move(re)) {}
    qcomplex(rational re, rational im) : m_re(std::move(re)), m_im(std::move(im)) {}

    static qcomplex i()
    {
        return {rational(0), rational(1)};
    }

    const rational &real() const noexcept
    {
        return m_re;
    }
    const rational &imag() const noexcept
    {
        return m_im;
    }

    bool is_zero() const
    {
        return m_re == 0 && m_im == 0;
    }

    qcomplex conj() const
    {
        return {m_re, -m_im};
    }

    rational norm() const
    {
        return m_re * m_re + m_im * m_im;
    }

    qcomplex &operator+=(const qcomplex &o)
    {
        m_re += o.m_re;
        m_im += o.m_im;
        return *this;
    }
    qcomplex &operator-=(const qcomplex &o)
    {
        m_re -= o.m_re;
        m_im -= o.m_im;
        return *this;
    }
    qcomplex &operator*=(const qcomplex &o)
    {
        rational re = m_re * o.m_re - m_im * o.m_im;
        rational im = m_re * o.m_im + m_im * o.m_re;
        m_re = std::move(re);
        m_im = std::move(im);
        return *this;
    }
    // Throws std::domain_error on division by zero.
    qcomplex &operator/=(const qcomplex &o);

    friend qcomplex operator+(qcomplex a, const qcomplex &b)
    {
        return a += b;
    }
    friend qcomplex operator-(qcomplex a, const qcomplex &b)
    {
        return a -= b;
    }
    friend qcomplex operator*(qcomplex a, const qcomplex &b)
    {
        return a *= b;
    }
    friend qcomplex operator/(qcomplex a, const qcomplex &b)
    {
        return a /= b;
    }
    friend qcomplex operator-(const qcomplex &a)
    {
        return {-a.m_re, -a.m_im};
    }
    friend bool operator==(const qcomplex &a, const qcomplex &b)
    {
        return a.m_re == b.m_re && a.m_im == b.m_im;
    }
    friend bool operator!=(const qcomplex &a, const qcomplex &b)
    {
        return !(a == b);
    }
    // Lexicographic (real, imag); only used to canonicalize containers.
    friend bool operator<(const qcomplex &a, const qcomplex &b)
    {
        if (a.m_re != b.m_re) {
            return a.m_re < b.m_re;
        }
        return a.m_im < b.m_im;
    }

    std::complex<double> to_complex() const
    {
        return {to_double(m_re), to_double(m_im)};
    }

private:
    rational m_re{0};
    rational m_im{0};
};

// Accepts "i", "-i", "2i", "1/2", "0.5-1.5i", "1+i", "3/4i".
qcomplex parse_qcomplex(std::string_view s);

std::string to_string(const qcomplex &z);

std::ostream &operator<<(std::ostream &os, const qcomplex &z);

} // namespace sskdv
