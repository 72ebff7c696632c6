#include <sskdv/cubic.hpp>
#include <sskdv/errors.hpp>

#include <cmath>
#include <stdexcept>

namespace sskdv
{

cubic3 &cubic3::operator*=(const cubic3 &o)
{
    // r^3 = 3, r^4 = 3r.
    rational a = m_a * o.m_a + 3 * (m_b * o.m_c + m_c * o.m_b);
    rational b = m_a * o.m_b + m_b * o.m_a + 3 * (m_c * o.m_c);
    rational c = m_a * o.m_c + m_b * o.m_b + m_c * o.m_a;
    m_a = std::move(a);
    m_b = std::move(b);
    m_c = std::move(c);
    return *this;
}

rational cubic3::norm() const
{
    return m_a * m_a * m_a + 3 * m_b * m_b * m_b + 9 * m_c * m_c * m_c - 9 * m_a * m_b * m_c;
}

cubic3 cubic3::inverse() const
{
    const rational n = norm();
    if (n == 0) {
        throw std::domain_error("cubic3 inverse of zero");
    }
    return {(m_a * m_a - 3 * m_b * m_c) / n, (3 * m_c * m_c - m_a * m_b) / n, (m_b * m_b - m_a * m_c) / n};
}

double cubic3::to_double() const
{
    static const double r = std::cbrt(3.0);
    return sskdv::to_double(m_a) + sskdv::to_double(m_b) * r + sskdv::to_double(m_c) * r * r;
}

std::string to_string(const cubic3 &x)
{
    return "(" + to_string(x.a()) + "," + to_string(x.b()) + "," + to_string(x.c()) + ")";
}

std::ostream &operator<<(std::ostream &os, const cubic3 &x)
{
    return os << to_string(x);
}

cubic3 coeff_traits<cubic3>::from_qcomplex(const qcomplex &q)
{
    if (q.imag() != 0) {
        throw config_error("complex value " + to_string(q) + " has no Q(3^{1/3}) representation");
    }
    return cubic3(q.real());
}

} // namespace sskdv
