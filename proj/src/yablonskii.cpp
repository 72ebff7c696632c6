#include <sskdv/yablonskii.hpp>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>

namespace sskdv
{

cubic_poly::cubic_poly(std::vector<cubic3> coeffs) : m_coeffs(std::move(coeffs))
{
    normalize();
}

void cubic_poly::normalize()
{
    while (!m_coeffs.empty() && m_coeffs.back().is_zero()) {
        m_coeffs.pop_back();
    }
}

cubic_poly cubic_poly::derivative() const
{
    if (m_coeffs.size() <= 1) {
        return {};
    }
    std::vector<cubic3> d(m_coeffs.size() - 1);
    for (std::size_t k = 1; k < m_coeffs.size(); ++k) {
        d[k - 1] = cubic3(rational(static_cast<long>(k))) * m_coeffs[k];
    }
    return cubic_poly(std::move(d));
}

double cubic_poly::eval(double z) const
{
    double r = 0;
    for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
        r = r * z + it->to_double();
    }
    return r;
}

std::complex<double> cubic_poly::eval(std::complex<double> z) const
{
    std::complex<double> r = 0;
    for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
        r = r * z + it->to_double();
    }
    return r;
}

cubic_poly operator+(const cubic_poly &a, const cubic_poly &b)
{
    std::vector<cubic3> r(std::max(a.m_coeffs.size(), b.m_coeffs.size()));
    for (std::size_t k = 0; k < r.size(); ++k) {
        r[k] = a.coeff(k) + b.coeff(k);
    }
    return cubic_poly(std::move(r));
}

cubic_poly operator-(const cubic_poly &a, const cubic_poly &b)
{
    std::vector<cubic3> r(std::max(a.m_coeffs.size(), b.m_coeffs.size()));
    for (std::size_t k = 0; k < r.size(); ++k) {
        r[k] = a.coeff(k) - b.coeff(k);
    }
    return cubic_poly(std::move(r));
}

cubic_poly operator*(const cubic_poly &a, const cubic_poly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<cubic3> r(a.m_coeffs.size() + b.m_coeffs.size() - 1);
    for (std::size_t i = 0; i < a.m_coeffs.size(); ++i) {
        if (a.m_coeffs[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.m_coeffs.size(); ++j) {
            if (!b.m_coeffs[j].is_zero()) {
                r[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
            }
        }
    }
    return cubic_poly(std::move(r));
}

cubic_poly operator*(const cubic3 &c, const cubic_poly &a)
{
    std::vector<cubic3> r(a.m_coeffs.size());
    for (std::size_t k = 0; k < r.size(); ++k) {
        r[k] = c * a.m_coeffs[k];
    }
    return cubic_poly(std::move(r));
}

std::pair<cubic_poly, cubic_poly> divmod(const cubic_poly &num, const cubic_poly &den)
{
    if (den.is_zero()) {
        throw std::domain_error("cubic_poly division by zero polynomial");
    }
    std::vector<cubic3> rem = num.m_coeffs;
    const int dd = den.degree();
    if (num.degree() < dd) {
        return {cubic_poly{}, num};
    }
    std::vector<cubic3> quot(static_cast<std::size_t>(num.degree() - dd + 1));
    const cubic3 lead_inv = den.m_coeffs.back().inverse();
    for (int k = num.degree() - dd; k >= 0; --k) {
        const cubic3 q = rem[static_cast<std::size_t>(k + dd)] * lead_inv;
        quot[static_cast<std::size_t>(k)] = q;
        if (q.is_zero()) {
            continue;
        }
        for (int j = 0; j <= dd; ++j) {
            rem[static_cast<std::size_t>(k + j)] -= q * den.m_coeffs[static_cast<std::size_t>(j)];
        }
    }
    return {cubic_poly(std::move(quot)), cubic_poly(std::move(rem))};
}

namespace
{

std::vector<yv_poly> compute_sequence(unsigned nmax)
{
    std::vector<yv_poly> seq;
    // Q_0 = 3^{-1/3} = 3^{2/3}/3
    seq.push_back({0, cubic_poly({cubic3(rational(0), rational(0), rational(1, 3))})});
    if (nmax == 0) {
        return seq;
    }
    seq.push_back({1, cubic_poly({cubic3(0), cubic3(1)})});
    const cubic_poly z({cubic3(0), cubic3(1)});
    for (unsigned n = 1; n < nmax; ++n) {
        const cubic_poly &q = seq[n].poly;
        const cubic_poly q1 = q.derivative();
        const cubic_poly q2 = q1.derivative();
        const cubic_poly rhs = z * q * q - cubic3(12) * (q * q2 - q1 * q1);
        auto [quot, rem] = divmod(rhs, cubic3::root() * seq[n - 1].poly);
        if (!rem.is_zero()) {
            throw std::logic_error("Yablonskii-Vorob'ev recurrence: inexact division computing Q_" + std::to_string(n + 1));
        }
        seq.push_back({n + 1, std::move(quot)});
    }
    return seq;
}

} // namespace

// The table grows monotonically and is shared between threads.
std::vector<yv_poly> yv_sequence(unsigned nmax)
{
    static std::mutex mtx;
    static std::vector<yv_poly> table;
    std::lock_guard lock(mtx);
    if (table.size() <= nmax) {
        table = compute_sequence(nmax);
    }
    return {table.begin(), table.begin() + nmax + 1};
}

yv_poly yv_polynomial(unsigned n)
{
    return yv_sequence(n).back();
}

superfield<laurent_xs<cubic3>> homogenize(const cubic_poly &q, odd_generator zeta)
{
    using L = laurent_xs<cubic3>;
    using G = grassmann<cubic3>;
    const int d = q.degree();
    L body, soul;
    for (int k = 0; k <= d; ++k) {
        const cubic3 &c = q.coeffs()[static_cast<std::size_t>(k)];
        if (c.is_zero()) {
            continue;
        }
        // s^d (x/s)^k -> x^k s^{d-k};  theta-part: k zeta x^{k-1} s^{d-k}.
        body.add_term({k, checked_s_exponent(d - k)}, G(c));
        if (k > 0) {
            soul.add_term({k - 1, checked_s_exponent(d - k)}, G::generator(zeta, cubic3(rational(k)) * c));
        }
    }
    return {std::move(body), std::move(soul)};
}

std::pair<superfield<laurent_xs<cubic3>>, superfield<laurent_xs<cubic3>>> similarity_tau(unsigned n,
                                                                                         odd_generator zeta)
{
    const auto seq = yv_sequence(n + 1);
    return {homogenize(seq[n].poly, zeta), homogenize(seq[n + 1].poly, zeta)};
}

namespace
{

struct poly_jet {
    double p, p1, p2;
};

poly_jet jet(const cubic_poly &q, double z)
{
    const cubic_poly d1 = q.derivative();
    return {q.eval(z), d1.eval(z), d1.derivative().eval(z)};
}

double poly_scale(const cubic_poly &q, double z)
{
    double m = 0, zk = 1;
    for (const auto &c : q.coeffs()) {
        m += std::abs(c.to_double()) * zk;
        zk *= std::abs(z);
    }
    return m;
}

void check_nonzero(const cubic_poly &q, double z, double value, const char *name)
{
    if (std::abs(value) <= 1e-14 * poly_scale(q, z)) {
        throw singularity_error(name, std::string(name) + " vanishes at z0 = " + std::to_string(z));
    }
}

double checked_cbrt(double t)
{
    if (t == 0) {
        throw domain_error("similarity solution: t = 0 is outside the domain of t^{-1/3}");
    }
    return std::cbrt(t);
}

} // namespace

std::complex<double> similarity_u(const cubic_poly &upper, const cubic_poly &lower, double x, double t)
{
    const double s = checked_cbrt(t);
    const double z = x / s;
    const poly_jet a = jet(upper, z), b = jet(lower, z);
    check_nonzero(upper, z, a.p, "upper factor");
    check_nonzero(lower, z, b.p, "lower factor");
    return {0., (a.p1 / a.p - b.p1 / b.p) / s};
}

std::complex<double> similarity_f1(const cubic_poly &upper, const cubic_poly &lower, double x, double t)
{
    const double s = checked_cbrt(t);
    const double z = x / s;
    const poly_jet a = jet(upper, z), b = jet(lower, z);
    check_nonzero(upper, z, a.p, "upper factor");
    check_nonzero(lower, z, b.p, "lower factor");
    // d/dx = s^{-1} d/dz; (log p)'' = p''/p - (p'/p)^2
    const double la = a.p2 / a.p - (a.p1 / a.p) * (a.p1 / a.p);
    const double lb = b.p2 / b.p - (b.p1 / b.p) * (b.p1 / b.p);
    return {0., (la - lb) / (s * s)};
}

namespace
{

void name_factors(unsigned n, const singularity_error &e)
{
    const std::string which = e.factor() == "upper factor" ? "Q_" + std::to_string(n + 1) : "Q_" + std::to_string(n);
    throw singularity_error(which, "pole of u_" + std::to_string(n) + ": " + which + "(z0) = 0 (" + e.what() + ")");
}

} // namespace

std::complex<double> yv_u(unsigned n, double x, double t)
{
    const auto seq = yv_sequence(n + 1);
    try {
        return similarity_u(seq[n + 1].poly, seq[n].poly, x, t);
    } catch (const singularity_error &e) {
        name_factors(n, e);
    }
    return {};
}

std::complex<double> yv_f1(unsigned n, double x, double t)
{
    const auto seq = yv_sequence(n + 1);
    try {
        return similarity_f1(seq[n + 1].poly, seq[n].poly, x, t);
    } catch (const singularity_error &e) {
        name_factors(n, e);
    }
    return {};
}

field_bundle similarity_fields(unsigned n, odd_generator zeta)
{
    const auto [tau1, tau2] = similarity_tau(n, zeta);
    return fields_from_tau_pair(tau1, tau2, zeta);
}

std::vector<double> similarity_poles(unsigned n, double t)
{
    const auto seq = yv_sequence(n + 1);
    std::vector<double> poles;
    for (unsigned k : {n, n + 1}) {
        const cubic_poly &q = seq[k].poly;
        if (t == 0) {
            // s^d Q(x/s) -> lead * x^d
            if (q.degree() > 0) {
                poles.push_back(0.);
            }
            continue;
        }
        const double s = std::cbrt(t);
        for (double z : real_roots(q)) {
            poles.push_back(s * z);
        }
    }
    std::sort(poles.begin(), poles.end());
    poles.erase(std::unique(poles.begin(), poles.end()), poles.end());
    return poles;
}

namespace
{

std::vector<double> roots_of(const std::vector<double> &c)
{
    std::vector<double> p = c;
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
    if (p.size() <= 1) {
        return {};
    }
    if (p.size() == 2) {
        return {-p[0] / p[1]};
    }
    const auto ev = [&p](double z) {
        double r = 0;
        for (auto it = p.rbegin(); it != p.rend(); ++it) {
            r = r * z + *it;
        }
        return r;
    };
    // Cauchy bound.
    double bound = 0;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        bound = std::max(bound, std::abs(p[k] / p.back()));
    }
    bound += 1;
    std::vector<double> dp(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) {
        dp[k - 1] = static_cast<double>(k) * p[k];
    }
    // p is monotone between consecutive critical points.
    std::vector<double> edges{-bound};
    for (double r : roots_of(dp)) {
        if (r > -bound && r < bound) {
            edges.push_back(r);
        }
    }
    edges.push_back(bound);
    std::vector<double> roots;
    for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
        double lo = edges[k], hi = edges[k + 1];
        double flo = ev(lo), fhi = ev(hi);
        if (flo == 0) {
            roots.push_back(lo);
            continue;
        }
        if ((flo < 0) == (fhi < 0)) {
            continue;
        }
        for (int it = 0; it < 200 && hi - lo > 0; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi) {
                break;
            }
            const double fm = ev(mid);
            if ((fm < 0) == (flo < 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        roots.push_back(0.5 * (lo + hi));
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace

std::vector<double> real_roots(const cubic_poly &q)
{
    std::vector<double> c;
    for (const auto &k : q.coeffs()) {
        c.push_back(k.to_double());
    }
    return roots_of(c);
}

} // namespace sskdv
