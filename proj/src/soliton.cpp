#include <sskdv/soliton.hpp>

#include <cmath>
#include <memory>

#include <boost/math/tools/minima.hpp>

namespace sskdv
{

qcomplex dispersion(const qcomplex &kappa)
{
    return -(kappa * kappa * kappa);
}

qcomplex interaction_coefficient(const qcomplex &ki, const qcomplex &kj)
{
    const qcomplex sum = ki + kj;
    if (sum.is_zero()) {
        throw domain_error("interaction coefficient: kappa_i + kappa_j = 0 (" + to_string(ki) + ", " + to_string(kj)
                           + ")");
    }
    const qcomplex r = (ki - kj) / sum;
    return r * r;
}

soliton_spec::soliton_spec(std::vector<qcomplex> kappas, std::vector<qcomplex> amps, odd_generator zeta)
    : m_kappas(std::move(kappas)), m_amps(std::move(amps)), m_zeta(zeta)
{
    if (m_kappas.empty()) {
        throw config_error("soliton spec needs at least one wavenumber");
    }
    if (m_kappas.size() > 16) {
        throw config_error("soliton spec supports at most 16 solitons");
    }
    if (m_amps.size() != m_kappas.size()) {
        throw config_error("soliton spec: " + std::to_string(m_kappas.size()) + " wavenumbers but "
                           + std::to_string(m_amps.size()) + " amplitudes");
    }
    for (std::size_t i = 0; i < m_kappas.size(); ++i) {
        if (m_kappas[i].is_zero()) {
            throw config_error("soliton spec: kappa_" + std::to_string(i + 1) + " is zero");
        }
        if (m_amps[i].is_zero()) {
            throw config_error("soliton spec: amplitude a_" + std::to_string(i + 1) + " is zero");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if ((m_kappas[i] + m_kappas[j]).is_zero()) {
                throw config_error("soliton spec: kappa_" + std::to_string(j + 1) + " + kappa_" + std::to_string(i + 1)
                                   + " = 0");
            }
        }
    }
}

std::string soliton_spec::describe() const
{
    std::string k, a;
    for (std::size_t i = 0; i < size(); ++i) {
        k += (i ? "," : "") + to_string(m_kappas[i]);
        a += (i ? "," : "") + to_string(m_amps[i]);
    }
    return "N=" + std::to_string(size()) + " kappa=" + k + " amp=" + a;
}

soliton_spec soliton_preset(std::string_view name)
{
    const qcomplex i = qcomplex::i();
    if (name == "fig1") {
        return soliton_spec({rational(1), rational(1, 2)}, {i, i});
    }
    if (name == "fig2") {
        return soliton_spec({rational(1), rational(7, 10), rational(2, 5)}, {i, i, i});
    }
    throw config_error("unknown soliton preset '" + std::string(name) + "' (expected fig1 or fig2)");
}

field_bundle reconstruct_fields(const soliton_spec &spec)
{
    const auto [tau1, tau2] = build_tau_pair<qcomplex>(spec);
    return fields_from_tau_pair(tau1, tau2, spec.zeta());
}

double one_soliton_height(const qcomplex &kappa)
{
    return std::abs(kappa.to_complex());
}

namespace
{

constexpr int brent_bits = 40;

double refine_extremum(const field_fn &f, double t, double lo, double hi, double sign)
{
    const auto g = [&](double x) { return -sign * std::abs(f(x, t)); };
    std::uintmax_t iters = 200;
    return boost::math::tools::brent_find_minima(g, lo, hi, brent_bits, iters).first;
}

} // namespace

std::vector<profile_peak> abs_peaks(const field_fn &f, double t, double x_min, double x_max, std::size_t nx)
{
    if (nx < 3 || !(x_max > x_min)) {
        throw config_error("abs_peaks needs nx >= 3 and x_max > x_min");
    }
    const double dx = (x_max - x_min) / static_cast<double>(nx - 1);
    std::vector<double> v(nx);
    for (std::size_t k = 0; k < nx; ++k) {
        v[k] = std::abs(f(x_min + dx * static_cast<double>(k), t));
    }
    std::vector<profile_peak> peaks;
    for (std::size_t k = 1; k + 1 < nx; ++k) {
        if (v[k] > v[k - 1] && v[k] >= v[k + 1]) {
            const double xc = x_min + dx * static_cast<double>(k);
            const double x = refine_extremum(f, t, xc - dx, xc + dx, 1.);
            peaks.push_back({x, std::abs(f(x, t))});
        }
    }
    return peaks;
}

double abs_trough(const field_fn &f, double t, double x_left, double x_right, std::size_t nx)
{
    if (nx < 3 || !(x_right > x_left)) {
        throw config_error("abs_trough needs nx >= 3 and x_right > x_left");
    }
    const double dx = (x_right - x_left) / static_cast<double>(nx - 1);
    std::size_t best = 0;
    double lowest = std::abs(f(x_left, t));
    for (std::size_t k = 1; k < nx; ++k) {
        const double v = std::abs(f(x_left + dx * static_cast<double>(k), t));
        if (v < lowest) {
            lowest = v;
            best = k;
        }
    }
    const double xc = x_left + dx * static_cast<double>(best);
    const double x = refine_extremum(f, t, std::max(x_left, xc - dx), std::min(x_right, xc + dx), -1.);
    return std::min(lowest, std::abs(f(x, t)));
}

} // namespace sskdv
