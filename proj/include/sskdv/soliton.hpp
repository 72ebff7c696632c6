#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <sskdv/errors.hpp>
#include <sskdv/expsum.hpp>
#include <sskdv/fields.hpp>
#include <sskdv/grassmann.hpp>
#include <sskdv/rational.hpp>
#include <sskdv/superfield.hpp>

namespace sskdv
{

// Frequency from the dispersion relation omega + kappa^3 = 0.
qcomplex dispersion(const qcomplex &kappa);

// ((ki - kj) / (ki + kj))^2; throws domain_error when ki + kj = 0.
qcomplex interaction_coefficient(const qcomplex &ki, const qcomplex &kj);

// N-super-soliton parameters. The odd phase shifts are zeta_i = kappa_i * zeta, one generator
// for all solitons, so kappa_i zeta_j = kappa_j zeta_i holds by construction.
class soliton_spec
{
public:
    soliton_spec(std::vector<qcomplex> kappas, std::vector<qcomplex> amps, odd_generator zeta = odd_generator(0));

    std::size_t size() const noexcept
    {
        return m_kappas.size();
    }
    const std::vector<qcomplex> &kappas() const noexcept
    {
        return m_kappas;
    }
    const std::vector<qcomplex> &amps() const noexcept
    {
        return m_amps;
    }
    odd_generator zeta() const noexcept
    {
        return m_zeta;
    }

    std::string describe() const;

private:
    std::vector<qcomplex> m_kappas;
    std::vector<qcomplex> m_amps;
    odd_generator m_zeta;
};

// "fig1": kappa = 1, 1/2; "fig2": kappa = 1, 7/10, 2/5; amplitudes i. Throws config_error otherwise.
soliton_spec soliton_preset(std::string_view name);

// Everything that enters the tau pair. Exposed separately so that individual constraints can be
// broken in negative tests; a spec-built instance satisfies all of them.
template <coefficient C>
struct tau_ingredients {
    std::vector<C> kappa, omega;     // phases
    std::vector<C> a, b;             // tau1 / tau2 amplitudes (b = -a)
    std::vector<grassmann<C>> zeta;  // odd phase shifts zeta_i
    std::vector<std::vector<C>> A, B; // pair interaction factors (A = B)
};

template <coefficient C>
tau_ingredients<C> make_ingredients(const soliton_spec &spec)
{
    const auto conv = [](const qcomplex &q) { return coeff_traits<C>::from_qcomplex(q); };
    const std::size_t n = spec.size();
    tau_ingredients<C> r;
    r.A.assign(n, std::vector<C>(n, C(0)));
    r.B = r.A;
    for (std::size_t i = 0; i < n; ++i) {
        const auto &k = spec.kappas()[i];
        r.kappa.push_back(conv(k));
        r.omega.push_back(conv(dispersion(k)));
        r.a.push_back(conv(spec.amps()[i]));
        r.b.push_back(conv(-spec.amps()[i]));
        r.zeta.push_back(grassmann<C>::generator(spec.zeta(), conv(k)));
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) {
                r.A[i][j] = conv(interaction_coefficient(k, spec.kappas()[j]));
                r.B[i][j] = r.A[i][j];
            }
        }
    }
    return r;
}

// tau1 = sum_S prod_{i in S} a_i prod_{i<j in S} A_ij exp(sum_{i in S} Psi_i), tau2 likewise with b, B.
// exp(sum Psi_i) = exp(phase_S) (1 + theta1 sum_{i in S} zeta_i) since theta1^2 = 0.
template <coefficient C>
std::pair<superfield<exp_sum<C>>, superfield<exp_sum<C>>> assemble_tau_pair(const tau_ingredients<C> &in)
{
    const std::size_t n = in.kappa.size();
    if (n == 0 || n > 16) {
        throw config_error("soliton count must be in [1, 16]");
    }
    exp_sum<C> body1, body2, soul1, soul2;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        phase<C> ph;
        C c1(1), c2(1);
        grassmann<C> shift;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) {
                continue;
            }
            ph = ph + phase<C>{in.kappa[i], in.omega[i]};
            c1 = c1 * in.a[i];
            c2 = c2 * in.b[i];
            shift += in.zeta[i];
            for (std::size_t j = i + 1; j < n; ++j) {
                if (mask & (1u << j)) {
                    c1 = c1 * in.A[i][j];
                    c2 = c2 * in.B[i][j];
                }
            }
        }
        body1.add_term(ph, grassmann<C>(c1));
        body2.add_term(ph, grassmann<C>(c2));
        soul1.add_term(ph, c1 * shift);
        soul2.add_term(ph, c2 * shift);
    }
    return {superfield<exp_sum<C>>(std::move(body1), std::move(soul1)),
            superfield<exp_sum<C>>(std::move(body2), std::move(soul2))};
}

template <coefficient C = qcomplex>
std::pair<superfield<exp_sum<C>>, superfield<exp_sum<C>>> build_tau_pair(const soliton_spec &spec)
{
    return assemble_tau_pair(make_ingredients<C>(spec));
}

field_bundle reconstruct_fields(const soliton_spec &spec);

// Isolated one-soliton height max|u| = |kappa| (u = kappa sech(kappa x + omega t + log|a|) up to phase).
double one_soliton_height(const qcomplex &kappa);

struct profile_peak {
    double x = 0;
    double height = 0;
};

// Local maxima of |f(., t)| on [x_min, x_max]: sampled on nx points, then refined with Brent's method.
// Sorted by x. Endpoint maxima are not reported.
std::vector<profile_peak> abs_peaks(const field_fn &f, double t, double x_min, double x_max, std::size_t nx);

// min |f| between two x-positions (sampled, then refined).
double abs_trough(const field_fn &f, double t, double x_left, double x_right, std::size_t nx = 200);

} // namespace sskdv
