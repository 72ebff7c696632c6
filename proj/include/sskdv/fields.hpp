#pragma once

#include <complex>
#include <functional>
#include <memory>

#include <sskdv/grassmann.hpp>
#include <sskdv/superfield.hpp>

namespace sskdv
{

using field_fn = std::function<std::complex<double>(double, double)>;

// Component profiles of A = u + theta1 xi1 + theta2 xi2 + theta1 theta2 v with xi_k = zeta f_k.
struct field_bundle {
    field_fn u;
    field_fn v;  // -i u_x
    field_fn f1; // zeta-coefficient of xi1, equal to u_x
    field_fn f2; // i f1
};

// Builds the bundle from an even tau pair; f1 is read off the soul of u^b as the coefficient of zeta.
template <scalar_expression E>
field_bundle fields_from_tau_pair(const superfield<E> &tau1, const superfield<E> &tau2, odd_generator zeta)
{
    using F = decltype(tau1.body().to_float());
    auto ev = std::make_shared<log_ratio_evaluator<F>>(to_float(tau1), to_float(tau2));
    const blade key = zeta.mask();
    const std::complex<double> i{0., 1.};
    field_bundle fb;
    fb.u = [ev](double x, double t) { return (*ev)(x, t).u; };
    fb.v = [ev, i](double x, double t) { return -i * (*ev)(x, t).u_x; };
    fb.f1 = [ev, key](double x, double t) { return (*ev)(x, t).xi1.coeff(key); };
    fb.f2 = [ev, key, i](double x, double t) { return i * (*ev)(x, t).xi1.coeff(key); };
    return fb;
}

} // namespace sskdv
