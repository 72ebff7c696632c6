#pragma once

#include <complex>
#include <string>

#include <json.hpp>

#include <sskdv/cubic.hpp>
#include <sskdv/expsum.hpp>
#include <sskdv/grassmann.hpp>
#include <sskdv/laurent.hpp>
#include <sskdv/rational.hpp>
#include <sskdv/superfield.hpp>

// JSON documents for expressions. Exact coefficients are written as strings ("p/q") so that
// documents round-trip without loss; floating coefficients as numbers.
namespace sskdv
{

using json = nlohmann::json;

inline json coeff_to_json(const qcomplex &c)
{
    return json::array({to_string(c.real()), to_string(c.imag())});
}
inline json coeff_to_json(const cubic3 &c)
{
    return json::array({to_string(c.a()), to_string(c.b()), to_string(c.c())});
}
inline json coeff_to_json(const std::complex<double> &c)
{
    return json::array({c.real(), c.imag()});
}

template <typename C>
C coeff_from_json(const json &j);

template <>
inline qcomplex coeff_from_json<qcomplex>(const json &j)
{
    return {parse_rational(j.at(0).get<std::string>()), parse_rational(j.at(1).get<std::string>())};
}
template <>
inline cubic3 coeff_from_json<cubic3>(const json &j)
{
    return {parse_rational(j.at(0).get<std::string>()), parse_rational(j.at(1).get<std::string>()),
            parse_rational(j.at(2).get<std::string>())};
}
template <>
inline std::complex<double> coeff_from_json<std::complex<double>>(const json &j)
{
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

template <coefficient C>
json to_json(const grassmann<C> &g)
{
    json arr = json::array();
    for (const auto &[b, c] : g.terms()) {
        json key = json::array();
        for (unsigned k = 0; k < max_generators; ++k) {
            if (b & (1u << k)) {
                key.push_back(k);
            }
        }
        arr.push_back({{"key", key}, {"c", coeff_to_json(c)}});
    }
    return arr;
}

template <coefficient C>
grassmann<C> grassmann_from_json(const json &j)
{
    grassmann<C> g;
    for (const auto &term : j) {
        blade b = 0;
        unsigned prev = 0;
        bool first = true;
        for (const auto &id : term.at("key")) {
            const auto k = id.get<unsigned>();
            if (k >= max_generators || (!first && k <= prev)) {
                throw config_error("grassmann key must be strictly increasing generator ids < 8");
            }
            b = static_cast<blade>(b | (1u << k));
            prev = k;
            first = false;
        }
        g.add_term(b, coeff_from_json<C>(term.at("c")));
    }
    return g;
}

template <coefficient C>
json to_json(const exp_sum<C> &e)
{
    json terms = json::array();
    for (const auto &[p, c] : e.terms()) {
        terms.push_back({{"kappa", coeff_to_json(p.kappa)}, {"omega", coeff_to_json(p.omega)}, {"coeff", to_json(c)}});
    }
    return {{"backend", "exp_sum"}, {"terms", terms}};
}

template <coefficient C>
json to_json(const laurent_xs<C> &l)
{
    json terms = json::array();
    for (const auto &[e, c] : l.terms()) {
        terms.push_back({{"x", e.x}, {"s", e.s}, {"coeff", to_json(c)}});
    }
    return {{"backend", "laurent_xs"}, {"terms", terms}};
}

template <typename E>
    requires std::same_as<E, exp_sum<typename E::coeff_type>>
E expression_from_json(const json &j)
{
    using C = typename E::coeff_type;
    if (j.at("backend") != "exp_sum") {
        throw config_error("expected an exp_sum document");
    }
    E e;
    for (const auto &t : j.at("terms")) {
        e.add_term(phase<C>{coeff_from_json<C>(t.at("kappa")), coeff_from_json<C>(t.at("omega"))},
                   grassmann_from_json<C>(t.at("coeff")));
    }
    return e;
}

template <typename E>
    requires std::same_as<E, laurent_xs<typename E::coeff_type>>
E expression_from_json(const json &j)
{
    using C = typename E::coeff_type;
    if (j.at("backend") != "laurent_xs") {
        throw config_error("expected a laurent_xs document");
    }
    E e;
    for (const auto &t : j.at("terms")) {
        const int x = t.at("x").get<int>();
        if (x < 0) {
            throw config_error("negative x exponent in laurent_xs document");
        }
        e.add_term({x, checked_s_exponent(t.at("s").get<long>())}, grassmann_from_json<C>(t.at("coeff")));
    }
    return e;
}

template <scalar_expression E>
json to_json(const superfield<E> &f)
{
    return {{"parity", to_string(f.parity())}, {"body", to_json(f.body())}, {"soul", to_json(f.soul())}};
}

template <scalar_expression E>
superfield<E> superfield_from_json(const json &j)
{
    const auto p = j.at("parity").get<std::string>();
    if (p != "even" && p != "odd") {
        throw config_error("superfield parity must be even or odd");
    }
    return {expression_from_json<E>(j.at("body")), expression_from_json<E>(j.at("soul")),
            p == "even" ? parity::even : parity::odd};
}

} // namespace sskdv
