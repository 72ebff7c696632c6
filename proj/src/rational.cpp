#include <sskdv/errors.hpp>
#include <sskdv/rational.hpp>

#include <cctype>
#include <string>

namespace sskdv
{

namespace
{

std::string trim(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
    }
    return std::string(s.substr(b, e - b));
}

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

rational pow10(long e)
{
    rational r(1);
    const rational ten(10);
    for (long k = 0; k < (e < 0 ? -e : e); ++k) {
        r *= ten;
    }
    return e < 0 ? rational(1) / r : r;
}

// Unsigned decimal with optional fraction part and exponent.
rational parse_decimal(std::string_view s, std::string_view whole)
{
    std::string_view mant = s;
    long exp10 = 0;
    if (auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
        mant = s.substr(0, epos);
        std::string_view es = s.substr(epos + 1);
        bool eneg = false;
        if (!es.empty() && (es[0] == '+' || es[0] == '-')) {
            eneg = es[0] == '-';
            es.remove_prefix(1);
        }
        if (!all_digits(es) || es.size() > 6) {
            throw config_error("malformed number '" + std::string(whole) + "'");
        }
        exp10 = std::stol(std::string(es));
        if (eneg) {
            exp10 = -exp10;
        }
    }
    std::string digits;
    long frac_len = 0;
    if (auto dot = mant.find('.'); dot != std::string_view::npos) {
        auto ip = mant.substr(0, dot);
        auto fp = mant.substr(dot + 1);
        if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty())) {
            throw config_error("malformed number '" + std::string(whole) + "'");
        }
        digits = std::string(ip) + std::string(fp);
        frac_len = static_cast<long>(fp.size());
    } else {
        if (!all_digits(mant)) {
            throw config_error("malformed number '" + std::string(whole) + "'");
        }
        digits = std::string(mant);
    }
    rational r{boost::multiprecision::mpz_int(digits)};
    return r * pow10(exp10 - frac_len);
}

} // namespace

rational parse_rational(std::string_view in)
{
    const std::string s = trim(in);
    if (s.empty()) {
        throw config_error("empty number");
    }
    std::string_view body = s;
    bool neg = false;
    if (body[0] == '+' || body[0] == '-') {
        neg = body[0] == '-';
        body.remove_prefix(1);
    }
    rational r;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw config_error("malformed fraction '" + s + "'");
        }
        boost::multiprecision::mpz_int d{std::string(den)};
        if (d == 0) {
            throw config_error("zero denominator in '" + s + "'");
        }
        r = rational(boost::multiprecision::mpz_int{std::string(num)}, d);
    } else {
        r = parse_decimal(body, s);
    }
    return neg ? rational(-r) : r;
}

std::string to_string(const rational &q)
{
    return q.str();
}

double to_double(const rational &q)
{
    return q.convert_to<double>();
}

qcomplex &qcomplex::operator/=(const qcomplex &o)
{
    const rational n = o.norm();
    if (n == 0) {
        throw std::domain_error("qcomplex division by zero");
    }
    *this *= o.conj();
    m_re /= n;
    m_im /= n;
    return *this;
}

qcomplex parse_qcomplex(std::string_view in)
{
    const std::string s = trim(in);
    if (s.empty()) {
        throw config_error("empty complex number");
    }
    if (s.back() != 'i' && s.back() != 'I') {
        return qcomplex(parse_rational(s));
    }
    // Split "re(+|-)im i" at the last sign that is not part of an exponent or leading.
    const std::string_view sv(s.data(), s.size() - 1);
    std::size_t split = std::string_view::npos;
    for (std::size_t k = sv.size(); k-- > 1;) {
        if ((sv[k] == '+' || sv[k] == '-') && sv[k - 1] != 'e' && sv[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    std::string_view re_part, im_part = sv;
    if (split != std::string_view::npos) {
        re_part = sv.substr(0, split);
        im_part = sv.substr(split);
    }
    rational im;
    if (im_part.empty() || im_part == "+") {
        im = 1;
    } else if (im_part == "-") {
        im = -1;
    } else {
        im = parse_rational(im_part);
    }
    rational re = re_part.empty() ? rational(0) : parse_rational(re_part);
    return {re, im};
}

std::string to_string(const qcomplex &z)
{
    if (z.imag() == 0) {
        return to_string(z.real());
    }
    std::string im;
    if (z.imag() == 1) {
        im = "i";
    } else if (z.imag() == -1) {
        im = "-i";
    } else {
        im = to_string(z.imag()) + "i";
    }
    if (z.real() == 0) {
        return im;
    }
    return to_string(z.real()) + (im[0] == '-' ? "" : "+") + im;
}

std::ostream &operator<<(std::ostream &os, const qcomplex &z)
{
    return os << to_string(z);
}

} // namespace sskdv
