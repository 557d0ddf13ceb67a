#include "meyerlab/exactnum/rational.hpp"

#include "meyerlab/errors.hpp"

#include <cctype>

namespace meyerlab {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
    std::string s(text);
    if (s.empty()) throw UsageError("malformed rational '" + std::string(whole) + "'");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw UsageError("malformed rational '" + std::string(whole) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw UsageError("malformed rational '" + std::string(whole) + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    auto slash = text.find('/');
    Rational q;
    if (slash == std::string_view::npos) {
        q = Rational(parse_integer(text, text));
    } else {
        Integer num = parse_integer(text.substr(0, slash), text);
        Integer den = parse_integer(text.substr(slash + 1), text);
        if (den == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
        q = Rational(num, den);
        q.canonicalize();
    }
    return q;
}

std::string to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_of(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rational abs_of(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational power_of_two(long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return Rational(p);
    Rational r(Integer(1), p);
    r.canonicalize();
    return r;
}

Rational round_down_dyadic(const Rational& q, long bits) {
    Rational scale = power_of_two(bits);
    Rational r(floor_of(q * scale));
    r /= scale;
    return r;
}

Rational round_up_dyadic(const Rational& q, long bits) {
    Rational scale = power_of_two(bits);
    Rational r(ceil_of(q * scale));
    r /= scale;
    return r;
}

Rational pow_of(const Rational& q, unsigned long e) {
    Rational r(1);
    Rational b = q;
    while (e) {
        if (e & 1UL) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

}  // namespace meyerlab
