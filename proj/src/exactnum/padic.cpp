#include "meyerlab/exactnum/padic.hpp"

#include "meyerlab/errors.hpp"

namespace meyerlab {

bool is_prime(const Integer& p) {
    if (p < 2) return false;
    return mpz_probab_prime_p(p.get_mpz_t(), 50) > 0;
}

namespace {

long integer_valuation(Integer n, const Integer& p) {
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

}  // namespace

std::optional<long> padic_valuation(const Rational& q, const Integer& p) {
    if (!is_prime(p)) throw UsageError(p.get_str() + " is not prime");
    if (q == 0) return std::nullopt;
    return integer_valuation(q.get_num(), p) - integer_valuation(q.get_den(), p);
}

Rational padic_abs(const Rational& q, const Integer& p) {
    auto v = padic_valuation(q, p);
    if (!v) return Rational(0);
    Integer pw;
    mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(*v < 0 ? -*v : *v));
    if (*v <= 0) return Rational(pw);
    Rational r(Integer(1), pw);
    r.canonicalize();
    return r;
}

Integer smallest_prime_factor(const Integer& n, unsigned long limit) {
    if (n < 2) throw UsageError("smallest_prime_factor needs n >= 2");
    if (n % 2 == 0) return Integer(2);
    for (unsigned long d = 3; d <= limit; d += 2) {
        Integer dd(d);
        if (dd * dd > n) return n;
        if (n % dd == 0) return dd;
    }
    if (is_prime(n)) return n;
    throw ResourceError("no prime factor of " + n.get_str() + " below trial-division limit");
}

std::vector<std::pair<Integer, long>> factorize(const Integer& n, unsigned long limit) {
    std::vector<std::pair<Integer, long>> out;
    Integer m = abs(n);
    if (m == 0) throw UsageError("factorize(0)");
    while (m > 1) {
        Integer p = smallest_prime_factor(m, limit);
        long e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    return out;
}

}  // namespace meyerlab
