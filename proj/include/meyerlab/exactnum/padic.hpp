#pragma once

#include "meyerlab/exactnum/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace meyerlab {

bool is_prime(const Integer& p);

// v_p(q); std::nullopt stands for +infinity (q = 0). Throws UsageError when p
// is not prime.
std::optional<long> padic_valuation(const Rational& q, const Integer& p);

// |q|_p = p^{-v_p(q)}, exact (0 for q = 0).
Rational padic_abs(const Rational& q, const Integer& p);

// Smallest prime factor of n >= 2 by trial division. Throws ResourceError if
// none is found below the limit.
Integer smallest_prime_factor(const Integer& n, unsigned long limit = 10'000'000UL);

// Prime factorisation of |n| >= 1 (trial division, same limit).
std::vector<std::pair<Integer, long>> factorize(const Integer& n, unsigned long limit = 10'000'000UL);

}  // namespace meyerlab
