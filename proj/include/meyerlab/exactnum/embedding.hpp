#pragma once

#include "meyerlab/exactnum/interval.hpp"
#include "meyerlab/exactnum/number_field.hpp"

#include <vector>

namespace meyerlab {

inline constexpr long kDefaultMaxPrecision = 256;

// A real place of K: one real root of the minimal polynomial, pinned by an
// isolating interval with rational endpoints. For degree >= 2 the endpoints
// are never roots; for degree 1 the interval is the root itself.
class RealEmbedding {
public:
    RealEmbedding(NumberField field, int root_index, Interval isolating, long precision_bits);

    const NumberField& field() const { return field_; }
    int root_index() const { return root_index_; }
    const Interval& isolating_interval() const { return interval_; }
    long precision_bits() const { return bits_; }

    // Copy whose isolating interval has width <= 2^-bits. Never loses the root.
    RealEmbedding refined(long bits) const;

    bool operator==(const RealEmbedding& o) const { return field_ == o.field_ && root_index_ == o.root_index_; }

private:
    NumberField field_;
    int root_index_;
    Interval interval_;
    long bits_;
};

// Real roots in increasing order, one isolating interval each.
std::vector<RealEmbedding> real_roots(const NumberField& field);

// The real place with the largest (index -1) or any given root index.
RealEmbedding real_place(const NumberField& field, int root_index, long bits = 192);

// Interval containing sigma(x), width <= 2^-bits * (1 + |midpoint|).
Interval eval_embedding(const NFElem& x, const RealEmbedding& place, long precision_bits);

enum class AbsComparison { Less, Equal, Greater };
const char* to_string(AbsComparison c);

// |sigma(x)| against 1. EQUAL exactly when x = +-1 (a real embedding is
// injective). Otherwise refines until decided or max_precision is reached,
// then throws PrecisionExhausted.
AbsComparison compare_abs_to_one(const NFElem& x, const RealEmbedding& place, long max_precision = kDefaultMaxPrecision);

// |sigma(x)| against a rational bound >= 0, same exactness argument.
AbsComparison compare_abs_to(const NFElem& x, const Rational& bound, const RealEmbedding& place,
                             long max_precision = kDefaultMaxPrecision);

// Sign of sigma(x), exact.
int sign_of(const NFElem& x, const RealEmbedding& place, long max_precision = kDefaultMaxPrecision);

// Compares |sigma(a)| with |sigma(b)|; -1, 0, 1.
int compare_abs(const NFElem& a, const NFElem& b, const RealEmbedding& place, long max_precision = kDefaultMaxPrecision);

// Compares sigma(a) with sigma(b); -1, 0, 1.
int compare_values(const NFElem& a, const NFElem& b, const RealEmbedding& place, long max_precision = kDefaultMaxPrecision);

}  // namespace meyerlab
