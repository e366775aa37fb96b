#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <variant>

#include "ktg/qlaurent.hpp"

namespace ktg {

/**
 * Normal form i^m * q^(n/4) * P(q) with P an integer-coefficient Laurent
 * polynomial in q whose lowest term is the constant one (n absorbs every
 * common quarter power). m is canonical in {0,1}: a real value has m = 0
 * with the sign carried by P. The zero value is (0, 0, 0).
 */
struct BracketValue {
    int phase_m = 0;
    int quarter_shift_n = 0;
    std::map<int, mpz_class> body;  // q-exponent -> integer coefficient

    friend bool operator==(const BracketValue&, const BracketValue&) = default;

    bool is_zero() const { return body.empty(); }
    QLaurent reconstruct() const;
    std::string str() const;
};

struct NotIntegral {
    enum class Reason { MixedPhase, MixedQuarterClass, FractionalCoefficient, ResidualDenominator };
    Reason reason;
    std::string witness;  // offending coefficient/exponent or leftover denominator
    std::string str() const;
};

using CanonicalResult = std::variant<BracketValue, NotIntegral>;

// Normal-form decomposition of a Laurent polynomial in x = q^(1/4).
CanonicalResult canonicalize(const QLaurent& v);

// Exact divisibility of the body by d in Z[q, q^-1]. d is given in x-units
// with exponents that are multiples of 4 and integer coefficients.
bool divides(const QLaurent& d, const BracketValue& v);

}  // namespace ktg
