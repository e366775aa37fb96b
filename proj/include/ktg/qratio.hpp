#pragma once

#include <string>

#include "ktg/bracket_value.hpp"
#include "ktg/qlaurent.hpp"

namespace ktg {

/**
 * Reduced fraction of QLaurent values. Invariants after construction:
 * gcd(num, den) = 1, den monic with lowest exponent 0 and den != 0.
 */
class QRatio {
public:
    QRatio() : num_(QLaurent::zero()), den_(QLaurent::one()) {}
    QRatio(QLaurent n) : num_(std::move(n)), den_(QLaurent::one()) {}  // NOLINT
    QRatio(QLaurent n, QLaurent d);  // reduces

    const QLaurent& num() const { return num_; }
    const QLaurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integral() const { return den_.is_one(); }

    friend QRatio operator+(const QRatio& a, const QRatio& b);
    friend QRatio operator-(const QRatio& a, const QRatio& b);
    friend QRatio operator*(const QRatio& a, const QRatio& b);
    friend QRatio operator/(const QRatio& a, const QRatio& b);
    QRatio operator-() const;
    friend bool operator==(const QRatio& a, const QRatio& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // canonicalize(num) when den reduces to 1, NotIntegral otherwise
    CanonicalResult to_bracket() const;

    std::string str() const;

private:
    QLaurent num_, den_;
};

QRatio ratio_reduce(QLaurent num, QLaurent den);

}  // namespace ktg
