#include "ktg/qratio.hpp"

#include <stdexcept>

namespace ktg {

QRatio::QRatio(QLaurent n, QLaurent d) {
    if (d.is_zero()) throw std::domain_error("QRatio: zero denominator");
    if (n.is_zero()) {
        num_ = QLaurent::zero();
        den_ = QLaurent::one();
        return;
    }
    const QLaurent g = QLaurent::gcd(n, d);
    if (!g.is_one()) {
        n = *n.divide_exact(g);
        d = *d.divide_exact(g);
    }
    // monic denominator with lowest exponent 0
    const int shift = d.min_exp();
    const GaussRat lead = d.leading_coeff();
    den_ = d.shifted(-shift).scaled(GaussRat(1) / lead);
    num_ = n.shifted(-shift).scaled(GaussRat(1) / lead);
}

QRatio ratio_reduce(QLaurent num, QLaurent den) { return QRatio(std::move(num), std::move(den)); }

QRatio operator+(const QRatio& a, const QRatio& b) {
    return QRatio(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
QRatio operator-(const QRatio& a, const QRatio& b) {
    return QRatio(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
QRatio operator*(const QRatio& a, const QRatio& b) {
    return QRatio(a.num_ * b.num_, a.den_ * b.den_);
}
QRatio operator/(const QRatio& a, const QRatio& b) {
    if (b.is_zero()) throw std::domain_error("QRatio: division by zero");
    return QRatio(a.num_ * b.den_, a.den_ * b.num_);
}
QRatio QRatio::operator-() const {
    QRatio r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

CanonicalResult QRatio::to_bracket() const {
    if (!den_.is_one())
        return NotIntegral{NotIntegral::Reason::ResidualDenominator, den_.str()};
    return canonicalize(num_);
}

std::string QRatio::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace ktg
