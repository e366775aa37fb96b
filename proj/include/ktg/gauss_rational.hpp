#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace ktg {

/**
 * Gaussian rational re + im*i with exact mpq components.
 *
 * mpq_class keeps fractions reduced with positive denominators, so equality
 * is plain component comparison.
 */
class GaussRat {
public:
    GaussRat() : re_(0), im_(0) {}
    GaussRat(long v) : re_(v), im_(0) {}          // NOLINT(google-explicit-constructor)
    GaussRat(mpq_class re) : re_(std::move(re)), im_(0) {}
    GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat i_power(long k) {
        switch (((k % 4) + 4) % 4) {
            case 0: return GaussRat(1);
            case 1: return GaussRat(mpq_class(0), mpq_class(1));
            case 2: return GaussRat(-1);
            default: return GaussRat(mpq_class(0), mpq_class(-1));
        }
    }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_imaginary() const { return re_ == 0; }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re_ - b.re_, a.im_ - b.im_);
    }
    GaussRat operator-() const { return GaussRat(-re_, -im_); }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        mpq_class n = b.re_ * b.re_ + b.im_ * b.im_;
        return GaussRat((a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n);
    }
    GaussRat& operator+=(const GaussRat& b) { re_ += b.re_; im_ += b.im_; return *this; }
    GaussRat& operator*=(const GaussRat& b) { *this = *this * b; return *this; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    // "3", "-1/2", "i", "-2/3*i", "1+i", "1/2-3*i"
    std::string str() const;

private:
    mpq_class re_, im_;
};

}  // namespace ktg
