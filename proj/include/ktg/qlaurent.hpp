#pragma once

#include <map>
#include <optional>
#include <string>

#include "ktg/gauss_rational.hpp"

namespace ktg {

/**
 * Sparse Laurent polynomial in x = q^(1/4) with Gaussian-rational coefficients.
 *
 * Exponents are integers counting quarter-powers of q; the monomial q^k is
 * x^(4k). No zero coefficients are stored, so equality is structural.
 */
class QLaurent {
public:
    using TermMap = std::map<int, GaussRat>;

    QLaurent() = default;
    QLaurent(long constant) {  // NOLINT(google-explicit-constructor)
        if (constant != 0) terms_[0] = GaussRat(constant);
    }

    static QLaurent zero() { return QLaurent(); }
    static QLaurent one() { return QLaurent(1); }
    static QLaurent monomial(int xexp, GaussRat c = GaussRat(1)) {
        QLaurent p;
        if (!c.is_zero()) p.terms_[xexp] = std::move(c);
        return p;
    }
    // q^(n4/4); n4 must already be an integer count of quarter powers
    static QLaurent q_quarter(int n4, GaussRat c = GaussRat(1)) { return monomial(n4, std::move(c)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const TermMap& terms() const { return terms_; }
    int min_exp() const { return terms_.begin()->first; }    // pre: nonzero
    int max_exp() const { return terms_.rbegin()->first; }   // pre: nonzero
    const GaussRat& leading_coeff() const { return terms_.rbegin()->second; }
    GaussRat coeff(int xexp) const {
        auto it = terms_.find(xexp);
        return it == terms_.end() ? GaussRat() : it->second;
    }

    QLaurent& operator+=(const QLaurent& o);
    QLaurent& operator-=(const QLaurent& o);
    friend QLaurent operator+(QLaurent a, const QLaurent& b) { a += b; return a; }
    friend QLaurent operator-(QLaurent a, const QLaurent& b) { a -= b; return a; }
    QLaurent operator-() const;
    friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
    friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.terms_ == b.terms_; }

    QLaurent scaled(const GaussRat& c) const;
    QLaurent shifted(int xexp) const;       // multiply by x^xexp
    QLaurent pow(unsigned n) const;
    QLaurent subst_q_inverse() const;       // x -> x^{-1}
    GaussRat eval_at_one() const;           // x = 1 (hence q = 1)

    // Exact division over the Gaussian-rational field; nullopt if not exact.
    std::optional<QLaurent> divide_exact(const QLaurent& d) const;

    // Monic gcd with lowest exponent 0 (Euclid over the coefficient field).
    static QLaurent gcd(QLaurent a, QLaurent b);

    // Canonical rendering with exponents shown as reduced powers of q.
    std::string str() const;

private:
    TermMap terms_;
    void add_term(int e, const GaussRat& c);
};

}  // namespace ktg
