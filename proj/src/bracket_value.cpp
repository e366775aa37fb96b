#include "ktg/bracket_value.hpp"

#include <sstream>

namespace ktg {

QLaurent BracketValue::reconstruct() const {
    QLaurent p;
    for (const auto& [e, c] : body)
        p += QLaurent::monomial(quarter_shift_n + 4 * e,
                                GaussRat::i_power(phase_m) * GaussRat(mpq_class(c)));
    return p;
}

std::string NotIntegral::str() const {
    std::string why;
    switch (reason) {
        case Reason::MixedPhase: why = "coefficients mix real and imaginary parts"; break;
        case Reason::MixedQuarterClass: why = "exponents fall in different classes mod q^(1/4)"; break;
        case Reason::FractionalCoefficient: why = "non-integer coefficient"; break;
        case Reason::ResidualDenominator: why = "denominator does not reduce to 1"; break;
    }
    return "NotIntegral(" + why + ": " + witness + ")";
}

CanonicalResult canonicalize(const QLaurent& v) {
    if (v.is_zero()) return BracketValue{};
    // all coefficients real (m = 0) or all purely imaginary (m = 1)
    int m = -1;
    bool all_real = true, all_imag = true;
    for (const auto& [e, c] : v.terms()) {
        all_real = all_real && c.is_real();
        all_imag = all_imag && c.is_imaginary();
    }
    if (all_real) m = 0;
    else if (all_imag) m = 1;
    else {
        for (const auto& [e, c] : v.terms())
            if (!c.is_real() && !c.is_imaginary())
                return NotIntegral{NotIntegral::Reason::MixedPhase,
                                   c.str() + " at x^" + std::to_string(e)};
        return NotIntegral{NotIntegral::Reason::MixedPhase, v.str()};
    }
    const int n = v.min_exp();
    BracketValue out;
    out.phase_m = m;
    out.quarter_shift_n = n;
    for (const auto& [e, c] : v.terms()) {
        if ((e - n) % 4 != 0)
            return NotIntegral{NotIntegral::Reason::MixedQuarterClass,
                               "x^" + std::to_string(e) + " against shift " + std::to_string(n)};
        const mpq_class r = (m == 0) ? c.re() : c.im();
        if (r.get_den() != 1)
            return NotIntegral{NotIntegral::Reason::FractionalCoefficient,
                               r.get_str() + " at x^" + std::to_string(e)};
        out.body[(e - n) / 4] = r.get_num();
    }
    return out;
}

bool divides(const QLaurent& d, const BracketValue& v) {
    if (v.body.empty()) return true;
    QLaurent body;
    for (const auto& [e, c] : v.body) body += QLaurent::monomial(4 * e, GaussRat(mpq_class(c)));
    auto q = body.divide_exact(d);
    if (!q) return false;
    for (const auto& [e, c] : q->terms())
        if (!c.is_real() || c.re().get_den() != 1) return false;
    return true;
}

std::string BracketValue::str() const {
    if (body.empty()) return "0";
    std::ostringstream os;
    const bool has_phase = phase_m != 0;
    const bool has_shift = quarter_shift_n != 0;
    if (has_phase) {
        os << (phase_m == 1 ? "i" : "i^" + std::to_string(phase_m)) << " * ";
    }
    if (has_shift) {
        const int n = quarter_shift_n;
        os << "q^";
        if (n % 4 == 0) os << (n / 4);
        else if (n % 2 == 0) os << "(" << (n / 2) << "/2)";
        else os << "(" << n << "/4)";
        os << " * ";
    }
    std::ostringstream bs;
    bool first = true;
    for (auto it = body.rbegin(); it != body.rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class a = c < 0 ? mpz_class(-c) : c;
        if (first) {
            if (c < 0) bs << "-";
            first = false;
        } else {
            bs << (c < 0 ? " - " : " + ");
        }
        if (e == 0) bs << a.get_str();
        else {
            if (a != 1) bs << a.get_str() << "*";
            if (e == 1) bs << "q";
            else bs << "q^" << e;
        }
    }
    const bool wrap = (has_phase || has_shift) && body.size() > 1;
    os << (wrap ? "( " + bs.str() + " )" : bs.str());
    return os.str();
}

}  // namespace ktg
