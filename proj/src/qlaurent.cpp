#include "ktg/qlaurent.hpp"

#include <sstream>
#include <stdexcept>

namespace ktg {

std::string GaussRat::str() const {
    std::ostringstream os;
    auto coeff_abs = [](const mpq_class& v) {
        mpq_class a = v < 0 ? mpq_class(-v) : v;
        return a.get_str();
    };
    if (im_ == 0) {
        os << re_.get_str();
    } else if (re_ == 0) {
        if (im_ == 1) os << "i";
        else if (im_ == -1) os << "-i";
        else os << im_.get_str() << "*i";
    } else {
        os << re_.get_str();
        os << (im_ < 0 ? "-" : "+");
        if (im_ == 1 || im_ == -1) os << "i";
        else os << coeff_abs(im_) << "*i";
    }
    return os.str();
}

void QLaurent::add_term(int e, const GaussRat& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

bool QLaurent::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == GaussRat(1);
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

QLaurent QLaurent::operator-() const {
    QLaurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent r;
    for (const auto& [e1, c1] : a.terms_)
        for (const auto& [e2, c2] : b.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

QLaurent QLaurent::scaled(const GaussRat& c) const {
    QLaurent r;
    if (c.is_zero()) return r;
    for (const auto& [e, cc] : terms_) r.terms_.emplace(e, cc * c);
    return r;
}

QLaurent QLaurent::shifted(int xexp) const {
    QLaurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + xexp, c);
    return r;
}

QLaurent QLaurent::pow(unsigned n) const {
    QLaurent r = one();
    QLaurent base = *this;
    while (n) {
        if (n & 1u) r = r * base;
        base = base * base;
        n >>= 1u;
    }
    return r;
}

QLaurent QLaurent::subst_q_inverse() const {
    QLaurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

GaussRat QLaurent::eval_at_one() const {
    GaussRat s;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

std::optional<QLaurent> QLaurent::divide_exact(const QLaurent& d) const {
    if (d.is_zero()) throw std::domain_error("QLaurent: division by zero");
    if (is_zero()) return zero();
    // work on x-shifted ordinary polynomials; Laurent units never obstruct
    QLaurent rem = shifted(-min_exp());
    const QLaurent div = d.shifted(-d.min_exp());
    const int dmax = div.max_exp();
    const GaussRat dlead = div.leading_coeff();
    QLaurent quot;
    while (!rem.is_zero() && rem.max_exp() >= dmax) {
        const int e = rem.max_exp() - dmax;
        const GaussRat c = rem.leading_coeff() / dlead;
        quot.terms_.emplace(e, c);
        for (const auto& [de, dc] : div.terms_) rem.add_term(de + e, -(dc * c));
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot.shifted(min_exp() - d.min_exp());
}

QLaurent QLaurent::gcd(QLaurent a, QLaurent b) {
    auto normalize = [](QLaurent p) {
        if (p.is_zero()) return p;
        return p.shifted(-p.min_exp()).scaled(GaussRat(1) / p.leading_coeff());
    };
    a = normalize(std::move(a));
    b = normalize(std::move(b));
    while (!b.is_zero()) {
        // remainder of a by b
        QLaurent rem = a;
        const int dmax = b.max_exp();
        const GaussRat dlead = b.leading_coeff();
        while (!rem.is_zero() && rem.max_exp() >= dmax) {
            const int e = rem.max_exp() - dmax;
            const GaussRat c = rem.leading_coeff() / dlead;
            for (const auto& [de, dc] : b.terms_) rem.add_term(de + e, -(dc * c));
        }
        a = std::move(b);
        b = normalize(std::move(rem));
    }
    return a;
}

namespace {

// exponent printed as a reduced power of q: e quarters of q
std::string q_exp_str(int e) {
    if (e % 4 == 0) return std::to_string(e / 4);
    std::string s = "(";
    if (e % 2 == 0) s += std::to_string(e / 2) + "/2";
    else s += std::to_string(e) + "/4";
    s += ")";
    return s;
}

}  // namespace

std::string QLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.str();
        bool negated = false;
        if (cs.size() > 1 && cs[0] == '-' && cs.find('+', 1) == std::string::npos &&
            cs.find('-', 1) == std::string::npos) {
            negated = true;
            cs = cs.substr(1);
        }
        if (first) {
            if (negated) os << "-";
            first = false;
        } else {
            os << (negated ? " - " : " + ");
        }
        const bool unit = (cs == "1");
        const bool compound = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos;
        if (e == 0) {
            os << (compound ? "(" + cs + ")" : cs);
        } else {
            if (!unit) os << (compound ? "(" + cs + ")" : cs) << "*";
            if (e == 4) os << "q";
            else os << "q^" << q_exp_str(e);
        }
    }
    return os.str();
}

}  // namespace ktg
