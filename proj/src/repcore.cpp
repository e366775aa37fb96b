#include "ktg/repcore.hpp"

#include <array>
#include <cstdlib>
#include <map>
#include <mutex>

namespace ktg {

namespace {

// q^(n8/8) as a monomial in x = q^(1/4); n8 must be even.
QLaurent q_eighth(long n8) {
    if (n8 % 2 != 0) throw std::logic_error("fractional x exponent");
    return QLaurent::monomial(static_cast<int>(n8 / 2));
}

// doubled-unit helpers: q^(u) for a state u is x^(2 du)
int x_of_state(HalfInt u) { return 2 * u.doubled(); }

struct Key6 {
    std::array<int, 6> v;
    friend auto operator<=>(const Key6&, const Key6&) = default;
};

std::mutex memo_mu;
std::map<Key6, QLaurent> memo_cg, memo_w;

std::size_t cache_cap() {
    static std::size_t cap = [] {
        if (const char* v = std::getenv("KTG_CACHE_MAX")) {
            long n = std::atol(v);
            if (n > 0) return static_cast<std::size_t>(n);
        }
        return static_cast<std::size_t>(1) << 22;
    }();
    return cap;
}

template <typename F>
QLaurent memoized(std::map<Key6, QLaurent>& table, const Key6& k, F&& compute) {
    {
        std::lock_guard lock(memo_mu);
        auto it = table.find(k);
        if (it != table.end()) return it->second;
    }
    QLaurent r = compute();
    std::lock_guard lock(memo_mu);
    if (table.size() < cache_cap()) table.emplace(k, r);
    return r;
}

}  // namespace

QLaurent cg_C_num(HalfInt a, HalfInt b, HalfInt c, HalfInt u, HalfInt v, HalfInt t) {
    const int da = a.doubled(), db = b.doubled(), dc = c.doubled();
    const int du = u.doubled(), dv = v.doubled(), dt = t.doubled();
    if (!admissible(a, b, c)) return QLaurent::zero();
    if (!valid_state(a, u) || !valid_state(b, v) || !valid_state(c, t)) return QLaurent::zero();
    if (du + dv != dt) return QLaurent::zero();  // weight conservation
    return memoized(memo_cg, Key6{{da, db, dc, du, dv, dt}}, [&] {
        // i^{c-a-b} (-1)^{(b-v)-(c-t)} q^{((b-v)(b+v+1)-(a-u)(a+u+1))/2}
        //   [a+b-c]![b+c-a]![c+a-b]! * sum_{z+w=c-t} (-1)^z q^{(z-w)(c+t+1)/2}
        //   [a+u+z ch a+c-b][b+v+w ch b+c-a][c-t ch z]
        const long iphase = (dc - da - db) / 2 + (db - dv) - (dc - dt);
        // (b-v)(b+v+1)/2 in x units: (db-dv)(db+dv+2)/2
        const long pre_x2 = static_cast<long>(db - dv) * (db + dv + 2) -
                            static_cast<long>(da - du) * (da + du + 2);
        QLaurent pre = q_eighth(pre_x2).scaled(GaussRat::i_power(iphase));
        pre = pre * (qfact((da + db - dc) / 2) * qfact((db + dc - da) / 2) * qfact((dc + da - db) / 2));
        QLaurent sum;
        const int ct = (dc - dt) / 2;
        for (int z = 0; z <= ct; ++z) {
            const int w = ct - z;
            QLaurent term = qbinom((da + du) / 2 + z, (da + dc - db) / 2) *
                            qbinom((db + dv) / 2 + w, (db + dc - da) / 2) * qbinom(ct, z);
            if (term.is_zero()) continue;
            // (z-w)(c+t+1)/2 in x units: (z-w)(dc+dt+2)
            const long e_x2 = 2L * (z - w) * (dc + dt + 2);
            term = term * q_eighth(e_x2).scaled(GaussRat::i_power(2 * z));
            sum += term;
        }
        return pre * sum;
    });
}

QRatio cg_C(HalfInt a, HalfInt b, HalfInt c, HalfInt u, HalfInt v, HalfInt t) {
    return ratio_reduce(cg_C_num(a, b, c, u, v, t), qfact(c.doubled()));
}

QLaurent proj_P_num(HalfInt a, HalfInt b, HalfInt c, HalfInt u, HalfInt v, HalfInt t) {
    // P^{a,b,c}_{u,v,t} = C^{a,c,b}_{-u,t,v} i^{2u} q^u / [2a]!
    QLaurent base = cg_C_num(a, c, b, -u, t, v);  // over [2b]!
    if (base.is_zero()) return base;
    return base.shifted(x_of_state(u)).scaled(GaussRat::i_power(u.doubled()));
}

QRatio proj_P(HalfInt a, HalfInt b, HalfInt c, HalfInt u, HalfInt v, HalfInt t) {
    return ratio_reduce(proj_P_num(a, b, c, u, v, t), qfact(a.doubled()) * qfact(b.doubled()));
}

QLaurent w_W(HalfInt a, HalfInt b, HalfInt c, HalfInt u, HalfInt v, HalfInt t) {
    const int da = a.doubled(), db = b.doubled(), dc = c.doubled();
    const int du = u.doubled(), dv = v.doubled(), dt = t.doubled();
    return memoized(memo_w, Key6{{da, db, dc, du, dv, dt}}, [&] {
        // W^{a,b,c}_{u,v,t} = C^{a,b,c}_{u,v,-t} i^{-2t} q^{-t} [2c]!; the [2c]!
        // cancels the Clebsch-Gordan denominator, so this is polynomial.
        QLaurent base = cg_C_num(a, b, c, u, v, -t);
        if (base.is_zero()) return base;
        return base.shifted(-x_of_state(t)).scaled(GaussRat::i_power(-t.doubled()));
    });
}

QLaurent m_M_num(HalfInt a, HalfInt b, HalfInt c, HalfInt u, HalfInt v, HalfInt t) {
    // M^{a,b,c}_{u,v,t} = P^{a,b,c}_{u,v,-t} i^{-2t} q^{-t} / [2c]!
    QLaurent base = proj_P_num(a, b, c, u, v, -t);  // over [2a]![2b]!
    if (base.is_zero()) return base;
    return base.shifted(-x_of_state(t)).scaled(GaussRat::i_power(-t.doubled()));
}

QRatio m_M(HalfInt a, HalfInt b, HalfInt c, HalfInt u, HalfInt v, HalfInt t) {
    return ratio_reduce(m_M_num(a, b, c, u, v, t),
                        qfact(a.doubled()) * qfact(b.doubled()) * qfact(c.doubled()));
}

QLaurent cup(HalfInt a, HalfInt u, HalfInt v) {
    if ((u + v).doubled() != 0 || !valid_state(a, u)) return QLaurent::zero();
    return qfact(a.doubled()).shifted(x_of_state(u)).scaled(GaussRat::i_power(u.doubled()));
}

QLaurent cap_num(HalfInt a, HalfInt u, HalfInt v) {
    if ((u + v).doubled() != 0 || !valid_state(a, u)) return QLaurent::zero();
    return QLaurent::monomial(x_of_state(u), GaussRat::i_power(u.doubled()));
}

QRatio cap(HalfInt a, HalfInt u, HalfInt v) {
    return ratio_reduce(cap_num(a, u, v), qfact(a.doubled()));
}

QLaurent rmat(HalfInt a, HalfInt b, HalfInt u, HalfInt v, HalfInt h, HalfInt k) {
    if (!valid_state(b, h) || !valid_state(a, k) || !valid_state(a, u) || !valid_state(b, v))
        return QLaurent::zero();
    const int n2 = k.doubled() - u.doubled();
    if (n2 != v.doubled() - h.doubled() || n2 < 0 || n2 % 2 != 0) return QLaurent::zero();
    const int n = n2 / 2;
    const int da = a.doubled(), du = u.doubled(), dv = v.doubled();
    QLaurent r = qfact(n) * (QLaurent::monomial(4) - QLaurent::monomial(-4)).pow(n);
    r = r * qbinom((da - du) / 2, n) * qbinom((da + du) / 2 + n, n);
    // q^{2uv - n(u-v) - n(n+1)/2}: in x units 2*du*dv - 2n(du-dv) - 2n(n+1)
    const long xe = 2L * du * dv - 2L * n * (du - dv) - 2L * n * (n + 1);
    return r.shifted(static_cast<int>(xe));
}

QLaurent rmat_inv(HalfInt a, HalfInt b, HalfInt u, HalfInt v, HalfInt h, HalfInt k) {
    if (!valid_state(b, h) || !valid_state(a, k) || !valid_state(a, u) || !valid_state(b, v))
        return QLaurent::zero();
    const int n2 = u.doubled() - k.doubled();
    if (n2 != h.doubled() - v.doubled() || n2 < 0 || n2 % 2 != 0) return QLaurent::zero();
    const int n = n2 / 2;
    const int db = b.doubled(), du = u.doubled(), dv = v.doubled();
    QLaurent r = qfact(n) * (QLaurent::monomial(-4) - QLaurent::monomial(4)).pow(n);
    r = r * qbinom((db - dv) / 2, n) * qbinom((db + dv) / 2 + n, n);
    const long xe = -2L * du * dv + 2L * n * (dv - du) + 2L * n * (n + 1);
    return r.shifted(static_cast<int>(xe));
}

QLaurent half_twist(HalfInt a, int sign) {
    const int da = a.doubled();
    // q^{a^2+a} = x^{da(da+2)}
    return QLaurent::monomial(sign * da * (da + 2), GaussRat::i_power(sign * da));
}

}  // namespace ktg
