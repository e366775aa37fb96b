#include "ktg/qcombinatorics.hpp"

#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace ktg {

namespace {

std::mutex cache_mu;
std::vector<QLaurent> fact_cache;  // fact_cache[n] = [n]!
std::unordered_map<long, QLaurent> binom_cache;

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

}  // namespace

QLaurent qint(int n) {
    if (n < 0) return -qint(-n);
    QLaurent r;
    for (int j = 0; j < n; ++j) r += QLaurent::monomial(4 * (n - 1 - 2 * j));
    return r;
}

QLaurent qfact(int n) {
    if (n < 0) throw std::domain_error("qfact: negative argument");
    std::lock_guard lock(cache_mu);
    if (fact_cache.empty()) fact_cache.push_back(QLaurent::one());
    while (static_cast<int>(fact_cache.size()) <= n)
        fact_cache.push_back(fact_cache.back() * qint(static_cast<int>(fact_cache.size())));
    return fact_cache[n];
}

QLaurent qbinom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return QLaurent::zero();
    if (k == 0 || k == n) return QLaurent::one();
    const long key = static_cast<long>(n) * 4096 + k;
    {
        std::lock_guard lock(cache_mu);
        auto it = binom_cache.find(key);
        if (it != binom_cache.end()) return it->second;
    }
    auto q = qfact(n).divide_exact(qfact(k) * qfact(n - k));
    if (!q) throw std::logic_error("qbinom: division not exact");
    std::lock_guard lock(cache_mu);
    if (binom_cache.size() < cache_cap()) binom_cache.emplace(key, *q);
    return *q;
}

QLaurent qmultinom(const std::vector<int>& parts) {
    QLaurent r = QLaurent::one();
    int sum = 0;
    for (int p : parts) {
        if (p < 0) return QLaurent::zero();
        sum += p;
        r = r * qbinom(sum, p);
    }
    return r;
}

}  // namespace ktg
