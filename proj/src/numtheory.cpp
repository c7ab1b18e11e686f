#include "locker/numtheory.hpp"

#include <stdexcept>

namespace locker {

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
    Factorization f;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int a = 0;
        while (n % p == 0) {
            n /= p;
            ++a;
        }
        f.factors.emplace_back(p, a);
    }
    if (n > 1) f.factors.emplace_back(n, 1);
    return f;
}

std::uint64_t divisor_count(std::uint64_t n) {
    std::uint64_t d = 1;
    for (auto [p, a] : factorize(n).factors) d *= static_cast<std::uint64_t>(a) + 1;
    return d;
}

std::uint64_t theta(std::uint64_t n) {
    if (n == 0) return 0;
    // Newton iteration on integers; converges to floor(sqrt(n)).
    std::uint64_t x = n, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

bool is_perfect_square(std::uint64_t n) {
    std::uint64_t t = theta(n);
    return t * t == n;
}

std::vector<std::uint64_t> squarefree_upto(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("squarefree_upto: n must be >= 1");
    // Sieve: strike out multiples of p^2 for every prime p <= sqrt(n).
    std::vector<bool> squarefree(n + 1, true);
    std::vector<bool> composite(theta(n) + 1, false);
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (composite[p]) continue;
        for (std::uint64_t q = p * p; q <= theta(n); q += p) composite[q] = true;
        for (std::uint64_t m = p * p; m <= n; m += p * p) squarefree[m] = false;
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 1; m <= n; ++m)
        if (squarefree[m]) out.push_back(m);
    return out;
}

SignatureSet signature(std::uint64_t n) {
    SignatureSet s;
    for (auto [p, a] : factorize(n).factors) s.insert(a);
    return s;
}

std::vector<std::uint64_t> sigma_set(const ExponentPredicate& T, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("sigma_set: n must be >= 1");
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 1; m <= n; ++m) {
        bool ok = true;
        for (int a : signature(m))
            if (!T(a)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(m);
    }
    return out;
}

std::vector<std::uint64_t> sigma_set(const SignatureSet& T, std::uint64_t n) {
    return sigma_set([&T](int a) { return T.count(a) > 0; }, n);
}

ExponentPredicate upsilon_predicate(int m) {
    if (m < 1) throw std::invalid_argument("upsilon_predicate: m must be >= 1");
    return [m](int x) { return ((x % (2 * m)) + 2 * m) % (2 * m) < m; };
}

}  // namespace locker
