#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

namespace locker {

// Canonical prime factorization: (p_i, alpha_i) pairs, primes strictly
// increasing. Empty exactly for 1.
struct Factorization {
    std::vector<std::pair<std::uint64_t, int>> factors;

    std::uint64_t value() const {
        std::uint64_t v = 1;
        for (auto [p, a] : factors)
            for (int i = 0; i < a; ++i) v *= p;
        return v;
    }

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Set of exponents appearing in a factorization (duplicates collapse).
using SignatureSet = std::set<int>;

// Exponent filter used by sigma_set when the exponent set is infinite.
using ExponentPredicate = std::function<bool(int)>;

Factorization factorize(std::uint64_t n);        // trial division; throws on n = 0
std::uint64_t divisor_count(std::uint64_t n);    // prod(alpha_i + 1)
std::uint64_t theta(std::uint64_t n);            // floor(sqrt(n)), exact integer arithmetic
bool is_perfect_square(std::uint64_t n);
std::vector<std::uint64_t> squarefree_upto(std::uint64_t n);
SignatureSet signature(std::uint64_t n);

// All m <= n whose signature is contained in T, ascending. 1 is always
// included (its signature is empty).
std::vector<std::uint64_t> sigma_set(const ExponentPredicate& T, std::uint64_t n);
std::vector<std::uint64_t> sigma_set(const SignatureSet& T, std::uint64_t n);

// "x mod 2m lies in {0,...,m-1}".
ExponentPredicate upsilon_predicate(int m);

}  // namespace locker
