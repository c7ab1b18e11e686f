#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "locker/bitvec.hpp"

namespace locker {

// Deterministic 64-bit generator (splitmix64). Fixed here so reports
// reproduce across platforms; no ambient randomness anywhere.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [1, bound].
    int index(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)) + 1; }

    IndexSet subset(int n) {
        IndexSet u(n);
        for (int i = 1; i <= n; ++i)
            if (next() & 1) u = sym_diff(u, IndexSet(n, {i}));
        return u;
    }

    LockerState state_of(int n) {
        std::vector<int> open;
        for (int j = 1; j <= n; ++j)
            if (next() & 1) open.push_back(j);
        return LockerState::from_open(n, open);
    }
};

struct CheckReport {
    std::string claim;
    long attempted = 0;
    long passed = 0;
    std::optional<std::string> counterexample;  // present iff passed < attempted
    double seconds = 0.0;

    bool ok() const { return passed == attempted; }

    // One line per claim: claim=<id> attempted=<k> passed=<k> [counterexample=<...>]
    std::string render() const;
};

// Theorem 1 / Corollary 1 plus the game rule: forward_basis,
// forward_divisor_parity and the oracle agree, and inverse_map inverts.
// Exhaustive over all 2^n subsets when n <= 12, otherwise `trials`
// seeded-random subsets plus all singletons, the empty set and the
// full set.
CheckReport check_forward_equivalence(int n, int trials, std::uint64_t seed);

// Theorems 2 and 3: abelian-group laws for sym_diff and xor_states,
// and forward(u xor u') = forward(u) + forward(u').
CheckReport check_group_and_homomorphism(int n, int trials, std::uint64_t seed);

// Theorems 6, 7, 9, 10 and Proposition 1 against the oracle, for every
// n <= n_max over each operation's full valid parameter range.
CheckReport check_closed_forms(int n_max);

// Signature-family prediction vs oracle for m <= m_max; the m = 1 case
// must also equal closed_all. Mismatches are reported as data, never
// aborts.
CheckReport check_theorem8(int m_max, int n);

}  // namespace locker
