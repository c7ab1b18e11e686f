#include "locker/engine.hpp"

#include <cstdint>
#include <string>

#include "locker/numtheory.hpp"

namespace locker {

namespace {

inline void toggle_multiples(std::vector<std::uint64_t>& words, int i, int n) {
    for (int j = i; j <= n; j += i)
        words[static_cast<std::size_t>(j - 1) >> 6] ^= std::uint64_t{1} << ((j - 1) & 63);
}

}  // namespace

LockerState simulate(const ProblemSpec& spec) {
    std::vector<std::uint64_t> words(spec.initial.words().begin(), spec.initial.words().end());
    for (int i : spec.moves.moves) {
        if (i > spec.n) continue;  // no multiple of i within 1..n
        toggle_multiples(words, i, spec.n);
    }
    return LockerState::from_words(spec.n, std::move(words));
}

LockerState forward_divisor_parity(const IndexSet& u) {
    int n = u.universe();
    std::vector<std::uint64_t> words((static_cast<std::size_t>(n) + 63) / 64, 0);
    for (int i : u.members()) toggle_multiples(words, i, n);
    return LockerState::from_words(n, std::move(words));
}

LockerState forward_divisor_parity_parallel(const IndexSet& u) {
    int n = u.universe();
    std::vector<std::uint64_t> words((static_cast<std::size_t>(n) + 63) / 64, 0);
#pragma omp parallel for schedule(dynamic, 64)
    for (int j = 1; j <= n; ++j) {
        // Parity of |{ i in u : i | j }| via divisor pairs of j.
        unsigned parity = 0;
        for (int d = 1; static_cast<long long>(d) * d <= j; ++d) {
            if (j % d) continue;
            parity ^= static_cast<unsigned>(u.contains(d));
            int e = j / d;
            if (e != d) parity ^= static_cast<unsigned>(u.contains(e));
        }
        if (parity)
            words[static_cast<std::size_t>(j - 1) >> 6] |= std::uint64_t{1} << ((j - 1) & 63);
    }
    return LockerState::from_words(n, std::move(words));
}

IndexSet basis_set(int k, int n) {
    if (k < 1 || k > n)
        throw std::invalid_argument("basis_set: k = " + std::to_string(k) + " outside 1.." +
                                    std::to_string(n));
    IndexSet u(n);
    for (std::uint64_t s : squarefree_upto(static_cast<std::uint64_t>(n / k)))
        u = sym_diff(u, IndexSet(n, {static_cast<int>(s) * k}));
    return u;
}

ForwardBasisResult forward_basis(const IndexSet& u) {
    int n = u.universe();
    IndexSet working = u;
    std::vector<int> opened;
    while (auto k = min_element(working)) {
        opened.push_back(*k);
        working = sym_diff(working, basis_set(*k, n));
    }
    return {LockerState::from_open(n, opened), std::move(opened)};
}

IndexSet inverse_map(const LockerState& v) {
    int n = v.size();
    IndexSet u(n);
    for (int j : v.open_indices()) u = sym_diff(u, basis_set(j, n));
    return u;
}

IndexSet solve_from_initial(const LockerState& v0, const LockerState& v_target) {
    return inverse_map(xor_states(v0, v_target));
}

LockerState closed_all(int n) {
    std::vector<int> open;
    for (int p = 1; p * p <= n; ++p) open.push_back(p * p);
    return LockerState::from_open(n, open);
}

LockerState closed_single(int i, int n) {
    if (i < 1) throw std::invalid_argument("closed_single: i must be >= 1");
    std::vector<int> open;
    for (int j = i; j <= n; j += i) open.push_back(j);
    return LockerState::from_open(n, open);
}

LockerState closed_all_but_one(int i, int n) {
    if (i < 1 || i > n)
        throw std::invalid_argument("closed_all_but_one: i = " + std::to_string(i) +
                                    " outside 1.." + std::to_string(n));
    return xor_states(closed_all(n), closed_single(i, n));
}

long count_open_prefix(int p, int n) {
    if (n < 1 || p > n || 2 * p <= n)
        throw std::domain_error("count_open_prefix: requires n/2 < p <= n");
    auto th = [](int x) { return static_cast<long>(theta(static_cast<std::uint64_t>(x))); };
    return th(p) + ((n - p) - (th(n) - th(p)));
}

namespace {

inline bool torrence_open(int j, const ExponentPredicate& pred) {
    for (auto [p, a] : factorize(static_cast<std::uint64_t>(j)).factors)
        if (!pred(a)) return false;
    return true;
}

}  // namespace

LockerState torrence_open_state(int m, int n) {
    auto pred = upsilon_predicate(m);
    std::vector<int> open;
    for (int j = 1; j <= n; ++j)
        if (torrence_open(j, pred)) open.push_back(j);
    return LockerState::from_open(n, open);
}

LockerState torrence_open_state_parallel(int m, int n) {
    auto pred = upsilon_predicate(m);
    std::vector<std::uint64_t> words((static_cast<std::size_t>(n) + 63) / 64, 0);
#pragma omp parallel for schedule(dynamic, 256)
    for (int j = 1; j <= n; ++j)
        if (torrence_open(j, pred))
            words[static_cast<std::size_t>(j - 1) >> 6] |= std::uint64_t{1} << ((j - 1) & 63);
    return LockerState::from_words(n, std::move(words));
}

int count_open(const LockerState& v) { return v.count_open(); }

namespace ref {

LockerState forward_divisor_parity(const IndexSet& u) {
    int n = u.universe();
    std::vector<int> open;
    for (int j = 1; j <= n; ++j) {
        int divisors_in_u = 0;
        for (int i : u.members())
            if (j % i == 0) ++divisors_in_u;
        if (divisors_in_u % 2) open.push_back(j);
    }
    return LockerState::from_open(n, open);
}

LockerState closed_all(int n) {
    std::vector<int> open;
    for (int j = 1; j <= n; ++j)
        if (is_perfect_square(static_cast<std::uint64_t>(j))) open.push_back(j);
    return LockerState::from_open(n, open);
}

}  // namespace ref

}  // namespace locker
