#include "locker/verifier.hpp"

#include <chrono>
#include <sstream>
#include <vector>

#include "locker/engine.hpp"
#include "locker/numtheory.hpp"

namespace locker {

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
public:
    Timer() : start_(Clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(Clock::now() - start_).count();
    }

private:
    Clock::time_point start_;
};

// Loops below enumerate inputs in ascending order, so the first failure
// recorded is also the lexicographically smallest one.
void record_failure(CheckReport& r, const std::string& cex) {
    if (!r.counterexample) r.counterexample = cex;
}

IndexSet subset_from_mask(int n, std::uint64_t mask) {
    std::vector<int> members;
    for (int i = 1; i <= n; ++i)
        if ((mask >> (i - 1)) & 1) members.push_back(i);
    return IndexSet::of(n, members);
}

std::string describe(const IndexSet& u) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int i : u.members()) {
        if (!first) os << ",";
        os << i;
        first = false;
    }
    os << "}";
    return os.str();
}

bool forward_routes_agree(const IndexSet& u, std::string* why) {
    int n = u.universe();
    LockerState by_toggle = forward_divisor_parity(u);
    LockerState by_parallel = forward_divisor_parity_parallel(u);
    LockerState by_basis = forward_basis(u).state;
    LockerState by_oracle = simulate(ProblemSpec::all_closed(n, MoveSequence(u.members())));
    if (by_toggle != by_oracle) {
        *why = "divisor-parity != oracle";
        return false;
    }
    if (by_parallel != by_oracle) {
        *why = "parallel divisor-parity != oracle";
        return false;
    }
    if (by_basis != by_oracle) {
        *why = "basis peel != oracle";
        return false;
    }
    if (inverse_map(by_oracle) != u) {
        *why = "inverse(forward) != identity";
        return false;
    }
    return true;
}

constexpr int kExhaustiveLimit = 12;  // 4096 subsets, sweeps stay under seconds

}  // namespace

std::string CheckReport::render() const {
    std::ostringstream os;
    os << "claim=" << claim << " attempted=" << attempted << " passed=" << passed;
    if (counterexample) os << " counterexample=" << *counterexample;
    return os.str();
}

CheckReport check_forward_equivalence(int n, int trials, std::uint64_t seed) {
    Timer timer;
    CheckReport r;
    r.claim = "forward-equivalence";
    auto run_one = [&](const IndexSet& u) {
        ++r.attempted;
        std::string why;
        if (forward_routes_agree(u, &why))
            ++r.passed;
        else
            record_failure(r, "n=" + std::to_string(n) + " u=" + describe(u) + " (" + why + ")");
    };
    if (n <= kExhaustiveLimit) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
            run_one(subset_from_mask(n, mask));
    } else {
        run_one(IndexSet(n));
        run_one(IndexSet::full(n));
        for (int i = 1; i <= n; ++i) run_one(IndexSet(n, {i}));
        SplitMix64 rng(seed);
        for (int t = 0; t < trials; ++t) run_one(rng.subset(n));
    }
    r.seconds = timer.seconds();
    return r;
}

CheckReport check_group_and_homomorphism(int n, int trials, std::uint64_t seed) {
    Timer timer;
    CheckReport r;
    r.claim = "group-and-homomorphism";
    IndexSet empty(n);
    auto run_one = [&](const IndexSet& a, const IndexSet& b, const IndexSet& c) {
        ++r.attempted;
        auto fail = [&](const char* law) {
            record_failure(r, "n=" + std::to_string(n) + " u1=" + describe(a) +
                                  " u2=" + describe(b) + " u3=" + describe(c) + " (" + law + ")");
        };
        if (sym_diff(a, b) != sym_diff(b, a)) return fail("commutativity");
        if (sym_diff(sym_diff(a, b), c) != sym_diff(a, sym_diff(b, c)))
            return fail("associativity");
        if (sym_diff(a, empty) != a) return fail("identity");
        if (!sym_diff(a, a).empty()) return fail("self-inverse");
        LockerState fa = forward_divisor_parity(a);
        LockerState fb = forward_divisor_parity(b);
        LockerState fc = forward_divisor_parity(c);
        if (xor_states(fa, fb) != xor_states(fb, fa)) return fail("state commutativity");
        if (xor_states(xor_states(fa, fb), fc) != xor_states(fa, xor_states(fb, fc)))
            return fail("state associativity");
        if (xor_states(fa, LockerState(n)) != fa) return fail("state identity");
        if (xor_states(fa, fa) != LockerState(n)) return fail("state self-inverse");
        if (forward_divisor_parity(sym_diff(a, b)) != xor_states(fa, fb))
            return fail("homomorphism");
        ++r.passed;
    };
    if (n <= 4) {
        std::uint64_t total = std::uint64_t{1} << n;
        for (std::uint64_t ma = 0; ma < total; ++ma)
            for (std::uint64_t mb = 0; mb < total; ++mb)
                for (std::uint64_t mc = 0; mc < total; ++mc)
                    run_one(subset_from_mask(n, ma), subset_from_mask(n, mb),
                            subset_from_mask(n, mc));
    } else {
        SplitMix64 rng(seed);
        for (int t = 0; t < trials; ++t) {
            IndexSet a = rng.subset(n);
            IndexSet b = rng.subset(n);
            IndexSet c = rng.subset(n);
            run_one(a, b, c);
        }
    }
    r.seconds = timer.seconds();
    return r;
}

CheckReport check_closed_forms(int n_max) {
    Timer timer;
    CheckReport r;
    r.claim = "closed-forms";
    auto check = [&](bool ok, const std::string& cex) {
        ++r.attempted;
        if (ok)
            ++r.passed;
        else
            record_failure(r, cex);
    };
    for (int n = 1; n <= n_max; ++n) {
        std::string tag = "n=" + std::to_string(n);
        std::vector<int> everyone;
        for (int i = 1; i <= n; ++i) everyone.push_back(i);
        LockerState all = simulate(ProblemSpec::all_closed(n, MoveSequence(everyone)));
        check(closed_all(n) == all, tag + " (all students)");
        for (int i = 1; i <= n; ++i) {
            check(closed_single(i, n) ==
                      simulate(ProblemSpec::all_closed(n, MoveSequence({i}))),
                  tag + " i=" + std::to_string(i) + " (single)");
            check(closed_all_but_one(i, n) ==
                      xor_states(all, simulate(ProblemSpec::all_closed(n, MoveSequence({i})))),
                  tag + " i=" + std::to_string(i) + " (all-but-one)");
        }
        for (int p = n / 2 + 1; p <= n; ++p) {
            std::vector<int> prefix(everyone.begin(), everyone.begin() + p);
            int omega =
                count_open(simulate(ProblemSpec::all_closed(n, MoveSequence(prefix))));
            check(count_open_prefix(p, n) == omega,
                  tag + " p=" + std::to_string(p) + " (prefix count)");
        }
        for (int k = 1; k <= n; ++k) {
            LockerState image = forward_divisor_parity(basis_set(k, n));
            check(image == LockerState::from_open(n, {k}),
                  tag + " k=" + std::to_string(k) + " (basis)");
        }
    }
    r.seconds = timer.seconds();
    return r;
}

CheckReport check_theorem8(int m_max, int n) {
    Timer timer;
    CheckReport r;
    r.claim = "theorem8-signature-family";
    for (int m = 1; m <= m_max; ++m) {
        std::vector<int> marchers;
        for (std::uint64_t s :
             sigma_set([m](int a) { return a % m == 0; }, static_cast<std::uint64_t>(n)))
            marchers.push_back(static_cast<int>(s));
        LockerState oracle = simulate(ProblemSpec::all_closed(n, MoveSequence(marchers)));
        LockerState predicted = torrence_open_state_parallel(m, n);
        auto check = [&](bool ok, const std::string& cex) {
            ++r.attempted;
            if (ok)
                ++r.passed;
            else
                record_failure(r, cex);
        };
        std::string tag = "m=" + std::to_string(m) + " n=" + std::to_string(n);
        if (predicted == oracle) {
            check(true, "");
        } else {
            int j = 1;
            while (predicted.open(j) == oracle.open(j)) ++j;
            check(false, tag + " j=" + std::to_string(j) + " (prediction != oracle)");
        }
        if (m == 1) check(predicted == closed_all(n), tag + " (m=1 must equal closed_all)");
    }
    r.seconds = timer.seconds();
    return r;
}

}  // namespace locker
