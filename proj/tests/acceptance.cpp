// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any gating criterion fails.

#include <chrono>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "locker/cli.hpp"
#include "locker/engine.hpp"
#include "locker/numtheory.hpp"
#include "locker/verifier.hpp"

using namespace locker;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

MoveSequence everyone_upto(int p) {
    std::vector<int> ms(static_cast<std::size_t>(p));
    std::iota(ms.begin(), ms.end(), 1);
    return MoveSequence(ms);
}

void criterion1_classic_answer() {
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream out, err;
    int code = cli::run({"simulate", "-n", "100", "--moves", "1..100", "--as-indices"}, out, err);
    double secs = seconds_since(t0);
    bool ok = code == 0 && out.str() == "1 4 9 16 25 36 49 64 81 100\n" && secs < 1.0;
    std::ostringstream d;
    d << "open lockers: " << out.str().substr(0, out.str().size() - 1) << ", count 10 = theta(100), "
      << secs << " s";
    report(1, "classic 100-locker answer", ok, d.str());
}

void criterion2_exhaustive_equivalence() {
    auto t0 = std::chrono::steady_clock::now();
    auto r = check_forward_equivalence(12, 0, 0);
    double secs = seconds_since(t0);
    bool ok = r.attempted == 4096 && r.ok() && secs < 30.0;
    report(2, "exhaustive n=12 forward/inverse equivalence", ok,
           r.render() + ", " + std::to_string(secs) + " s");
}

void criterion3_isomorphism() {
    const int n = 500;
    SplitMix64 rng(2024);
    long passed = 0;
    std::string cex;
    for (int t = 0; t < 1000; ++t) {
        IndexSet a = rng.subset(n), b = rng.subset(n);
        if (forward_divisor_parity(sym_diff(a, b)) ==
            xor_states(forward_divisor_parity(a), forward_divisor_parity(b)))
            ++passed;
        else if (cex.empty())
            cex = "trial " + std::to_string(t);
    }
    report(3, "isomorphism f(u xor u') = f(u) + f(u') at n=500",
           passed == 1000, std::to_string(passed) + "/1000" + (cex.empty() ? "" : ", " + cex));
}

void criterion4_prefix_formula() {
    long checked = 0, good = 0;
    std::string cex;
    for (int n = 1; n <= 300; ++n) {
        for (int p = n / 2 + 1; p <= n; ++p) {
            ++checked;
            long oracle = count_open(simulate(ProblemSpec::all_closed(n, everyone_upto(p))));
            if (count_open_prefix(p, n) == oracle)
                ++good;
            else if (cex.empty())
                cex = "n=" + std::to_string(n) + " p=" + std::to_string(p);
        }
    }
    bool spot = count_open_prefix(51, 100) == 53 &&
                count_open(simulate(ProblemSpec::all_closed(100, everyone_upto(51)))) == 53;
    report(4, "prefix-count formula vs oracle, n<=300", good == checked && spot,
           std::to_string(good) + "/" + std::to_string(checked) +
               ", omega(51,100)=53 " + (spot ? "confirmed" : "WRONG") +
               (cex.empty() ? "" : ", first mismatch " + cex));
}

void criterion5_basis_property() {
    long checked = 0, good = 0;
    std::string cex;
    for (int n = 1; n <= 500; ++n)
        for (int k = 1; k <= n; ++k) {
            ++checked;
            if (forward_divisor_parity(basis_set(k, n)) == LockerState::from_open(n, {k}))
                ++good;
            else if (cex.empty())
                cex = "n=" + std::to_string(n) + " k=" + std::to_string(k);
        }
    report(5, "basis sets open exactly one locker, n<=500", good == checked,
           std::to_string(good) + "/" + std::to_string(checked) +
               (cex.empty() ? "" : ", first mismatch " + cex));
}

void criterion6_initial_states() {
    const int n = 200;
    SplitMix64 rng(6);
    long good = 0;
    for (int t = 0; t < 500; ++t) {
        IndexSet u = rng.subset(n);
        LockerState v0 = rng.state_of(n);
        LockerState simulated = simulate(ProblemSpec(n, v0, MoveSequence(u.members())));
        if (simulated == xor_states(v0, forward_divisor_parity(u))) ++good;
    }
    report(6, "arbitrary initial states at n=200", good == 500,
           std::to_string(good) + "/500");
}

void criterion7_repetition_parity() {
    const int n = 50;
    SplitMix64 rng(7);
    long good = 0;
    for (int t = 0; t < 200; ++t) {
        int len = rng.index(5 * n);
        std::vector<int> ms;
        for (int i = 0; i < len; ++i) ms.push_back(rng.index(2 * n));
        LockerState by_sim = simulate(ProblemSpec::all_closed(n, MoveSequence(ms)));
        if (by_sim == forward_divisor_parity(reduce_moves(MoveSequence(ms), n))) ++good;
    }
    report(7, "repeated moves reduce by parity at n=50", good == 200,
           std::to_string(good) + "/200");
}

void criterion8_number_theory_oracles() {
    bool ok = true;
    std::string detail;
    for (std::uint64_t n = 1; n <= 10000 && ok; ++n) {
        std::uint64_t enumerated = 0;
        for (std::uint64_t d = 1; d <= n; ++d)
            if (n % d == 0) ++enumerated;
        if (divisor_count(n) != enumerated) {
            ok = false;
            detail = "divisor_count mismatch at n=" + std::to_string(n);
        }
        if (is_perfect_square(n) != (enumerated % 2 == 1)) {
            ok = false;
            detail = "square/parity mismatch at n=" + std::to_string(n);
        }
    }
    if (ok) {
        auto sieved = squarefree_upto(100000);
        std::vector<std::uint64_t> expected;
        for (std::uint64_t n = 1; n <= 100000; ++n) {
            bool sf = true;
            for (std::uint64_t d = 2; d * d <= n && sf; ++d)
                if (n % (d * d) == 0) sf = false;
            if (sf) expected.push_back(n);
        }
        if (sieved != expected) {
            ok = false;
            detail = "squarefree sieve disagrees with trial division";
        }
    }
    report(8, "number-theory oracles (d(n), sieve, square parity)", ok, detail);
}

void criterion9_theorem8() {
    bool gating_ok = true;
    std::string detail;
    for (int m = 1; m <= 5; ++m) {
        std::vector<int> marchers;
        for (auto s : sigma_set([m](int a) { return a % m == 0; }, 2000))
            marchers.push_back(static_cast<int>(s));
        LockerState oracle = simulate(ProblemSpec::all_closed(2000, MoveSequence(marchers)));
        LockerState predicted = torrence_open_state_parallel(m, 2000);
        bool match = predicted == oracle;
        bool m1_forced = m != 1 || predicted == closed_all(2000);
        if (!detail.empty()) detail += ", ";
        detail += "m=" + std::to_string(m) + (match && m1_forced ? " match" : " MISMATCH");
        if (!match || !m1_forced) {
            int j = 1;
            while (j <= 2000 && predicted.open(j) == oracle.open(j)) ++j;
            detail += " counterexample j=" + std::to_string(j);
            if (m <= 2) gating_ok = false;  // m in {3,4,5} is reported, not gated
        }
    }
    report(9, "signature-family prediction vs oracle, n=2000", gating_ok, detail);
}

void criterion10_performance() {
    auto t0 = std::chrono::steady_clock::now();
    LockerState big = simulate(ProblemSpec::all_closed(1000000, everyone_upto(1000000)));
    double sim_secs = seconds_since(t0);
    bool sim_ok = sim_secs < 5.0 && count_open(big) == 1000;

    t0 = std::chrono::steady_clock::now();
    LockerState fwd = forward_divisor_parity(IndexSet::full(100000));
    double fwd_secs = seconds_since(t0);
    bool fwd_ok = fwd_secs < 10.0 && fwd == closed_all(100000);

    std::ostringstream d;
    d << "simulate n=1e6 in " << sim_secs << " s, forward n=1e5 in " << fwd_secs << " s";
    report(10, "performance sanity", sim_ok && fwd_ok, d.str());
}

}  // namespace

int main() {
    criterion1_classic_answer();
    criterion2_exhaustive_equivalence();
    criterion3_isomorphism();
    criterion4_prefix_formula();
    criterion5_basis_property();
    criterion6_initial_states();
    criterion7_repetition_parity();
    criterion8_number_theory_oracles();
    criterion9_theorem8();
    criterion10_performance();
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
