#pragma once

#include <vector>

#include "locker/bitvec.hpp"

namespace locker {

// One game configuration: n lockers, an initial state of length n, and
// an ordered move list (repetitions allowed, entries > n legal).
struct ProblemSpec {
    int n;
    LockerState initial;
    MoveSequence moves;

    ProblemSpec(int n_, LockerState initial_, MoveSequence moves_)
        : n(n_), initial(std::move(initial_)), moves(std::move(moves_)) {
        if (initial.size() != n)
            throw std::invalid_argument("ProblemSpec: initial state length != n");
    }

    static ProblemSpec all_closed(int n_, MoveSequence moves_) {
        return ProblemSpec(n_, LockerState(n_), std::move(moves_));
    }
};

// The definitional oracle: apply every move in order, toggling each
// multiple of the mover's number. Everything else is tested against it.
LockerState simulate(const ProblemSpec& spec);

// s_j = 1 iff the number of students in u dividing j is odd.
// Serial path toggles multiples per student; the OpenMP path counts
// divisors per locker. Both satisfy the same contract.
LockerState forward_divisor_parity(const IndexSet& u);
LockerState forward_divisor_parity_parallel(const IndexSet& u);

// The student set { k*s : s squarefree, k*s <= n }; its forward image
// opens locker k alone.
IndexSet basis_set(int k, int n);

struct ForwardBasisResult {
    LockerState state;
    std::vector<int> opened;  // the peeled minima, ascending
};

// Basis peeling: repeatedly remove min(working) = k by xoring in
// basis_set(k, n), recording k. Each step strictly raises the minimum
// (every non-k member of basis_set(k, n) exceeds k), so the loop runs
// at most n times. The recorded k's are exactly the open lockers.
ForwardBasisResult forward_basis(const IndexSet& u);

// Symmetric difference of basis_set(j, n) over the open positions j.
// Forward of the result reproduces v.
IndexSet inverse_map(const LockerState& v);

// Student set whose march turns v0 into v_target.
IndexSet solve_from_initial(const LockerState& v0, const LockerState& v_target);

LockerState closed_all(int n);                    // open iff perfect square
LockerState closed_single(int i, int n);          // open iff i | j
LockerState closed_all_but_one(int i, int n);     // everyone but student i

// Open-locker count when students 1..p march, valid only for
// n/2 < p <= n. Below that threshold the formula does not hold; use
// simulate instead.
long count_open_prefix(int p, int n);

// Final state when sigma(multiples of m) marches: locker j open iff
// every exponent of j is in {0..m-1} mod 2m. The "multiples of m"
// reading of the signature family is an interpretation; the verifier
// checks it against the oracle rather than assuming it.
LockerState torrence_open_state(int m, int n);
LockerState torrence_open_state_parallel(int m, int n);

int count_open(const LockerState& v);

namespace ref {
// Naive per-locker references kept for testing and benchmarks only.
LockerState forward_divisor_parity(const IndexSet& u);
LockerState closed_all(int n);
}  // namespace ref

}  // namespace locker
