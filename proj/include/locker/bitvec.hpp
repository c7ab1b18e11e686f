#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace locker {

// Subset of the students {1..n}. Bit-packed, word-parallel symmetric
// difference. Values are immutable after construction; indices are
// 1-based at every interface.
class IndexSet {
public:
    explicit IndexSet(int universe) : n_(check_universe(universe)), w_(word_count(universe), 0) {}

    IndexSet(int universe, std::initializer_list<int> members) : IndexSet(universe) {
        for (int i : members) set_checked(i);
    }

    static IndexSet of(int universe, const std::vector<int>& members) {
        IndexSet u(universe);
        for (int i : members) u.set_checked(i);
        return u;
    }

    static IndexSet full(int universe) {
        IndexSet u(universe);
        for (auto& w : u.w_) w = ~std::uint64_t{0};
        u.mask_tail();
        return u;
    }

    int universe() const { return n_; }

    bool contains(int i) const {
        if (i < 1 || i > n_) return false;
        return (w_[static_cast<std::size_t>(i - 1) >> 6] >> ((i - 1) & 63)) & 1u;
    }

    std::size_t size() const {
        std::size_t c = 0;
        for (std::uint64_t w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const {
        for (std::uint64_t w : w_)
            if (w) return false;
        return true;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(size());
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                int b = std::countr_zero(w);
                out.push_back(static_cast<int>(wi * 64) + b + 1);
                w &= w - 1;
            }
        }
        return out;
    }

    std::span<const std::uint64_t> words() const { return w_; }

    friend bool operator==(const IndexSet& a, const IndexSet& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }

    friend IndexSet sym_diff(const IndexSet& a, const IndexSet& b) {
        if (a.n_ != b.n_)
            throw std::invalid_argument("sym_diff: universe mismatch (" + std::to_string(a.n_) +
                                        " vs " + std::to_string(b.n_) + ")");
        IndexSet r(a.n_);
        for (std::size_t i = 0; i < a.w_.size(); ++i) r.w_[i] = a.w_[i] ^ b.w_[i];
        return r;
    }

    // Smallest member, or nullopt for the empty set.
    friend std::optional<int> min_element(const IndexSet& u) {
        for (std::size_t wi = 0; wi < u.w_.size(); ++wi)
            if (u.w_[wi]) return static_cast<int>(wi * 64) + std::countr_zero(u.w_[wi]) + 1;
        return std::nullopt;
    }

private:
    static int check_universe(int n) {
        if (n < 1) throw std::invalid_argument("universe must be >= 1");
        return n;
    }
    static std::size_t word_count(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }
    void set_checked(int i) {
        if (i < 1 || i > n_)
            throw std::invalid_argument("member " + std::to_string(i) + " outside universe 1.." +
                                        std::to_string(n_));
        w_[static_cast<std::size_t>(i - 1) >> 6] |= std::uint64_t{1} << ((i - 1) & 63);
    }
    void mask_tail() {
        int r = n_ & 63;
        if (r) w_.back() &= (std::uint64_t{1} << r) - 1;
    }

    int n_;
    std::vector<std::uint64_t> w_;
};

// The bit string s_1..s_n; s_j = 1 means locker j is open.
class LockerState {
public:
    explicit LockerState(int n) : n_(check_len(n)), w_(word_count(n), 0) {}

    static LockerState from_open(int n, const std::vector<int>& open) {
        LockerState v(n);
        for (int j : open) {
            if (j < 1 || j > n)
                throw std::invalid_argument("locker " + std::to_string(j) + " outside 1.." +
                                            std::to_string(n));
            v.w_[static_cast<std::size_t>(j - 1) >> 6] |= std::uint64_t{1} << ((j - 1) & 63);
        }
        return v;
    }

    // Raw word form; tail bits past n must be zero.
    static LockerState from_words(int n, std::vector<std::uint64_t> words) {
        LockerState v(n);
        if (words.size() != v.w_.size())
            throw std::invalid_argument("from_words: wrong word count");
        v.w_ = std::move(words);
        int r = n & 63;
        if (r) v.w_.back() &= (std::uint64_t{1} << r) - 1;
        return v;
    }

    int size() const { return n_; }

    bool open(int j) const {
        if (j < 1 || j > n_)
            throw std::invalid_argument("locker index " + std::to_string(j) + " out of range");
        return (w_[static_cast<std::size_t>(j - 1) >> 6] >> ((j - 1) & 63)) & 1u;
    }

    int count_open() const {
        int c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    std::vector<int> open_indices() const {
        std::vector<int> out;
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                out.push_back(static_cast<int>(wi * 64) + std::countr_zero(w) + 1);
                w &= w - 1;
            }
        }
        return out;
    }

    std::span<const std::uint64_t> words() const { return w_; }

    // Leftmost character is locker 1.
    std::string to_string() const {
        std::string s(static_cast<std::size_t>(n_), '0');
        for (int j = 1; j <= n_; ++j)
            if (open(j)) s[static_cast<std::size_t>(j - 1)] = '1';
        return s;
    }

    friend bool operator==(const LockerState& a, const LockerState& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }

    friend LockerState xor_states(const LockerState& a, const LockerState& b) {
        if (a.n_ != b.n_)
            throw std::invalid_argument("xor_states: length mismatch (" + std::to_string(a.n_) +
                                        " vs " + std::to_string(b.n_) + ")");
        LockerState r(a.n_);
        for (std::size_t i = 0; i < a.w_.size(); ++i) r.w_[i] = a.w_[i] ^ b.w_[i];
        return r;
    }

private:
    static int check_len(int n) {
        if (n < 1) throw std::invalid_argument("state length must be >= 1");
        return n;
    }
    static std::size_t word_count(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

    int n_;
    std::vector<std::uint64_t> w_;
};

// Ordered list of student moves, repetitions allowed. Entries past the
// last locker are legal; reduce_moves drops them.
struct MoveSequence {
    std::vector<int> moves;

    MoveSequence() = default;
    explicit MoveSequence(std::vector<int> ms) : moves(std::move(ms)) {
        for (int i : moves)
            if (i < 1) throw std::invalid_argument("students are numbered from 1");
    }

    friend bool operator==(const MoveSequence&, const MoveSequence&) = default;
};

// Parity-reduce a move sequence: i is in the result iff i <= n and i
// occurs an odd number of times. Students past locker n toggle nothing.
inline IndexSet reduce_moves(const MoveSequence& ms, int n) {
    IndexSet acc(n);
    for (int i : ms.moves) {
        if (i > n) continue;
        acc = sym_diff(acc, IndexSet(n, {i}));
    }
    return acc;
}

}  // namespace locker
