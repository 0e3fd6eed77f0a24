#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcores/partition.hpp"

namespace qcores {

/*
 * Bi-infinite 0/1 boundary words. Walking the border of the Ferrers diagram
 * from south-west to north-east, a "0" is a vertical step and a "1" a
 * horizontal one. The word is indexed by Z with the median convention: the
 * number of 1-letters at negative indices equals the number of 0-letters at
 * nonnegative indices (both equal the Durfee size). Under this convention
 *
 *     c_k = 0  iff  k ∈ { lambda_i - i : i >= 1 }   (parts padded with 0s),
 *     c_k = 1  iff  k ∈ { j - 1 - lambda'_j : j >= 1 }.
 *
 * A word is stored by its 0-letter set: a threshold below which every index
 * is a 0-letter, plus the finite sorted list of exceptional 0-letters at or
 * above it. Words are never materialized as arrays; all window iteration
 * takes explicit bounds, and arbitrary negative indices cost nothing.
 */
class BoundaryWord {
  public:
    // Word whose 0-letters are {k < all_zero_below} ∪ zeros.
    static BoundaryWord from_zero_set(long long all_zero_below, std::vector<long long> zeros) {
        BoundaryWord w;
        w.below_ = all_zero_below;
        std::sort(zeros.begin(), zeros.end());
        zeros.erase(std::unique(zeros.begin(), zeros.end()), zeros.end());
        // Drop redundant entries and absorb a run touching the threshold.
        std::vector<long long> kept;
        for (long long z : zeros)
            if (z >= w.below_) kept.push_back(z);
        std::size_t i = 0;
        while (i < kept.size() && kept[i] == w.below_) {
            ++w.below_;
            ++i;
        }
        w.zeros_.assign(kept.begin() + static_cast<long>(i), kept.end());
        return w;
    }

    static BoundaryWord encode(const Partition& p) {
        std::vector<long long> zeros;
        const int len = p.length();
        for (int i = 1; i <= len; ++i) zeros.push_back(p.part(i) - static_cast<long long>(i));
        return from_zero_set(-static_cast<long long>(len), std::move(zeros));
    }

    bool bit_is_zero(long long k) const {
        if (k < below_) return true;
        return std::binary_search(zeros_.begin(), zeros_.end(), k);
    }
    int bit(long long k) const { return bit_is_zero(k) ? 0 : 1; }

    long long threshold() const { return below_; }
    const std::vector<long long>& exceptional_zeros() const { return zeros_; }

    // #{k >= 0 : c_k = 0} - #{k < 0 : c_k = 1}; zero on median-normalized
    // words, and exactly the shift that renormalizes a subword.
    long long balance_offset() const { return below_ + static_cast<long long>(zeros_.size()); }
    bool balanced() const { return balance_offset() == 0; }

    // c'_k = c_{k+s}
    BoundaryWord shifted(long long s) const {
        BoundaryWord w;
        w.below_ = below_ - s;
        w.zeros_.reserve(zeros_.size());
        for (long long z : zeros_) w.zeros_.push_back(z - s);
        return w;
    }

    // The residue-k0 subword (c_{t*i + k0})_{i in Z}, indexed by i.
    BoundaryWord subword(long long t, long long k0) const {
        if (t < 1) throw std::invalid_argument("subword: modulus must be >= 1");
        // smallest i with t*i + k0 >= below_
        const long long below = floor_div(below_ - k0 + t - 1, t);
        std::vector<long long> zeros;
        for (long long z : zeros_)
            if (mod(z - k0, t) == 0) zeros.push_back((z - k0) / t);
        return from_zero_set(below, std::move(zeros));
    }

    long long count_zeros_in(long long lo, long long hi) const {  // [lo, hi)
        if (lo >= hi) return 0;
        long long n = std::max(0LL, std::min(hi, below_) - lo);
        auto a = std::lower_bound(zeros_.begin(), zeros_.end(), std::max(lo, below_));
        auto b = std::lower_bound(zeros_.begin(), zeros_.end(), hi);
        return n + (b - a);
    }
    long long count_ones_in(long long lo, long long hi) const {
        return (lo >= hi) ? 0 : (hi - lo) - count_zeros_in(lo, hi);
    }

    // Largest 0-letter index congruent to r (mod g); always exists.
    long long last_zero_in_residue(long long r, long long g) const {
        for (auto it = zeros_.rbegin(); it != zeros_.rend(); ++it)
            if (mod(*it - r, g) == 0) return *it;
        return below_ - 1 - mod(below_ - 1 - r, g);
    }

    // Smallest k with c_k = 1 (the first gap in the 0-letter set).
    long long first_one_index() const {
        long long k = below_;
        for (long long z : zeros_) {
            if (z == k)
                ++k;
            else if (z > k)
                break;
        }
        return k;
    }

    Partition decode() const {
        if (!balanced())
            throw std::invalid_argument("BoundaryWord::decode: word is not median-balanced");
        std::vector<int> parts;
        for (auto it = zeros_.rbegin(); it != zeros_.rend(); ++it) {
            const long long i = static_cast<long long>(parts.size()) + 1;
            parts.push_back(static_cast<int>(*it + i));
        }
        return Partition(std::move(parts));
    }

    // Finite window like ...001101|010011... with '|' before index 0.
    std::string window_string(long long lo, long long hi) const {
        std::string out = "...";
        for (long long k = lo; k < hi; ++k) {
            if (k == 0) out += '|';
            out += bit_is_zero(k) ? '0' : '1';
        }
        out += "...";
        return out;
    }

    friend bool operator==(const BoundaryWord& a, const BoundaryWord& b) = default;

    static long long mod(long long a, long long m) {
        long long r = a % m;
        return r < 0 ? r + m : r;
    }
    static long long floor_div(long long a, long long b) {
        long long q = a / b;
        if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
        return q;
    }

  private:
    long long below_ = 0;             // every k < below_ is a 0-letter
    std::vector<long long> zeros_;    // exceptional 0-letters, sorted, all >= below_
};

inline BoundaryWord encode(const Partition& p) { return BoundaryWord::encode(p); }
inline Partition decode(const BoundaryWord& w) { return w.decode(); }

// Pair of word indices attached to a box: c_{i} = 1, c_{j} = 0, i < j, and
// j - i is the box's hook length.
struct IndexPair {
    long long i = 0;
    long long j = 0;
};

// The pair of box s = (r, c) is (c - 1 - lambda'_c, lambda_r - r): the
// 1-letter of column c and the 0-letter of row r. Returned row-major,
// aligned with boxes(p).
inline std::vector<IndexPair> box_index_pairs(const Partition& p) {
    const Partition conj = conjugate(p);
    std::vector<IndexPair> out;
    out.reserve(static_cast<std::size_t>(p.weight()));
    for (int r = 1; r <= p.length(); ++r)
        for (int c = 1; c <= p.part(r); ++c)
            out.push_back({c - 1 - static_cast<long long>(conj.part(c)),
                           p.part(r) - static_cast<long long>(r)});
    return out;
}

// True iff the box behind the pair has eps = +1 (on or above the main
// diagonal). The norm comparison |i| <= |j| is NOT equivalent in general
// (e.g. (2,2,2,2,1), box (1,2) has pair (-3,1)); the exact rule compares the
// ranks of the box's row and column: row = #{0-letters > j} + 1 and
// col = #{1-letters < i} + 1, which reduces to the counts below. On DD
// partitions |i| <= |j| does agree with eps = +1, and on SC partitions it
// characterizes "strictly above".
inline bool is_above_diagonal(const BoundaryWord& w, const IndexPair& pr) {
    if (pr.i >= 0) return true;   // column beyond the Durfee square
    if (pr.j < 0) return false;   // row beyond the Durfee square
    return w.count_ones_in(pr.i, 0) <= w.count_zeros_in(0, pr.j + 1);
}

}  // namespace qcores
