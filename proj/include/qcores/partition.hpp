#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcores {

/*
 * Integer partitions with the statistics attached to their Ferrers diagrams:
 * conjugate, Durfee square, hook lengths, the sign statistic eps (+1 on or
 * above the main diagonal, -1 strictly below), self-conjugate (SC) and
 * doubled distinct (DD) membership, and the H_+ box counts used by the
 * g-modular identities. Box coordinates are 1-based throughout.
 *
 * Values are immutable after construction and freely shareable.
 */
class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("Partition: parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    // Comma-separated parts; the empty string is the empty partition.
    static Partition parse(const std::string& text) {
        std::vector<int> parts;
        std::string token;
        std::istringstream in(text);
        while (std::getline(in, token, ',')) {
            if (token.empty())
                throw std::invalid_argument("Partition::parse: empty component in '" + text + "'");
            std::size_t used = 0;
            int value = std::stoi(token, &used);
            if (used != token.size())
                throw std::invalid_argument("Partition::parse: bad component '" + token + "'");
            parts.push_back(value);
        }
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    long weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

    // 1-based row access; rows beyond the length have size 0.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }

    friend bool operator==(const Partition& a, const Partition& b) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) = default;

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

  private:
    std::vector<int> parts_;
};

inline Partition conjugate(const Partition& p) {
    std::vector<int> cols;
    if (!p.empty()) {
        cols.assign(p.part(1), 0);
        for (int v : p.parts())
            for (int j = 0; j < v; ++j) cols[j]++;
    }
    return Partition(std::move(cols));
}

// d = max{s : lambda_s >= s}, 0 for the empty partition.
inline int durfee(const Partition& p) {
    int d = 0;
    while (d < p.length() && p.part(d + 1) >= d + 1) ++d;
    return d;
}

struct Box {
    int row = 0;   // 1-based
    int col = 0;   // 1-based
    int hook = 0;  // arm + leg + 1
    int eps = 0;   // -1 iff row > col
    bool on_diagonal = false;
};

// One Box per Ferrers cell, row-major. The hook multiset H(lambda) is the
// multiset of box.hook values.
inline std::vector<Box> boxes(const Partition& p) {
    const Partition conj = conjugate(p);
    std::vector<Box> out;
    out.reserve(static_cast<std::size_t>(p.weight()));
    for (int i = 1; i <= p.length(); ++i) {
        for (int j = 1; j <= p.part(i); ++j) {
            Box b;
            b.row = i;
            b.col = j;
            b.hook = (p.part(i) - j) + (conj.part(j) - i) + 1;
            b.eps = (i > j) ? -1 : +1;
            b.on_diagonal = (i == j);
            out.push_back(b);
        }
    }
    return out;
}

inline std::vector<int> hook_multiset(const Partition& p) {
    std::vector<int> hooks;
    for (const Box& b : boxes(p)) hooks.push_back(b.hook);
    std::sort(hooks.begin(), hooks.end());
    return hooks;
}

// Sub-multiset of H(lambda) divisible by t; empty iff p is a t-core.
inline std::vector<int> hooks_mod(const Partition& p, int t) {
    if (t < 1) throw std::invalid_argument("hooks_mod: t must be >= 1");
    std::vector<int> out;
    for (const Box& b : boxes(p))
        if (b.hook % t == 0) out.push_back(b.hook);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_t_core(const Partition& p, int t) {
    if (t < 1) throw std::invalid_argument("is_t_core: t must be >= 1");
    const Partition conj = conjugate(p);
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 1; j <= p.part(i); ++j)
            if (((p.part(i) - j) + (conj.part(j) - i) + 1) % t == 0) return false;
    return true;
}

inline bool is_self_conjugate(const Partition& p) { return conjugate(p) == p; }

// lambda_i = lambda'_i + 1 for every diagonal row i <= d. The condition on
// the first d rows/columns already pins the tail rows, since those appear in
// the column counts lambda'_j for j <= d.
inline bool is_doubled_distinct(const Partition& p) {
    const Partition conj = conjugate(p);
    const int d = durfee(p);
    for (int i = 1; i <= d; ++i)
        if (p.part(i) != conj.part(i) + 1) return false;
    return true;
}

// Mutually inverse bijection between strict partitions and DD: row i of the
// double carries the diagonal box, an arm of mu_i boxes and a leg of
// mu_i - 1 boxes, so the diagonal hooks are exactly 2*mu_i.
inline Partition double_strict(const Partition& strict) {
    for (int i = 1; i < strict.length(); ++i)
        if (strict.part(i) <= strict.part(i + 1))
            throw std::invalid_argument("double_strict: parts must be strictly decreasing");
    const int d = strict.length();
    std::vector<int> parts;
    for (int i = 1; i <= d; ++i) parts.push_back(strict.part(i) + i);
    // Rows below the Durfee square come from the legs: column j has
    // mu_j + j - 1 boxes in total.
    int row = d + 1;
    while (true) {
        int len = 0;
        for (int j = 1; j <= d; ++j)
            if (strict.part(j) + j - 1 >= row) ++len;
        if (len == 0) break;
        parts.push_back(len);
        ++row;
    }
    return Partition(std::move(parts));
}

inline Partition undouble(const Partition& dd) {
    if (!is_doubled_distinct(dd))
        throw std::invalid_argument("undouble: input is not doubled distinct");
    const int d = durfee(dd);
    std::vector<int> parts;
    for (int i = 1; i <= d; ++i) parts.push_back(dd.part(i) - i);
    return Partition(std::move(parts));
}

struct HPlusStats {
    int g = 0;
    long h_plus = 0;               // #{boxes : hook < g, eps = +1}
    long h_plus_diag = 0;          // #{diagonal boxes : hook < g}
    std::map<int, long> alpha;     // alpha[i] = #{boxes : hook = g - i, eps = +1}, 1 <= i <= g-1
};

inline HPlusStats h_plus_stats(const Partition& p, int g) {
    if (g < 1) throw std::invalid_argument("h_plus_stats: g must be positive");
    HPlusStats st;
    st.g = g;
    for (int i = 1; i <= g - 1; ++i) st.alpha[i] = 0;
    for (const Box& b : boxes(p)) {
        if (b.eps == 1 && b.hook < g) {
            st.h_plus++;
            st.alpha[g - b.hook]++;
            if (b.on_diagonal) st.h_plus_diag++;
        }
    }
    return st;
}

}  // namespace qcores
