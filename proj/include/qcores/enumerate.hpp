#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcores/littlewood.hpp"
#include "qcores/parallel.hpp"
#include "qcores/partition.hpp"

namespace qcores {

/*
 * Enumeration of partition families. Plain families are produced by sieving
 * the full partition list through the membership predicate; the modular core
 * families DD_(g) / SC_(g) additionally have an independent generator
 * through the symmetric-vector parametrization, and the two must agree as
 * sets (a standing cross-check).
 */

namespace detail {

template <class Visit>
void partitions_rec(long remaining, int max_part, std::vector<int>& buf, Visit& visit) {
    visit(buf);
    const int top = static_cast<int>(std::min<long>(max_part, remaining));
    for (int p = top; p >= 1; --p) {
        buf.push_back(p);
        partitions_rec(remaining - p, p, buf, visit);
        buf.pop_back();
    }
}

template <class Visit>
void partitions_of_rec(long remaining, int max_part, std::vector<int>& buf, Visit& visit) {
    if (remaining == 0) {
        visit(buf);
        return;
    }
    const int top = static_cast<int>(std::min<long>(max_part, remaining));
    for (int p = top; p >= 1; --p) {
        buf.push_back(p);
        partitions_of_rec(remaining - p, p, buf, visit);
        buf.pop_back();
    }
}

}  // namespace detail

// Visits every partition of weight <= max_weight exactly once (the empty
// partition included), as a reused std::vector<int> of parts.
template <class Visit>
void for_each_partition_up_to(long max_weight, Visit visit) {
    std::vector<int> buf;
    detail::partitions_rec(max_weight, static_cast<int>(max_weight), buf, visit);
}

template <class Visit>
void for_each_partition_of(long n, Visit visit) {
    std::vector<int> buf;
    detail::partitions_of_rec(n, static_cast<int>(n), buf, visit);
}

enum class PFamily { P, SC, DD, Core, DDCore, SCCore };

inline PFamily family_from_string(const std::string& s) {
    if (s == "p") return PFamily::P;
    if (s == "sc") return PFamily::SC;
    if (s == "dd") return PFamily::DD;
    if (s == "core") return PFamily::Core;
    if (s == "dd-core") return PFamily::DDCore;
    if (s == "sc-core") return PFamily::SCCore;
    throw std::invalid_argument("unknown family '" + s + "'");
}

// modulus is t for Core and g for DDCore/SCCore; ignored otherwise.
inline bool family_member(const Partition& p, PFamily f, int modulus) {
    switch (f) {
        case PFamily::P: return true;
        case PFamily::SC: return is_self_conjugate(p);
        case PFamily::DD: return is_doubled_distinct(p);
        case PFamily::Core: return is_t_core(p, modulus);
        case PFamily::DDCore: return is_doubled_distinct(p) && is_t_core(p, modulus);
        case PFamily::SCCore: return is_self_conjugate(p) && is_t_core(p, modulus);
    }
    return false;
}

inline void sort_canonical(std::vector<Partition>& list) {
    std::sort(list.begin(), list.end(), [](const Partition& a, const Partition& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return a.parts() < b.parts();
    });
}

// Sieve route: filter every partition of weight <= max_weight through the
// predicate. Parallel over weights; output canonically sorted.
inline std::vector<Partition> enumerate_family_sieve(PFamily f, int modulus, long max_weight,
                                                     int workers = 1) {
    using Buckets = std::vector<std::vector<Partition>>;
    Buckets init(static_cast<std::size_t>(max_weight + 1));
    Buckets got = parallel_fold(
        static_cast<std::size_t>(max_weight + 1), workers, init,
        [&](Buckets& acc, std::size_t n) {
            for_each_partition_of(static_cast<long>(n), [&](const std::vector<int>& parts) {
                Partition p(parts);
                if (family_member(p, f, modulus)) acc[n].push_back(std::move(p));
            });
        },
        [](Buckets& acc, Buckets&& local) {
            for (std::size_t n = 0; n < acc.size(); ++n)
                if (acc[n].empty()) acc[n] = std::move(local[n]);
        });
    std::vector<Partition> out;
    for (auto& bucket : got)
        for (auto& p : bucket) out.push_back(std::move(p));
    sort_canonical(out);
    return out;
}

/*
 * Vector parametrization of the symmetric core families. A DD_(2t+2) core
 * vector is determined by its free block (n_1, ..., n_t); an SC_(2t) one by
 * (n_0, ..., n_{t-1}). Per-coordinate weight contributions are nonnegative,
 * so a box search with the reduced weight formulas enumerates everything.
 */

inline CoreVector dd_full_vector(int t, const std::vector<long long>& free_part) {
    CoreVector cv;
    cv.modulus = 2 * t + 2;
    cv.n.assign(static_cast<std::size_t>(cv.modulus), 0);
    for (int i = 1; i <= t; ++i) {
        cv.n[i] = free_part[i - 1];
        cv.n[cv.modulus - i] = -free_part[i - 1];
    }
    return cv;
}

inline CoreVector sc_full_vector(int t, const std::vector<long long>& free_part) {
    CoreVector cv;
    cv.modulus = 2 * t;
    cv.n.assign(static_cast<std::size_t>(cv.modulus), 0);
    for (int i = 0; i < t; ++i) {
        cv.n[i] = free_part[i];
        cv.n[cv.modulus - 1 - i] = -free_part[i];
    }
    return cv;
}

namespace detail {

inline long long dd_coord_weight(int t, int i, long long n) {
    return 2 * ((t + 1) * n * n + (i - t - 1) * n);
}
inline long long sc_coord_weight(int t, int i, long long n) {
    return 2LL * t * n * n + (2 * (i - t) + 1) * n;
}

template <class CoordWeight>
std::vector<std::vector<long long>> free_vectors(int t, long max_weight, CoordWeight cw) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> buf(static_cast<std::size_t>(t), 0);
    auto any_within = [&](long long b) {
        for (int i = 0; i < t; ++i)
            if (cw(t, i, b) <= max_weight || cw(t, i, -b) <= max_weight) return true;
        return false;
    };
    long long bound = 0;
    while (any_within(bound + 1)) ++bound;
    auto rec = [&](auto&& self, int i, long long used) -> void {
        if (i == t) {
            out.push_back(buf);
            return;
        }
        for (long long n = -bound; n <= bound; ++n) {
            const long long wi = cw(t, i, n);
            if (wi < 0 || used + wi > max_weight) continue;
            buf[static_cast<std::size_t>(i)] = n;
            self(self, i + 1, used + wi);
        }
        buf[static_cast<std::size_t>(i)] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace detail

// Free blocks (n_1..n_t) of every DD_(2t+2) core of weight <= max_weight.
inline std::vector<std::vector<long long>> dd_free_vectors(int t, long max_weight) {
    return detail::free_vectors(t, max_weight, [](int tt, int i, long long n) {
        return detail::dd_coord_weight(tt, i + 1, n);
    });
}

// Free blocks (n_0..n_{t-1}) of every SC_(2t) core of weight <= max_weight.
inline std::vector<std::vector<long long>> sc_free_vectors(int t, long max_weight) {
    return detail::free_vectors(t, max_weight, [](int tt, int i, long long n) {
        return detail::sc_coord_weight(tt, i, n);
    });
}

inline std::vector<Partition> enumerate_dd_cores_by_vector(int t, long max_weight) {
    std::vector<Partition> out;
    for (const auto& fv : dd_free_vectors(t, max_weight))
        out.push_back(core_from_vector(dd_full_vector(t, fv)));
    sort_canonical(out);
    return out;
}

inline std::vector<Partition> enumerate_sc_cores_by_vector(int t, long max_weight) {
    std::vector<Partition> out;
    for (const auto& fv : sc_free_vectors(t, max_weight))
        out.push_back(core_from_vector(sc_full_vector(t, fv)));
    sort_canonical(out);
    return out;
}

}  // namespace qcores
