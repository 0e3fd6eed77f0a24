#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "qcores/partition.hpp"
#include "qcores/words.hpp"

namespace qcores {

/*
 * Littlewood decomposition Phi_t: lambda <-> (t-core, t-quotient), computed
 * on boundary words. The residue-k subword of s(lambda) decodes (after
 * re-balancing) to the quotient component nu^(k); sorting each subword
 * (all 0s then all 1s, keeping its balance offset) yields the word of the
 * t-core. The per-residue balance offsets are the GKS vector n_0..n_{t-1},
 * which sums to 0 and determines the core.
 */

struct Decomposition {
    int t = 0;
    Partition core;
    std::vector<Partition> quotient;  // nu^(0), ..., nu^(t-1)
};

struct CoreVector {
    int modulus = 0;                 // t (or g) of the core
    std::vector<long long> n;        // n_i = first-1 index of the residue-i subword
};

inline Partition core_from_vector(const CoreVector& v);

inline Decomposition decompose(const Partition& p, int t) {
    if (t < 2) throw std::invalid_argument("decompose: t must be >= 2");
    const BoundaryWord w = encode(p);
    Decomposition d;
    d.t = t;
    CoreVector cv;
    cv.modulus = t;
    for (int k = 0; k < t; ++k) {
        BoundaryWord sub = w.subword(t, k);
        const long long charge = sub.balance_offset();
        cv.n.push_back(charge);
        d.quotient.push_back(sub.shifted(charge).decode());
    }
    d.core = core_from_vector(cv);
    return d;
}

inline Partition compose(const Decomposition& d) {
    const int t = d.t;
    if (t < 2) throw std::invalid_argument("compose: t must be >= 2");
    if (static_cast<int>(d.quotient.size()) != t)
        throw std::invalid_argument("compose: quotient must have t components");
    if (!is_t_core(d.core, t))
        throw std::invalid_argument("compose: core component is not a t-core");
    const BoundaryWord core_word = encode(d.core);

    // c_{t*i + k} = enc(nu^(k))_{i - n_k}
    std::vector<BoundaryWord> subs;
    long long lo = 0;
    for (int k = 0; k < t; ++k) {
        const long long n_k = core_word.subword(t, k).first_one_index();
        subs.push_back(encode(d.quotient[k]).shifted(-n_k));
        lo = std::min(lo, subs.back().threshold());
    }
    std::vector<long long> zeros;
    for (int k = 0; k < t; ++k) {
        const BoundaryWord& sub = subs[k];
        for (long long i = lo; i < sub.threshold(); ++i)
            zeros.push_back(t * i + k);
        for (long long z : sub.exceptional_zeros()) zeros.push_back(t * z + k);
    }
    return BoundaryWord::from_zero_set(t * lo, std::move(zeros)).decode();
}

// n_i = min{k : c_{i + k*t} = 1} for each residue i of a t-core's word.
inline CoreVector core_vector(const Partition& core, int t) {
    if (t < 1) throw std::invalid_argument("core_vector: t must be >= 1");
    if (!is_t_core(core, t))
        throw std::invalid_argument("core_vector: input is not a t-core");
    const BoundaryWord w = encode(core);
    CoreVector cv;
    cv.modulus = t;
    for (int k = 0; k < t; ++k) cv.n.push_back(w.subword(t, k).first_one_index());
    return cv;
}

inline Partition core_from_vector(const CoreVector& v) {
    const int t = v.modulus;
    if (t < 1 || static_cast<int>(v.n.size()) != t)
        throw std::invalid_argument("core_from_vector: need one entry per residue");
    if (std::accumulate(v.n.begin(), v.n.end(), 0LL) != 0)
        throw std::invalid_argument("core_from_vector: entries must sum to 0");
    long long lo = 0;
    for (long long nk : v.n) lo = std::min(lo, nk - 1);
    std::vector<long long> zeros;
    for (int k = 0; k < t; ++k)
        for (long long i = lo; i < v.n[k]; ++i) zeros.push_back(t * i + k);
    return BoundaryWord::from_zero_set(t * lo, std::move(zeros)).decode();
}

// |omega| = (t/2) * sum n_i^2 + sum i*n_i
inline long long weight_from_core_vector(const CoreVector& v) {
    long long sq = 0, lin = 0;
    for (int i = 0; i < v.modulus; ++i) {
        sq += v.n[i] * v.n[i];
        lin += i * v.n[i];
    }
    const long long twice = v.modulus * sq + 2 * lin;
    if (twice % 2 != 0 || twice < 0)
        throw std::domain_error("weight_from_core_vector: vector does not sum to 0?");
    return twice / 2;
}

// Restricted weight formulas. A DD_(2t+2) core vector satisfies n_0 = 0,
// n_{t+1} = 0 and n_i = -n_{2t+2-i}; an SC_(2t) core vector satisfies
// n_i = -n_{2t-1-i}. The reductions below follow from the quadratic form
// and the symmetry and are oracle-checked against direct weights.
inline long long dd_reduced_weight(const CoreVector& v) {
    const int g = v.modulus;
    if (g < 4 || g % 2 != 0)
        throw std::invalid_argument("dd_reduced_weight: modulus must be even, >= 4");
    const int t = g / 2 - 1;
    if (v.n[0] != 0 || v.n[t + 1] != 0)
        throw std::invalid_argument("dd_reduced_weight: need n_0 = n_{t+1} = 0");
    for (int i = 1; i <= t; ++i)
        if (v.n[i] != -v.n[g - i])
            throw std::invalid_argument("dd_reduced_weight: need n_i = -n_{g-i}");
    long long acc = 0;
    for (int i = 1; i <= t; ++i)
        acc += (t + 1) * v.n[i] * v.n[i] + (i - t - 1) * v.n[i];
    return 2 * acc;
}

inline long long sc_reduced_weight(const CoreVector& v) {
    const int g = v.modulus;
    if (g < 2 || g % 2 != 0)
        throw std::invalid_argument("sc_reduced_weight: modulus must be even, >= 2");
    const int t = g / 2;
    for (int i = 0; i < t; ++i)
        if (v.n[i] != -v.n[g - 1 - i])
            throw std::invalid_argument("sc_reduced_weight: need n_i = -n_{g-1-i}");
    long long acc = 0;
    for (int i = 0; i < t; ++i)
        acc += 2LL * t * v.n[i] * v.n[i] + (2 * (i - t) + 1) * v.n[i];
    return acc;
}

// Structure of Phi_t restricted to DD: core in DD_(t), nu^(0) in DD,
// nu^(k) conjugate to nu^(t-k), and for even t the middle nu^(t/2) in SC.
struct DDStructureReport {
    bool core_is_dd = false;
    bool nu0_is_dd = false;
    bool conjugate_pairs = false;
    bool middle_is_sc = false;  // vacuously true for odd t
    bool all() const { return core_is_dd && nu0_is_dd && conjugate_pairs && middle_is_sc; }
};

inline DDStructureReport check_dd_structure(const Partition& p, int t) {
    if (!is_doubled_distinct(p))
        throw std::invalid_argument("check_dd_structure: input is not doubled distinct");
    const Decomposition d = decompose(p, t);
    DDStructureReport r;
    r.core_is_dd = is_doubled_distinct(d.core) && is_t_core(d.core, t);
    r.nu0_is_dd = is_doubled_distinct(d.quotient[0]);
    r.conjugate_pairs = true;
    for (int k = 1; k <= t - 1; ++k)
        if (d.quotient[k] != conjugate(d.quotient[t - k])) r.conjugate_pairs = false;
    r.middle_is_sc = (t % 2 != 0) || is_self_conjugate(d.quotient[t / 2]);
    return r;
}

}  // namespace qcores
