#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qcores/littlewood.hpp"
#include "qcores/partition.hpp"
#include "qcores/rational.hpp"
#include "qcores/words.hpp"

namespace qcores {

/*
 * V_{g,t}-codings. For each residue i mod g, beta_i is the index of the last
 * 0-letter of the residue-i subword plus g; the v-coding of a core is the
 * decreasing list of the t largest beta values. For a g-core the subwords
 * are sorted, so beta_i = g*n_i + i links the coding to the GKS vector.
 *
 * Families: DD cores use g = 2t+2, SC cores g = 2t. Residues of a DD coding
 * avoid {0, t+1} and come one per mirror pair {i, g-i}; SC residues come one
 * per pair {i, g-1-i}.
 */

enum class Family { DD, SC };

inline bool value_is_zero(const Rat& q) { return is_zero(q); }

inline std::vector<long long> beta_vector(const Partition& p, int g) {
    if (g < 1) throw std::invalid_argument("beta_vector: g must be positive");
    const BoundaryWord w = encode(p);
    std::vector<long long> beta(g);
    for (int i = 0; i < g; ++i) beta[i] = w.last_zero_in_residue(i, g) + g;
    return beta;
}

struct VCoding {
    int g = 0;
    int t = 0;
    Family family = Family::DD;
    std::vector<long long> v;  // strictly decreasing, size t

    long long residue(int k) const { return BoundaryWord::mod(v[k], g); }
    // r_i = v_i - t - 1 (the DD weight/product statistic)
    long long r(int k) const { return v[k] - t - 1; }
};

inline void validate_vcoding(const VCoding& V) {
    const int g = V.g, t = V.t;
    if (t < 1) throw std::invalid_argument("VCoding: t must be >= 1");
    if (V.family == Family::DD && g != 2 * t + 2)
        throw std::invalid_argument("VCoding: DD family needs g = 2t+2");
    if (V.family == Family::SC && g != 2 * t)
        throw std::invalid_argument("VCoding: SC family needs g = 2t");
    if (static_cast<int>(V.v.size()) != t)
        throw std::invalid_argument("VCoding: need exactly t entries");
    for (int k = 0; k + 1 < t; ++k)
        if (V.v[k] <= V.v[k + 1])
            throw std::invalid_argument("VCoding: entries must be strictly decreasing");
    std::vector<long long> res;
    for (int k = 0; k < t; ++k) res.push_back(V.residue(k));
    for (int a = 0; a < t; ++a)
        for (int b = a + 1; b < t; ++b)
            if (res[a] == res[b])
                throw std::invalid_argument("VCoding: residues mod g must be distinct");
    if (V.family == Family::DD) {
        for (int k = 0; k < t; ++k) {
            if (res[k] == 0 || res[k] == t + 1)
                throw std::invalid_argument("VCoding: DD residues avoid 0 and t+1");
            if (V.r(k) < 1)
                throw std::invalid_argument("VCoding: DD entries need v_i >= t+2");
        }
        for (int a = 0; a < t; ++a)
            for (int b = 0; b < t; ++b)
                if (a != b && (res[a] + res[b]) % g == 0)
                    throw std::invalid_argument("VCoding: DD residues may not sum to 0 mod g");
    } else {
        for (int k = 0; k < t; ++k)
            if (V.v[k] < t)
                throw std::invalid_argument("VCoding: SC entries need v_i >= t");
        for (int a = 0; a < t; ++a)
            for (int b = 0; b < t; ++b)
                if (a != b && (res[a] + res[b]) % g == g - 1)
                    throw std::invalid_argument("VCoding: SC residues may not sum to g-1 mod g");
    }
}

inline bool in_family(const Partition& p, int g, Family family) {
    const bool shape = family == Family::DD ? is_doubled_distinct(p) : is_self_conjugate(p);
    return shape && is_t_core(p, g);
}

inline VCoding vcoding_of(const Partition& core, int t, Family family) {
    if (t < 1) throw std::invalid_argument("vcoding_of: t must be >= 1");
    const int g = family == Family::DD ? 2 * t + 2 : 2 * t;
    if (!in_family(core, g, family))
        throw std::invalid_argument("vcoding_of: partition is not in the requested family");
    std::vector<long long> beta = beta_vector(core, g);
    // beta values carry distinct residues mod g, so ties are impossible; the
    // sorting permutation must be unique and a tie would be a logic error.
    std::vector<long long> sorted = beta;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    for (std::size_t k = 0; k + 1 < sorted.size(); ++k)
        if (sorted[k] == sorted[k + 1])
            throw std::logic_error("vcoding_of: tied beta values");
    VCoding V;
    V.g = g;
    V.t = t;
    V.family = family;
    V.v.assign(sorted.begin(), sorted.begin() + t);
    validate_vcoding(V);
    return V;
}

inline Partition core_from_vcoding(const VCoding& V) {
    validate_vcoding(V);
    const int g = V.g, t = V.t;
    std::vector<long long> beta(g);
    std::vector<bool> set(g, false);
    auto put = [&](long long residue, long long value) {
        if (set[residue])
            throw std::invalid_argument("core_from_vcoding: residue clash while rebuilding beta");
        beta[residue] = value;
        set[residue] = true;
    };
    if (V.family == Family::DD) {
        put(0, 0);
        put(t + 1, t + 1);
        for (int k = 0; k < t; ++k) {
            const long long rho = V.residue(k);
            put(rho, V.v[k]);
            put(BoundaryWord::mod(-rho, g), g - V.v[k]);
        }
    } else {
        for (int k = 0; k < t; ++k) {
            const long long rho = V.residue(k);
            put(rho, V.v[k]);
            put(g - 1 - rho, g - 1 - V.v[k]);
        }
    }
    CoreVector cv;
    cv.modulus = g;
    for (int i = 0; i < g; ++i) {
        if ((beta[i] - i) % g != 0)
            throw std::invalid_argument("core_from_vcoding: beta entry off its residue");
        cv.n.push_back((beta[i] - i) / g);
    }
    Partition core = core_from_vector(cv);
    if (!in_family(core, g, V.family))
        throw std::domain_error("core_from_vcoding: rebuilt partition left the family");
    return core;
}

// |omega| = (1/g) sum r_i^2 - (g/2 - 1)(g - 1)/12, DD family.
inline Rat weight_from_vcoding(const VCoding& V) {
    if (V.family != Family::DD)
        throw std::invalid_argument("weight_from_vcoding: formula applies to the DD family");
    Rat acc(0);
    for (int k = 0; k < V.t; ++k) acc += ratio(V.r(k) * V.r(k), V.g);
    acc -= ratio((V.g / 2 - 1) * (V.g - 1), 12);
    return acc;
}

// mu_i = v_i + i - g (g = 2t+2 for DD, 2t for SC); always a partition for a
// valid coding. A failure here signals a coding bug upstream.
inline Partition mu_from_vcoding(const VCoding& V) {
    std::vector<int> parts;
    for (int k = 0; k < V.t; ++k) {
        const long long m = V.v[k] + (k + 1) - V.g;
        if (m < 0) throw std::domain_error("mu_from_vcoding: negative entry");
        if (m > 0) parts.push_back(static_cast<int>(m));
    }
    return Partition(std::move(parts));
}

/*
 * g-intervals: arithmetic progressions of step g clipped to a half-open
 * range, anchored at the lower (+) or upper (-) endpoint. Empty whenever the
 * index range is empty.
 */
struct GInterval {
    char kind = '+';
    long long m = 0, M = 0;
    int g = 0;

    std::vector<long long> elements() const {
        std::vector<long long> out;
        if (kind == '+') {
            for (long long k = m; k < M; k += g) out.push_back(k);
        } else {
            for (long long l = M; l > m; l -= g) out.push_back(l);
            std::reverse(out.begin(), out.end());
        }
        return out;
    }
};

// Interval description of the first (largest) hook of a DD core: the
// eps = +1 boxes are the 1-letters below v_1 - g, listed residue class by
// residue class, and the eps = -1 boxes are the 0-letters strictly between
// -v_1 + g and v_1 - g; every descending interval is cut below at -v_1 + g.
// The direct first-hook enumeration is the oracle for this form.
inline std::pair<std::vector<long long>, std::vector<long long>>
first_hook_intervals(const VCoding& V) {
    if (V.family != Family::DD)
        throw std::invalid_argument("first_hook_intervals: DD family only");
    const int g = V.g, t = V.t;
    const long long v1 = V.v[0];
    if (v1 <= g)
        throw std::invalid_argument("first_hook_intervals: empty core has no first hook");
    std::vector<GInterval> plus, minus;
    plus.push_back({'+', -v1 + g, v1 - g, g});
    plus.push_back({'+', 0, v1 - g, g});
    plus.push_back({'+', g / 2, v1 - g, g});
    minus.push_back({'-', -v1 + g, v1 - 2 * g, g});
    minus.push_back({'-', -v1 + g, -g, g});
    minus.push_back({'-', -v1 + g, -g / 2, g});
    for (int k = 1; k < t; ++k) {
        plus.push_back({'+', V.v[k], v1 - g, g});
        plus.push_back({'+', -V.v[k] + g, v1 - g, g});
        minus.push_back({'-', -v1 + g, V.v[k] - g, g});
        minus.push_back({'-', -v1 + g, -V.v[k], g});
    }
    std::vector<long long> h_plus, h_minus;
    for (const auto& I : plus)
        for (long long x : I.elements()) h_plus.push_back(x);
    for (const auto& I : minus)
        for (long long x : I.elements()) h_minus.push_back(x);
    std::sort(h_plus.begin(), h_plus.end());
    std::sort(h_minus.begin(), h_minus.end());
    return {h_plus, h_minus};
}

// Direct first-hook enumeration: indices i_s of the row-1 boxes (eps = +1)
// and j_s of the column-1 boxes below the corner (eps = -1).
inline std::pair<std::vector<long long>, std::vector<long long>>
first_hook_direct(const Partition& p) {
    if (p.empty()) throw std::invalid_argument("first_hook_direct: empty partition");
    const Partition conj = conjugate(p);
    std::vector<long long> h_plus, h_minus;
    for (int c = 1; c <= p.part(1); ++c)
        h_plus.push_back(c - 1 - static_cast<long long>(conj.part(c)));
    for (int r = 2; r <= conj.part(1); ++r)
        h_minus.push_back(p.part(r) - static_cast<long long>(r));
    std::sort(h_plus.begin(), h_plus.end());
    std::sort(h_minus.begin(), h_minus.end());
    return {h_plus, h_minus};
}

// Parity of the permutation sorting the beta values, read as a type-C signed
// permutation on the mirror pairs: a selected residue in {1..t} is a flip,
// one in {t+2..2t+1} maps through the mirror, and the parity is
// (#inversions of the induced permutation + #flips) mod 2.
inline int vcoding_sign_parity(const VCoding& V) {
    if (V.family != Family::DD)
        throw std::invalid_argument("vcoding_sign_parity: DD family only");
    const int g = V.g, t = V.t;
    int flips = 0;
    std::vector<long long> w;
    for (int k = 0; k < t; ++k) {
        const long long rho = V.residue(k);
        if (rho <= t) {
            ++flips;
            w.push_back(rho);
        } else {
            w.push_back(g - rho);
        }
    }
    int inv = 0;
    for (int a = 0; a < t; ++a)
        for (int b = a + 1; b < t; ++b)
            if (w[a] > w[b]) ++inv;
    return (inv + flips) % 2;
}

// (|H_+| mod 2, (d + sign parity) mod 2); equality is the congruence under test.
inline std::pair<int, int> parity_check(const Partition& core, int t) {
    const VCoding V = vcoding_of(core, t, Family::DD);
    const HPlusStats st = h_plus_stats(core, V.g);
    return {static_cast<int>(st.h_plus % 2), (durfee(core) + vcoding_sign_parity(V)) % 2};
}

/*
 * Both sides of the tau-product identity for a DD_(2t+2) core, kept as
 * unreduced fractions over an arbitrary exact field F:
 *
 *   LHS = prod_{s in omega} tau(h_s - eps_s g) / tau(h_s)
 *   RHS = prod_i (tau(-i)/tau(i))^{alpha_i} * prod_i tau(r_i)/tau(i)
 *         * prod_{i<j} tau(r_i - r_j)/tau(j - i) * tau(r_i + r_j)/tau(g-i-j)
 *
 * Equality is checked by cross-multiplication, so F only needs one(),
 * multiplication and ==. tau must be nonzero on every argument used.
 */
template <class F>
struct TauSides {
    F lhs_num, lhs_den, rhs_num, rhs_den;
    bool equal() const { return lhs_num * rhs_den == rhs_num * lhs_den; }
};

template <class F, class Tau>
TauSides<F> tau_product_sides(const Partition& core, int t, Tau&& tau, const F& one) {
    const VCoding V = vcoding_of(core, t, Family::DD);
    const int g = V.g;
    auto at = [&](long long x) -> F {
        if (x == 0) throw std::domain_error("tau_product_sides: tau argument 0");
        F val = tau(x);
        if (value_is_zero(val))
            throw std::domain_error("tau_product_sides: tau vanishes at argument " +
                                    std::to_string(x));
        return val;
    };
    TauSides<F> sides{one, one, one, one};
    for (const Box& b : boxes(core)) {
        sides.lhs_num = sides.lhs_num * at(b.hook - static_cast<long long>(b.eps) * g);
        sides.lhs_den = sides.lhs_den * at(b.hook);
    }
    const HPlusStats st = h_plus_stats(core, g);
    for (int i = 1; i <= g - 1; ++i) {
        const long long a = st.alpha.at(i);
        for (long long rep = 0; rep < a; ++rep) {
            sides.rhs_num = sides.rhs_num * at(-i);
            sides.rhs_den = sides.rhs_den * at(i);
        }
    }
    for (int i = 1; i <= t; ++i) {
        sides.rhs_num = sides.rhs_num * at(V.r(i - 1));
        sides.rhs_den = sides.rhs_den * at(i);
    }
    for (int i = 1; i <= t; ++i)
        for (int j = i + 1; j <= t; ++j) {
            sides.rhs_num = sides.rhs_num * at(V.r(i - 1) - V.r(j - 1));
            sides.rhs_den = sides.rhs_den * at(j - i);
            sides.rhs_num = sides.rhs_num * at(V.r(i - 1) + V.r(j - 1));
            sides.rhs_den = sides.rhs_den * at(g - i - j);
        }
    return sides;
}

}  // namespace qcores
