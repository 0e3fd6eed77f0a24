#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "qcores/enumerate.hpp"
#include "qcores/littlewood.hpp"
#include "qcores/parallel.hpp"
#include "qcores/partition.hpp"
#include "qcores/rational.hpp"
#include "qcores/report.hpp"
#include "qcores/schur.hpp"
#include "qcores/series.hpp"
#include "qcores/vcoding.hpp"

namespace qcores {

/*
 * One verifier per identity: both sides are expanded into the same truncated
 * series space with exact rational coefficients and compared grade by grade.
 * Verifiers always sweep their full range; a report carries the first
 * mismatching grade and the total mismatch count.
 */

// Caps and reproducibility knobs shared by the verification entry points.
struct VerificationGrid {
    int t = 1;
    int T_cap = 0;        // steps of the T grading (denominator included)
    int q_cap = 0;
    long max_weight = 0;  // per-case sweeps (cores, DD structure, ...)
    int n_random = 20;
    std::uint64_t seed = 0;
    int workers = 1;
    std::vector<Rat> eval_points;  // reserved for evaluation-mode variables
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline LaurentPoly upow(long k) { return LaurentPoly::variable(0, static_cast<int>(k), 1); }

// (1 + c * X^g)^e, truncated; the out-of-cap factor is 1.
inline TruncatedSeries one_plus_pow(const SeriesSpec& spec, GradeKey g, const LaurentPoly& c,
                                    long e) {
    if (!spec.within(g) || c.is_zero() || e == 0) return TruncatedSeries::one(spec);
    if (g[0] == 0 && g[1] == 0)
        throw std::invalid_argument("one_plus_pow: factor needs a positive grade");
    if (e > 0) {
        TruncatedSeries f = TruncatedSeries::one(spec);
        f.add_term(g, c);
        return f.pow_int(e);
    }
    // geometric expansion: (1 + c X^g)^{-1} = sum_j (-c)^j X^{jg}
    TruncatedSeries geo = TruncatedSeries::zero(spec);
    GradeKey at{0, 0};
    LaurentPoly pw = LaurentPoly::one(spec.coeff_vars);
    while (spec.within(at)) {
        geo.add_term(at, pw);
        at = {at[0] + g[0], at[1] + g[1]};
        pw = pw * (-c);
    }
    return geo.pow_int(-e);
}

inline void compare_series(VerificationReport& rep, const TruncatedSeries& lhs,
                           const TruncatedSeries& rhs,
                           const std::vector<std::string>& coeff_names) {
    std::vector<GradeKey> grades;
    for (const auto& [g, c] : lhs.terms()) grades.push_back(g);
    for (const auto& [g, c] : rhs.terms()) grades.push_back(g);
    std::sort(grades.begin(), grades.end());
    grades.erase(std::unique(grades.begin(), grades.end()), grades.end());
    for (const GradeKey& g : grades) {
        const LaurentPoly a = lhs.coeff(g);
        const LaurentPoly b = rhs.coeff(g);
        if (!(a == b))
            rep.note_mismatch(lhs.spec().grade_string(g), a.to_string(coeff_names),
                              b.to_string(coeff_names));
    }
    rep.finalize();
}

inline std::vector<std::string> xnames(int t) {
    std::vector<std::string> n;
    for (int i = 1; i <= t; ++i) n.push_back("x" + std::to_string(i));
    return n;
}

}  // namespace detail

// --- Series identities over full partition families ------------------------

// sum_lambda T^|lambda| prod_h (1 - z/h^2)  ==  prod_k (1 - T^k)^{z-1}
inline VerificationReport verify_nekrasov_okounkov(int T_cap, int workers = 1) {
    Stopwatch timer;
    VerificationReport rep;
    rep.identity = "no";
    rep.params["T-cap"] = std::to_string(T_cap);
    SeriesSpec spec;
    spec.cap = {T_cap, 0};
    spec.coeff_vars = 1;

    std::vector<Partition> all;
    for_each_partition_up_to(T_cap, [&](const std::vector<int>& parts) {
        all.emplace_back(parts);
    });
    rep.terms_enumerated = static_cast<long long>(all.size());

    TruncatedSeries lhs = parallel_fold(
        all.size(), workers, TruncatedSeries::zero(spec),
        [&](TruncatedSeries& acc, std::size_t idx) {
            const Partition& p = all[idx];
            LaurentPoly prod = LaurentPoly::one(1);
            for (const Box& b : boxes(p)) {
                LaurentPoly f = LaurentPoly::one(1);
                f -= LaurentPoly::variable(0, 1, 1, ratio(1, static_cast<long>(b.hook) * b.hook));
                prod *= f;
            }
            acc.add_term({static_cast<int32_t>(p.weight()), 0}, prod);
        },
        [](TruncatedSeries& acc, TruncatedSeries&& local) { acc += local; });

    const LaurentPoly z = LaurentPoly::variable(0, 1, 1);
    const TruncatedSeries euler =
        pochhammer(LaurentPoly::one(1), {1, 0}, {1, 0}, spec);
    const TruncatedSeries rhs = euler.pow_poly(z - LaurentPoly::one(1));

    detail::compare_series(rep, lhs, rhs, {"z"});
    rep.elapsed_ms = timer.ms();
    return rep;
}

// Hook-length q-analogue over all partitions, joint (T, q) truncation.
inline VerificationReport verify_hande(int T_cap, int q_cap, int workers = 1) {
    Stopwatch timer;
    VerificationReport rep;
    rep.identity = "hande";
    rep.params["T-cap"] = std::to_string(T_cap);
    rep.params["q-cap"] = std::to_string(q_cap);
    SeriesSpec spec;
    spec.ngrading = 2;
    spec.cap = {T_cap, q_cap};
    spec.coeff_vars = 1;

    std::vector<Partition> all;
    for_each_partition_up_to(T_cap, [&](const std::vector<int>& parts) {
        all.emplace_back(parts);
    });
    rep.terms_enumerated = static_cast<long long>(all.size());

    TruncatedSeries lhs = parallel_fold(
        all.size(), workers, TruncatedSeries::zero(spec),
        [&](TruncatedSeries& acc, std::size_t idx) {
            const Partition& p = all[idx];
            TruncatedSeries term = TruncatedSeries::one(spec);
            for (const Box& b : boxes(p)) {
                const GradeKey gh{0, b.hook};
                term *= detail::one_plus_pow(spec, gh, -detail::upow(1), 1);
                term *= detail::one_plus_pow(spec, gh, -detail::upow(-1), 1);
                term *= detail::one_plus_pow(spec, gh, LaurentPoly::constant(Rat(-1), 1), -2);
            }
            TruncatedSeries shift(spec);
            shift.add_term({static_cast<int32_t>(p.weight()), 0}, LaurentPoly::one(1));
            acc += term * shift;
        },
        [](TruncatedSeries& acc, TruncatedSeries&& local) { acc += local; });

    TruncatedSeries rhs = TruncatedSeries::one(spec);
    for (int k = 1; k <= T_cap; ++k) {
        for (int r = 1; r <= q_cap + 1; ++r) {
            rhs *= detail::one_plus_pow(spec, {k, r}, -detail::upow(1), r);
            rhs *= detail::one_plus_pow(spec, {k, r}, -detail::upow(-1), r);
            rhs *= detail::one_plus_pow(spec, {k, r - 1}, LaurentPoly::constant(Rat(-1), 1), -r);
            rhs *= detail::one_plus_pow(spec, {k, r + 1}, LaurentPoly::constant(Rat(-1), 1), -r);
        }
    }

    detail::compare_series(rep, lhs, rhs, {"u"});
    rep.elapsed_ms = timer.ms();
    return rep;
}

// DD-restricted hook formula with the signed hook statistic eps.
inline VerificationReport verify_petreolle(int T_cap, int workers = 1) {
    Stopwatch timer;
    VerificationReport rep;
    rep.identity = "petreolle";
    rep.params["T-cap"] = std::to_string(T_cap);
    SeriesSpec spec;
    spec.cap = {T_cap, 0};
    spec.coeff_vars = 1;

    // DD weights are even and the T-grade is |lambda|/2; with T^{|lambda|}
    // the z = -1 slice (the Euler product over strict partitions) would fail.
    const std::vector<Partition> dds = enumerate_family_sieve(PFamily::DD, 0, 2L * T_cap, workers);
    rep.terms_enumerated = static_cast<long long>(dds.size());

    TruncatedSeries lhs = TruncatedSeries::zero(spec);
    for (const Partition& p : dds) {
        LaurentPoly prod = LaurentPoly::one(1);
        for (const Box& b : boxes(p)) {
            // 1 - (2z+2)/(h*eps)
            LaurentPoly f = LaurentPoly::constant(Rat(1) - ratio(2, b.hook * b.eps), 1);
            f -= LaurentPoly::variable(0, 1, 1, ratio(2, b.hook * b.eps));
            prod *= f;
        }
        if (durfee(p) % 2) prod = -prod;
        lhs.add_term({static_cast<int32_t>(p.weight() / 2), 0}, prod);
    }

    // (T;T)_infty ^ (2 z^2 + z)
    LaurentPoly expo = LaurentPoly::variable(0, 2, 1, Rat(2));
    expo += LaurentPoly::variable(0, 1, 1);
    const TruncatedSeries rhs =
        pochhammer(LaurentPoly::one(1), {1, 0}, {1, 0}, spec).pow_poly(expo);

    detail::compare_series(rep, lhs, rhs, {"z"});
    rep.elapsed_ms = timer.ms();
    return rep;
}

// Macdonald identity for the 2(t+1)-modular lattice sum, t variables.
inline VerificationReport verify_macdonald_c(int t, int T_cap) {
    Stopwatch timer;
    VerificationReport rep;
    rep.identity = "macdonald-c";
    rep.params["t"] = std::to_string(t);
    rep.params["T-cap"] = std::to_string(T_cap);
    if (t < 1 || t > 3) throw std::invalid_argument("verify_macdonald_c: t in {1,2,3}");
    SeriesSpec spec;
    spec.cap = {T_cap, 0};
    spec.coeff_vars = t;

    // LHS: Delta_C * (T;T)^t * prod_i (T x_i^2, T x_i^-2; T) * K_T
    TruncatedSeries lhs = pochhammer(LaurentPoly::one(t), {1, 0}, {1, 0}, spec).pow_int(t);
    for (int i = 0; i < t; ++i) {
        lhs *= pochhammer(LaurentPoly::variable(i, 2, t), {1, 0}, {1, 0}, spec);
        lhs *= pochhammer(LaurentPoly::variable(i, -2, t), {1, 0}, {1, 0}, spec);
    }
    lhs *= k_t_product(t, spec);
    lhs = lhs.scaled(weyl_denominator_c(t));

    // RHS: lattice sum over m in Z^t, sigma in S_t, and a sign choice per
    // coordinate from expanding ((x_i T^{m_i})^{sigma(i)-t-1} - (..)^{t+1-sigma(i)}).
    TruncatedSeries rhs = TruncatedSeries::zero(spec);
    long long bound = 0;
    while ((t + 1) * (bound + 1) * (bound + 1) - t * (bound + 1) <= T_cap) ++bound;
    std::vector<int> sigma(static_cast<std::size_t>(t));
    std::iota(sigma.begin(), sigma.end(), 1);
    long long terms = 0;
    std::vector<long long> m(static_cast<std::size_t>(t), 0);
    auto rec = [&](auto&& self, int i, long long exp_so_far) -> void {
        if (exp_so_far > T_cap) return;
        if (i == t) {
            std::vector<int> perm = sigma;
            do {
                int perm_sign = 1;
                for (int a = 0; a < t; ++a)
                    for (int b = a + 1; b < t; ++b)
                        if (perm[a] > perm[b]) perm_sign = -perm_sign;
                for (int mask = 0; mask < (1 << t); ++mask) {
                    long long texp = 0;
                    Exps e{};
                    int sgn_total = perm_sign;
                    for (int v = 0; v < t; ++v) {
                        const long long base_e = perm[v] - t - 1;  // in [-t, -1]
                        const long long ev = (mask >> v) & 1 ? -base_e : base_e;
                        if ((mask >> v) & 1) sgn_total = -sgn_total;
                        texp += (t + 1) * m[v] * m[v] + m[v] * ev;
                        e[v] = static_cast<int32_t>((2 * t + 2) * m[v] + ev);
                    }
                    if (texp < 0 || texp > T_cap) continue;
                    ++terms;
                    rhs.add_term({static_cast<int32_t>(texp), 0},
                                 LaurentPoly::monomial(Rat(sgn_total), e, t));
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            return;
        }
        for (long long v = -bound; v <= bound; ++v) {
            const long long min_contrib = (t + 1) * v * v - t * std::abs(v);
            if (exp_so_far + min_contrib > T_cap) continue;
            m[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, exp_so_far + min_contrib);
        }
        m[static_cast<std::size_t>(i)] = 0;
    };
    rec(rec, 0, 0);
    rep.terms_enumerated = terms;

    detail::compare_series(rep, lhs, rhs, detail::xnames(t));
    rep.elapsed_ms = timer.ms();
    return rep;
}

// --- The two core-indexed character sums -----------------------------------

// sum over DD_(2t+2) cores of (-1)^{d + |H_+|} T^{|w|/2} sp_mu(x)
//   == (T;T)^t K_T prod_i (T x_i^2, T x_i^-2; T)
inline VerificationReport verify_thm11(int t, int T_cap, int workers = 1) {
    Stopwatch timer;
    VerificationReport rep;
    rep.identity = "thm11";
    rep.params["t"] = std::to_string(t);
    rep.params["T-cap"] = std::to_string(T_cap);
    if (t < 1 || t > 3) throw std::invalid_argument("verify_thm11: t in {1,2,3}");
    const int g = 2 * t + 2;
    SeriesSpec spec;
    spec.cap = {T_cap, 0};
    spec.coeff_vars = t;

    const auto frees = dd_free_vectors(t, 2L * T_cap);
    rep.terms_enumerated = static_cast<long long>(frees.size());
    TruncatedSeries lhs = parallel_fold(
        frees.size(), workers, TruncatedSeries::zero(spec),
        [&](TruncatedSeries& acc, std::size_t idx) {
            const CoreVector cv = dd_full_vector(t, frees[idx]);
            const Partition core = core_from_vector(cv);
            const long long w = core.weight();
            const VCoding V = vcoding_of(core, t, Family::DD);
            const Partition mu = mu_from_vcoding(V);
            LaurentPoly ch = sp(mu, t);
            const HPlusStats st = h_plus_stats(core, g);
            if ((durfee(core) + st.h_plus) % 2) ch = -ch;
            acc.add_term({static_cast<int32_t>(w / 2), 0}, ch);
        },
        [](TruncatedSeries& acc, TruncatedSeries&& local) { acc += local; });

    TruncatedSeries rhs = pochhammer(LaurentPoly::one(t), {1, 0}, {1, 0}, spec).pow_int(t);
    for (int i = 0; i < t; ++i) {
        rhs *= pochhammer(LaurentPoly::variable(i, 2, t), {1, 0}, {1, 0}, spec);
        rhs *= pochhammer(LaurentPoly::variable(i, -2, t), {1, 0}, {1, 0}, spec);
    }
    rhs *= k_t_product(t, spec);

    detail::compare_series(rep, lhs, rhs, detail::xnames(t));
    rep.elapsed_ms = timer.ms();
    return rep;
}

// sum over SC_(2t) cores of (-1)^{|H_+| + |H_+ cap Delta| + d} T^{|w|/2} so_mu(x)
//   == (T^{1/2};T^{1/2}) (T;T)^{t-1} K_T prod_i (T^{1/2} x_i, T^{1/2} x_i^-1; T^{1/2})
// T_half_cap counts half-integer steps: grade T^{s/2} for s <= T_half_cap.
inline VerificationReport verify_thm12(int t, int T_half_cap, int workers = 1) {
    Stopwatch timer;
    VerificationReport rep;
    rep.identity = "thm12";
    rep.params["t"] = std::to_string(t);
    rep.params["T-cap"] = std::to_string(T_half_cap) + "/2";
    if (t < 1 || t > 3) throw std::invalid_argument("verify_thm12: t in {1,2,3}");
    const int g = 2 * t;
    SeriesSpec spec;
    spec.cap = {T_half_cap, 0};
    spec.denom = {2, 1};
    spec.coeff_vars = t;

    const auto frees = sc_free_vectors(t, T_half_cap);
    rep.terms_enumerated = static_cast<long long>(frees.size());
    TruncatedSeries lhs = parallel_fold(
        frees.size(), workers, TruncatedSeries::zero(spec),
        [&](TruncatedSeries& acc, std::size_t idx) {
            const CoreVector cv = sc_full_vector(t, frees[idx]);
            const Partition core = core_from_vector(cv);
            const long long w = core.weight();  // grade |w|/2 = w half-steps
            const VCoding V = vcoding_of(core, t, Family::SC);
            const Partition mu = mu_from_vcoding(V);
            LaurentPoly ch = so_odd(mu, t);
            const HPlusStats st = h_plus_stats(core, g);
            if ((st.h_plus + st.h_plus_diag + durfee(core)) % 2) ch = -ch;
            acc.add_term({static_cast<int32_t>(w), 0}, ch);
        },
        [](TruncatedSeries& acc, TruncatedSeries&& local) { acc += local; });

    TruncatedSeries rhs = pochhammer(LaurentPoly::one(t), {1, 0}, {1, 0}, spec);  // base T^{1/2}
    rhs *= pochhammer(LaurentPoly::one(t), {2, 0}, {2, 0}, spec).pow_int(t - 1);
    for (int i = 0; i < t; ++i) {
        rhs *= pochhammer(LaurentPoly::variable(i, 1, t), {1, 0}, {1, 0}, spec);
        rhs *= pochhammer(LaurentPoly::variable(i, -1, t), {1, 0}, {1, 0}, spec);
    }
    rhs *= k_t_product(t, spec);

    detail::compare_series(rep, lhs, rhs, detail::xnames(t));
    rep.elapsed_ms = timer.ms();
    return rep;
}

// --- The two hook-length q-analogues over DD / SC ---------------------------

inline VerificationReport verify_noc(int T_cap, int q_cap, int workers = 1) {
    Stopwatch timer;
    VerificationReport rep;
    rep.identity = "noc";
    rep.params["T-cap"] = std::to_string(T_cap);
    rep.params["q-cap"] = std::to_string(q_cap);
    SeriesSpec spec;
    spec.ngrading = 2;
    spec.cap = {T_cap, q_cap};
    spec.coeff_vars = 1;

    const std::vector<Partition> dds =
        enumerate_family_sieve(PFamily::DD, 0, 2L * T_cap, workers);
    rep.terms_enumerated = static_cast<long long>(dds.size());

    TruncatedSeries lhs = parallel_fold(
        dds.size(), workers, TruncatedSeries::zero(spec),
        [&](TruncatedSeries& acc, std::size_t idx) {
            const Partition& p = dds[idx];
            TruncatedSeries term = TruncatedSeries::one(spec);
            for (const Box& b : boxes(p)) {
                term *= detail::one_plus_pow(spec, {0, b.hook}, -detail::upow(-2 * b.eps), 1);
                term *= detail::one_plus_pow(spec, {0, b.hook},
                                             LaurentPoly::constant(Rat(-1), 1), -1);
                if (b.on_diagonal) {
                    term *= detail::one_plus_pow(spec, {0, b.hook / 2}, detail::upow(1), 1);
                    term *= detail::one_plus_pow(spec, {0, b.hook / 2}, detail::upow(-1), -1);
                }
            }
            const int d = durfee(p);
            LaurentPoly lead = detail::upow(d);
            if (d % 2) lead = -lead;
            TruncatedSeries shift(spec);
            shift.add_term({static_cast<int32_t>(p.weight() / 2), 0}, lead);
            acc += term * shift;
        },
        [](TruncatedSeries& acc, TruncatedSeries&& local) { acc += local; });

    // Product side with the factor shapes pinned by exact exponent extraction
    // from log(LHS): all binomials are minus-forms, the u^{+-2} families sit
    // at q^{r} / q^{r+1}, and every modular exponent is r - floor(r/2).
    TruncatedSeries rhs = TruncatedSeries::one(spec);
    for (int m = 1; m <= T_cap; ++m) {
        for (int r = 1; r <= q_cap + 1; ++r) {
            const long e = (r + 1) / 2;  // r - floor(r/2)
            rhs *= detail::one_plus_pow(spec, {m, r - 1}, -detail::upow(1), 1);
            rhs *= detail::one_plus_pow(spec, {m, r}, -detail::upow(-1), -1);
            rhs *= detail::one_plus_pow(spec, {m, r + 1}, -detail::upow(-2), e);
            rhs *= detail::one_plus_pow(spec, {m, r}, -detail::upow(2), e);
            rhs *= detail::one_plus_pow(spec, {m, r}, LaurentPoly::constant(Rat(-1), 1), -e);
            rhs *= detail::one_plus_pow(spec, {m, r + 1}, LaurentPoly::constant(Rat(-1), 1), -e);
        }
    }

    detail::compare_series(rep, lhs, rhs, {"u"});
    rep.elapsed_ms = timer.ms();
    return rep;
}

// T_half_cap counts half-integer steps of T.
inline VerificationReport verify_nosc(int T_half_cap, int q_cap, int workers = 1) {
    Stopwatch timer;
    VerificationReport rep;
    rep.identity = "nosc";
    rep.params["T-cap"] = std::to_string(T_half_cap) + "/2";
    rep.params["q-cap"] = std::to_string(q_cap);
    SeriesSpec spec;
    spec.ngrading = 2;
    spec.cap = {T_half_cap, q_cap};
    spec.denom = {2, 1};
    spec.coeff_vars = 1;

    const std::vector<Partition> scs =
        enumerate_family_sieve(PFamily::SC, 0, T_half_cap, workers);
    rep.terms_enumerated = static_cast<long long>(scs.size());

    TruncatedSeries lhs = parallel_fold(
        scs.size(), workers, TruncatedSeries::zero(spec),
        [&](TruncatedSeries& acc, std::size_t idx) {
            const Partition& p = scs[idx];
            TruncatedSeries term = TruncatedSeries::one(spec);
            for (const Box& b : boxes(p)) {
                term *= detail::one_plus_pow(spec, {0, 2 * b.hook}, -detail::upow(-2 * b.eps), 1);
                term *= detail::one_plus_pow(spec, {0, 2 * b.hook},
                                             LaurentPoly::constant(Rat(-1), 1), -1);
                if (b.on_diagonal) {
                    term *= detail::one_plus_pow(spec, {0, b.hook}, -detail::upow(1), 1);
                    term *= detail::one_plus_pow(spec, {0, b.hook}, -detail::upow(-1), -1);
                }
            }
            LaurentPoly lead = LaurentPoly::one(1);
            if (durfee(p) % 2) lead = -lead;
            TruncatedSeries shift(spec);
            shift.add_term({static_cast<int32_t>(p.weight()), 0}, lead);
            acc += term * shift;
        },
        [](TruncatedSeries& acc, TruncatedSeries&& local) { acc += local; });

    TruncatedSeries rhs = TruncatedSeries::one(spec);
    const LaurentPoly mone = LaurentPoly::constant(Rat(-1), 1);
    for (int m = 1; m <= T_half_cap; ++m) {
        rhs *= detail::one_plus_pow(spec, {m, 0}, mone, 1);        // (1 - T^{m/2})
        rhs *= detail::one_plus_pow(spec, {2 * m, 0}, mone, -1);   // 1/(1 - T^m)
    }
    // All four modular exponents are r - floor(r/2); the (1 - q^{2r} T^m)
    // exponent pinned by exact extraction from log(LHS).
    for (int m = 1; m <= T_half_cap; ++m) {
        for (int r = 1; 2 * r - 1 <= q_cap + 2; ++r) {
            const long e = (r + 1) / 2;  // r - floor(r/2)
            rhs *= detail::one_plus_pow(spec, {m, 2 * r - 1}, -detail::upow(-1), 1);
            rhs *= detail::one_plus_pow(spec, {m, 2 * r - 1}, -detail::upow(1), -1);
            rhs *= detail::one_plus_pow(spec, {2 * m, 2 * r + 2}, -detail::upow(-2), e);
            rhs *= detail::one_plus_pow(spec, {2 * m, 2 * r}, -detail::upow(2), e);
            rhs *= detail::one_plus_pow(spec, {2 * m, 2 * r}, mone, -e);
            rhs *= detail::one_plus_pow(spec, {2 * m, 2 * r + 2}, mone, -e);
        }
    }

    detail::compare_series(rep, lhs, rhs, {"u"});
    rep.elapsed_ms = timer.ms();
    return rep;
}

// --- Per-core exact rational-function identities ----------------------------

// Principal specialization identity: sp_mu(q, ..., q^t) equals the signed
// hook/eps product, checked per core by cross-multiplication.
inline VerificationReport verify_schurinter(int t, long max_core_weight) {
    Stopwatch timer;
    VerificationReport rep;
    rep.identity = "schurinter";
    rep.params["t"] = std::to_string(t);
    rep.params["max-weight"] = std::to_string(max_core_weight);
    const int g = 2 * t + 2;
    const auto frees = dd_free_vectors(t, max_core_weight);
    rep.terms_enumerated = static_cast<long long>(frees.size());
    for (const auto& fv : frees) {
        const Partition core = core_from_vector(dd_full_vector(t, fv));
        const VCoding V = vcoding_of(core, t, Family::DD);
        const Partition mu = mu_from_vcoding(V);
        const LaurentPoly lhs = principal_sp(mu, t);
        LaurentPoly num = LaurentPoly::variable(0, (t + 1) * durfee(core), 1);
        LaurentPoly den = LaurentPoly::one(1);
        for (const Box& b : boxes(core)) {
            num *= LaurentPoly::one(1) - LaurentPoly::variable(0, b.hook - b.eps * g, 1);
            den *= LaurentPoly::one(1) - LaurentPoly::variable(0, b.hook, 1);
            if (b.on_diagonal) {
                num *= LaurentPoly::one(1) + LaurentPoly::variable(0, t + 1 + b.hook / 2, 1);
                den *= LaurentPoly::one(1) + LaurentPoly::variable(0, b.hook / 2 - t - 1, 1);
            }
        }
        const HPlusStats st = h_plus_stats(core, g);
        if (st.h_plus % 2) num = -num;
        if (!(lhs * den == num))
            rep.note_mismatch("core " + core.to_string(), (lhs * den).to_string({"q"}),
                              num.to_string({"q"}));
    }
    rep.finalize();
    rep.elapsed_ms = timer.ms();
    return rep;
}

// tau-product identity over DD_(2t+2) cores, both for seeded random rational
// tau and for the symbolic tau(x) = 1 - q^x.
inline VerificationReport verify_tau_product(int t, long max_core_weight, int n_random,
                                             std::uint64_t seed, int workers = 1) {
    Stopwatch timer;
    VerificationReport rep;
    rep.identity = "tau-product";
    rep.params["t"] = std::to_string(t);
    rep.params["max-weight"] = std::to_string(max_core_weight);
    rep.params["n-random"] = std::to_string(n_random);
    rep.params["seed"] = std::to_string(seed);
    const auto frees = dd_free_vectors(t, max_core_weight);
    rep.terms_enumerated = static_cast<long long>(frees.size());

    struct Mismatch {
        std::size_t idx;
        int rep_i;
        std::string where, lhs, rhs;
        bool operator<(const Mismatch& o) const {
            return std::tie(idx, rep_i) < std::tie(o.idx, o.rep_i);
        }
    };
    using Acc = std::vector<Mismatch>;
    Acc got = parallel_fold(
        frees.size(), workers, Acc{},
        [&](Acc& acc, std::size_t idx) {
            const Partition core = core_from_vector(dd_full_vector(t, frees[idx]));
            for (int rep_i = 0; rep_i < n_random; ++rep_i) {
                std::uint64_t state =
                    seed ^ (0x9e3779b97f4a7c15ULL * (idx + 1)) ^ (0xbf58476d1ce4e5b9ULL * rep_i);
                std::map<long long, Rat> memo;
                auto tau = [&](long long x) -> Rat {
                    auto it = memo.find(x);
                    if (it != memo.end()) return it->second;
                    const long num = 1 + static_cast<long>(detail::splitmix64(state) % 9973);
                    const long den = 1 + static_cast<long>(detail::splitmix64(state) % 997);
                    Rat v = ratio(detail::splitmix64(state) & 1 ? num : -num, den);
                    memo.emplace(x, v);
                    return v;
                };
                const auto sides = tau_product_sides<Rat>(core, t, tau, Rat(1));
                if (!sides.equal())
                    acc.push_back({idx, rep_i,
                                   "core " + core.to_string() + " random#" + std::to_string(rep_i),
                                   to_string(sides.lhs_num / sides.lhs_den),
                                   to_string(sides.rhs_num / sides.rhs_den)});
            }
            auto tau_q = [](long long x) {
                return LaurentPoly::one(1) - LaurentPoly::variable(0, static_cast<int>(x), 1);
            };
            const auto sides =
                tau_product_sides<LaurentPoly>(core, t, tau_q, LaurentPoly::one(1));
            if (!sides.equal())
                acc.push_back({idx, n_random, "core " + core.to_string() + " symbolic",
                               (sides.lhs_num * sides.rhs_den).to_string({"q"}),
                               (sides.rhs_num * sides.lhs_den).to_string({"q"})});
        },
        [](Acc& acc, Acc&& local) {
            for (auto& m : local) acc.push_back(std::move(m));
        });
    std::sort(got.begin(), got.end());
    for (const auto& m : got) rep.note_mismatch(m.where, m.lhs, m.rhs);
    rep.finalize();
    rep.elapsed_ms = timer.ms();
    return rep;
}

// First-hook interval description vs direct enumeration.
inline VerificationReport verify_lemma35(int t, long max_core_weight) {
    Stopwatch timer;
    VerificationReport rep;
    rep.identity = "lemma35";
    rep.params["t"] = std::to_string(t);
    rep.params["max-weight"] = std::to_string(max_core_weight);
    const auto frees = dd_free_vectors(t, max_core_weight);
    long long cases = 0;
    for (const auto& fv : frees) {
        const Partition core = core_from_vector(dd_full_vector(t, fv));
        if (core.empty()) continue;
        ++cases;
        const VCoding V = vcoding_of(core, t, Family::DD);
        const auto [ip, im] = first_hook_intervals(V);
        const auto [dp, dm] = first_hook_direct(core);
        auto show = [](const std::vector<long long>& v) {
            std::string s = "{";
            for (std::size_t i = 0; i < v.size(); ++i)
                s += (i ? "," : "") + std::to_string(v[i]);
            return s + "}";
        };
        if (ip != dp || im != dm)
            rep.note_mismatch("core " + core.to_string(), show(ip) + " / " + show(im),
                              show(dp) + " / " + show(dm));
    }
    rep.terms_enumerated = cases;
    rep.finalize();
    rep.elapsed_ms = timer.ms();
    return rep;
}

// |H_+| == d + sign(sigma) (mod 2) over DD_(2t+2) cores.
inline VerificationReport verify_lemma36(int t, long max_core_weight) {
    Stopwatch timer;
    VerificationReport rep;
    rep.identity = "lemma36";
    rep.params["t"] = std::to_string(t);
    rep.params["max-weight"] = std::to_string(max_core_weight);
    const auto frees = dd_free_vectors(t, max_core_weight);
    rep.terms_enumerated = static_cast<long long>(frees.size());
    for (const auto& fv : frees) {
        const Partition core = core_from_vector(dd_full_vector(t, fv));
        const auto [h_parity, d_sign_parity] = parity_check(core, t);
        if (h_parity != d_sign_parity)
            rep.note_mismatch("core " + core.to_string(), std::to_string(h_parity),
                              std::to_string(d_sign_parity));
    }
    rep.finalize();
    rep.elapsed_ms = timer.ms();
    return rep;
}

// Structure of the decomposition restricted to DD.
inline VerificationReport verify_dd_structure(int t, long max_weight, int workers = 1) {
    Stopwatch timer;
    VerificationReport rep;
    rep.identity = "structure-dd";
    rep.params["t"] = std::to_string(t);
    rep.params["max-weight"] = std::to_string(max_weight);
    const std::vector<Partition> dds = enumerate_family_sieve(PFamily::DD, 0, max_weight, workers);
    rep.terms_enumerated = static_cast<long long>(dds.size());
    for (const Partition& p : dds) {
        const DDStructureReport r = check_dd_structure(p, t);
        if (!r.all())
            rep.note_mismatch("partition " + p.to_string(),
                              std::string("core_dd=") + (r.core_is_dd ? "1" : "0") +
                                  " nu0_dd=" + (r.nu0_is_dd ? "1" : "0") +
                                  " conj_pairs=" + (r.conjugate_pairs ? "1" : "0") +
                                  " middle_sc=" + (r.middle_is_sc ? "1" : "0"),
                              "all clauses expected to hold");
    }
    rep.finalize();
    rep.elapsed_ms = timer.ms();
    return rep;
}

// Sieve enumeration vs vector parametrization of DD_(g) / SC_(g).
inline VerificationReport verify_cross_generators(Family family, int t, long max_weight,
                                                  int workers = 1) {
    Stopwatch timer;
    VerificationReport rep;
    rep.identity = "cross-generators";
    rep.params["family"] = family == Family::DD ? "dd" : "sc";
    rep.params["t"] = std::to_string(t);
    rep.params["max-weight"] = std::to_string(max_weight);
    const int g = family == Family::DD ? 2 * t + 2 : 2 * t;
    const auto sieved = enumerate_family_sieve(
        family == Family::DD ? PFamily::DDCore : PFamily::SCCore, g, max_weight, workers);
    const auto parametrized = family == Family::DD ? enumerate_dd_cores_by_vector(t, max_weight)
                                                   : enumerate_sc_cores_by_vector(t, max_weight);
    rep.terms_enumerated = static_cast<long long>(sieved.size() + parametrized.size());
    if (!(sieved == parametrized)) {
        std::string a = std::to_string(sieved.size()) + " sieved";
        std::string b = std::to_string(parametrized.size()) + " parametrized";
        for (const Partition& p : sieved)
            if (!std::binary_search(parametrized.begin(), parametrized.end(), p,
                                    [](const Partition& x, const Partition& y) {
                                        if (x.weight() != y.weight()) return x.weight() < y.weight();
                                        return x.parts() < y.parts();
                                    }))
                a += " extra:" + p.to_string();
        rep.note_mismatch("set difference", a, b);
    }
    rep.finalize();
    rep.elapsed_ms = timer.ms();
    return rep;
}

// Ladder between the q-analogue over DD and the character sum: per core the
// noc-shaped hook product at u = q^{t+1} must reproduce
// (-1)^{d+|H_+|} sp_mu(q, ..., q^t), cross-multiplied exactly.
inline VerificationReport verify_noc_thm11_consistency(int t, long max_core_weight) {
    Stopwatch timer;
    VerificationReport rep;
    rep.identity = "noc-thm11-consistency";
    rep.params["t"] = std::to_string(t);
    rep.params["max-weight"] = std::to_string(max_core_weight);
    const int g = 2 * t + 2;
    const auto frees = dd_free_vectors(t, max_core_weight);
    rep.terms_enumerated = static_cast<long long>(frees.size());
    for (const auto& fv : frees) {
        const Partition core = core_from_vector(dd_full_vector(t, fv));
        const VCoding V = vcoding_of(core, t, Family::DD);
        const Partition mu = mu_from_vcoding(V);
        const int d = durfee(core);
        // (-u)^d prod (1 - u^{-2 eps} q^h)/(1 - q^h) prod_diag (1+u q^{h/2})/(1+u^{-1} q^{h/2})
        LaurentPoly num = LaurentPoly::variable(0, (t + 1) * d, 1, Rat(d % 2 ? -1 : 1));
        LaurentPoly den = LaurentPoly::one(1);
        for (const Box& b : boxes(core)) {
            num *= LaurentPoly::one(1) - LaurentPoly::variable(0, b.hook - 2 * (t + 1) * b.eps, 1);
            den *= LaurentPoly::one(1) - LaurentPoly::variable(0, b.hook, 1);
            if (b.on_diagonal) {
                num *= LaurentPoly::one(1) + LaurentPoly::variable(0, t + 1 + b.hook / 2, 1);
                den *= LaurentPoly::one(1) + LaurentPoly::variable(0, b.hook / 2 - t - 1, 1);
            }
        }
        LaurentPoly expected = principal_sp(mu, t);
        const HPlusStats st = h_plus_stats(core, g);
        if ((d + st.h_plus) % 2) expected = -expected;
        if (!(num == expected * den))
            rep.note_mismatch("core " + core.to_string(), num.to_string({"q"}),
                              (expected * den).to_string({"q"}));
    }
    rep.finalize();
    rep.elapsed_ms = timer.ms();
    return rep;
}

}  // namespace qcores
