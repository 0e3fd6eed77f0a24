#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcores/laurent.hpp"
#include "qcores/rational.hpp"

namespace qcores {

/*
 * Truncated formal series in one or two grading variables with LaurentPoly
 * coefficients. Grades are stored in integer steps; each grading variable
 * carries a fixed denominator (1 or 2), so T^{1/2} is step 1 of a
 * denominator-2 variable. Caps are inclusive, in steps; multiplication
 * truncates eagerly. All grades are nonnegative, which keeps truncation
 * consistent.
 */
using GradeKey = std::array<int32_t, 2>;

struct SeriesSpec {
    int ngrading = 1;
    GradeKey cap{0, 0};
    std::array<int32_t, 2> denom{1, 1};
    std::array<std::string, 2> names{"T", "q"};
    int coeff_vars = 1;

    bool same_space(const SeriesSpec& o) const {
        return ngrading == o.ngrading && cap == o.cap && denom == o.denom &&
               coeff_vars == o.coeff_vars;
    }
    bool within(const GradeKey& g) const { return g[0] <= cap[0] && g[1] <= cap[1]; }

    std::string grade_string(const GradeKey& g) const {
        std::string out;
        for (int v = 0; v < ngrading; ++v) {
            if (v) out += " ";
            const long num = g[v], den = denom[v];
            const long gc = std::gcd(num, static_cast<long>(den));
            const long n = num / gc, d = den / gc;
            out += names[v] + "^";
            out += (d == 1) ? std::to_string(n)
                            : "(" + std::to_string(n) + "/" + std::to_string(d) + ")";
        }
        return out;
    }
};

class TruncatedSeries {
  public:
    explicit TruncatedSeries(SeriesSpec spec) : spec_(std::move(spec)) {
        if (spec_.ngrading < 1 || spec_.ngrading > 2)
            throw std::invalid_argument("TruncatedSeries: 1 or 2 grading variables");
        for (int v = 0; v < 2; ++v) {
            if (spec_.cap[v] < 0) throw std::invalid_argument("TruncatedSeries: negative cap");
            if (spec_.denom[v] != 1 && spec_.denom[v] != 2)
                throw std::invalid_argument("TruncatedSeries: grade denominator must be 1 or 2");
        }
        if (spec_.ngrading == 1 && spec_.cap[1] != 0)
            throw std::invalid_argument("TruncatedSeries: unused grading must have cap 0");
    }

    static TruncatedSeries zero(const SeriesSpec& spec) { return TruncatedSeries(spec); }
    static TruncatedSeries one(const SeriesSpec& spec) {
        TruncatedSeries s(spec);
        s.add_term({0, 0}, LaurentPoly::one(spec.coeff_vars));
        return s;
    }

    const SeriesSpec& spec() const { return spec_; }
    const std::map<GradeKey, LaurentPoly>& terms() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    LaurentPoly coeff(const GradeKey& g) const {
        auto it = coeffs_.find(g);
        return it == coeffs_.end() ? LaurentPoly(spec_.coeff_vars) : it->second;
    }

    void add_term(const GradeKey& g, const LaurentPoly& c) {
        if (g[0] < 0 || g[1] < 0)
            throw std::invalid_argument("TruncatedSeries: negative grade");
        if (!spec_.within(g) || c.is_zero()) return;
        auto it = coeffs_.find(g);
        if (it == coeffs_.end()) {
            coeffs_.emplace(g, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        check_same(o);
        for (const auto& [g, c] : o.coeffs_) add_term(g, c);
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        check_same(o);
        for (const auto& [g, c] : o.coeffs_) add_term(g, -c);
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    TruncatedSeries operator-() const {
        TruncatedSeries s(spec_);
        for (const auto& [g, c] : coeffs_) s.coeffs_[g] = -c;
        return s;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_same(b);
        TruncatedSeries s(a.spec_);
        for (const auto& [ga, ca] : a.coeffs_) {
            for (const auto& [gb, cb] : b.coeffs_) {
                const GradeKey g{ga[0] + gb[0], ga[1] + gb[1]};
                if (!a.spec_.within(g)) continue;
                s.add_term(g, ca * cb);
            }
        }
        return s;
    }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    // Scalar multiplication by a coefficient-ring element.
    TruncatedSeries scaled(const LaurentPoly& c) const {
        TruncatedSeries s(spec_);
        for (const auto& [g, k] : coeffs_) s.add_term(g, k * c);
        return s;
    }
    TruncatedSeries scaled(const Rat& c) const {
        TruncatedSeries s(spec_);
        for (const auto& [g, k] : coeffs_) s.add_term(g, k.scaled(c));
        return s;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.spec_.same_space(b.spec_) && a.coeffs_ == b.coeffs_;
    }

    // Truncated inverse; the constant-grade coefficient must be a unit of the
    // Laurent ring (a single term).
    TruncatedSeries inverse() const {
        const LaurentPoly c0 = coeff({0, 0});
        if (!c0.is_monomial())
            throw std::domain_error("TruncatedSeries::inverse: constant term is not a unit");
        const auto [e0, k0] = c0.leading_term();
        Exps einv{};
        for (int v = 0; v < kMaxVars; ++v) einv[v] = -e0[v];
        const LaurentPoly inv0 = LaurentPoly::monomial(Rat(1) / k0, einv, spec_.coeff_vars);

        TruncatedSeries res(spec_);
        res.add_term({0, 0}, inv0);
        for (int32_t g0 = 0; g0 <= spec_.cap[0]; ++g0) {
            for (int32_t g1 = 0; g1 <= spec_.cap[1]; ++g1) {
                if (g0 == 0 && g1 == 0) continue;
                const GradeKey g{g0, g1};
                LaurentPoly acc(spec_.coeff_vars);
                for (const auto& [h, ah] : coeffs_) {
                    if (h[0] == 0 && h[1] == 0) continue;
                    if (h[0] > g0 || h[1] > g1) continue;
                    const GradeKey rest{g0 - h[0], g1 - h[1]};
                    auto it = res.coeffs_.find(rest);
                    if (it != res.coeffs_.end()) acc += ah * it->second;
                }
                if (!acc.is_zero()) res.add_term(g, -(inv0 * acc));
            }
        }
        return res;
    }

    TruncatedSeries pow_int(long e) const {
        if (e < 0) return inverse().pow_int(-e);
        TruncatedSeries acc = one(spec_);
        TruncatedSeries b = *this;
        unsigned long n = e;
        while (n) {
            if (n & 1) acc *= b;
            b *= b;
            n >>= 1;
        }
        return acc;
    }

    // exp of a series with zero constant grade.
    TruncatedSeries exp() const {
        if (coeffs_.count({0, 0}))
            throw std::domain_error("TruncatedSeries::exp: nonzero constant grade");
        TruncatedSeries acc = one(spec_);
        TruncatedSeries term = one(spec_);
        const long kmax = spec_.cap[0] + spec_.cap[1];
        for (long k = 1; k <= kmax; ++k) {
            term *= *this;
            term = term.scaled(ratio(1, k));
            if (term.is_zero()) break;
            acc += term;
        }
        return acc;
    }

    // log of a series with constant term 1.
    TruncatedSeries log() const {
        if (!coeff({0, 0}).is_one())
            throw std::domain_error("TruncatedSeries::log: constant term must be 1");
        TruncatedSeries g = *this;
        g.coeffs_.erase({0, 0});
        TruncatedSeries acc(spec_);
        TruncatedSeries p = one(spec_);
        const long kmax = spec_.cap[0] + spec_.cap[1];
        for (long k = 1; k <= kmax; ++k) {
            p *= g;
            if (p.is_zero()) break;
            acc += p.scaled(ratio((k % 2) ? 1 : -1, k));
        }
        return acc;
    }

    // f^e for a polynomial exponent e, via exp(e * log f).
    TruncatedSeries pow_poly(const LaurentPoly& e) const { return log().scaled(e).exp(); }

    // One line per grade tuple in lex order; byte-stable.
    std::string dump(const std::vector<std::string>& coeff_names) const {
        std::string out;
        for (const auto& [g, c] : coeffs_) {
            out += spec_.grade_string(g) + " : " + c.to_string(coeff_names) + "\n";
        }
        return out;
    }

  private:
    void check_same(const TruncatedSeries& o) const {
        if (!spec_.same_space(o.spec_))
            throw std::invalid_argument("TruncatedSeries: incompatible series spaces");
    }

    SeriesSpec spec_;
    std::map<GradeKey, LaurentPoly> coeffs_;
};

// Truncated Pochhammer product prod_{j>=0} (1 - mono * X^{a + j*base}).
// mono is a single coefficient-ring term (or zero); base must be a nonzero
// grade, otherwise the product never stabilizes under the caps.
inline TruncatedSeries pochhammer(const LaurentPoly& mono, GradeKey a, GradeKey base,
                                  const SeriesSpec& spec) {
    if (base[0] == 0 && base[1] == 0)
        throw std::invalid_argument("pochhammer: base grade is 0, product never stabilizes");
    if (base[0] < 0 || base[1] < 0 || a[0] < 0 || a[1] < 0)
        throw std::invalid_argument("pochhammer: grades must be nonnegative");
    if (mono.term_count() > 1)
        throw std::invalid_argument("pochhammer: coefficient must be a single term");
    TruncatedSeries res = TruncatedSeries::one(spec);
    for (GradeKey g = a; spec.within(g); g = {g[0] + base[0], g[1] + base[1]}) {
        TruncatedSeries factor = TruncatedSeries::one(spec);
        factor.add_term(g, -mono);
        res *= factor;
    }
    return res;
}

// (a_1, ..., a_n; base)_infty as a product of single Pochhammers.
inline TruncatedSeries pochhammer_multi(const std::vector<std::pair<LaurentPoly, GradeKey>>& args,
                                        GradeKey base, const SeriesSpec& spec) {
    TruncatedSeries res = TruncatedSeries::one(spec);
    for (const auto& [mono, grade] : args) res *= pochhammer(mono, grade, base, spec);
    return res;
}

// K_T(t, x) = prod_{i<j} (T x_i x_j, T/(x_i x_j), T x_i/x_j, T x_j/x_i; T)_infty.
// The empty index set at t = 1 gives 1. T is grading variable 0 of the spec.
inline TruncatedSeries k_t_product(int t, const SeriesSpec& spec) {
    if (t < 1) throw std::invalid_argument("k_t_product: t must be >= 1");
    const GradeKey unitT{spec.denom[0], 0};
    TruncatedSeries res = TruncatedSeries::one(spec);
    constexpr std::array<std::pair<int, int>, 4> signs{{{1, 1}, {-1, -1}, {1, -1}, {-1, 1}}};
    for (int i = 0; i < t; ++i) {
        for (int j = i + 1; j < t; ++j) {
            for (const auto& [pi, pj] : signs) {
                Exps e{};
                e[i] = pi;
                e[j] = pj;
                res *= pochhammer(LaurentPoly::monomial(Rat(1), e, spec.coeff_vars), unitT, unitT,
                                  spec);
            }
        }
    }
    return res;
}

// Delta_C(x) = prod_i x_i^{-t} (1 - x_i^2) prod_{i<j} (x_j - x_i)(1 - x_i x_j).
inline LaurentPoly weyl_denominator_c(int t) {
    if (t < 1) throw std::invalid_argument("weyl_denominator_c: t must be >= 1");
    LaurentPoly res = LaurentPoly::one(t);
    for (int i = 0; i < t; ++i) {
        LaurentPoly f = LaurentPoly::variable(i, -t, t);
        f -= LaurentPoly::variable(i, 2 - t, t);
        res *= f;
    }
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            LaurentPoly f = LaurentPoly::variable(j, 1, t) - LaurentPoly::variable(i, 1, t);
            res *= f;
            Exps e{};
            e[i] = 1;
            e[j] = 1;
            LaurentPoly h = LaurentPoly::one(t) - LaurentPoly::monomial(Rat(1), e, t);
            res *= h;
        }
    return res;
}

}  // namespace qcores
