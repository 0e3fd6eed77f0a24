#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcores/rational.hpp"

namespace qcores {

/*
 * Multivariate Laurent polynomials over exact rationals, up to kMaxVars
 * variables. Terms live in a map keyed by the exponent tuple, so iteration
 * order (lexicographic) is the canonical monomial order used everywhere,
 * including dumps. No zero coefficient is ever stored.
 */
inline constexpr int kMaxVars = 4;
using Exps = std::array<int32_t, kMaxVars>;

class LaurentPoly {
  public:
    explicit LaurentPoly(int nvars = 1) : nvars_(check_arity(nvars)) {}

    static LaurentPoly constant(const Rat& c, int nvars = 1) {
        LaurentPoly p(nvars);
        if (!qcores::is_zero(c)) p.terms_[Exps{}] = c;
        return p;
    }
    static LaurentPoly one(int nvars = 1) { return constant(Rat(1), nvars); }
    static LaurentPoly monomial(const Rat& c, const Exps& e, int nvars) {
        LaurentPoly p(nvars);
        if (!qcores::is_zero(c)) p.terms_[e] = c;
        return p;
    }
    // c * x_var^power
    static LaurentPoly variable(int var, int power = 1, int nvars = 1, const Rat& c = Rat(1)) {
        if (var < 0 || var >= nvars) throw std::invalid_argument("LaurentPoly: bad variable index");
        Exps e{};
        e[var] = power;
        return monomial(c, e, nvars);
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == Exps{} &&
               terms_.begin()->second == 1;
    }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exps, Rat>& terms() const { return terms_; }

    // Single-term test plus access, for unit checks in series inversion.
    bool is_monomial() const { return terms_.size() == 1; }
    std::pair<Exps, Rat> leading_term() const {
        if (terms_.empty()) throw std::domain_error("LaurentPoly: leading term of zero");
        return *terms_.rbegin();
    }

    void add_term(const Exps& e, const Rat& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!qcores::is_zero(c)) terms_.emplace(e, c);
        } else {
            it->second += c;
            if (qcores::is_zero(it->second)) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    LaurentPoly operator-() const {
        LaurentPoly p(nvars_);
        for (const auto& [e, c] : terms_) p.terms_[e] = -c;
        return p;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_same(b);
        LaurentPoly p(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exps e{};
                for (int v = 0; v < kMaxVars; ++v) e[v] = ea[v] + eb[v];
                p.add_term(e, ca * cb);
            }
        return p;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const Rat& c) const {
        LaurentPoly p(nvars_);
        if (qcores::is_zero(c)) return p;
        for (const auto& [e, k] : terms_) p.terms_[e] = k * c;
        return p;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const Rat& c) { return a.scaled(c); }
    friend LaurentPoly operator*(const Rat& c, const LaurentPoly& a) { return a.scaled(c); }

    LaurentPoly pow(unsigned long e) const {
        LaurentPoly acc = one(nvars_);
        LaurentPoly b = *this;
        while (e) {
            if (e & 1) acc *= b;
            b *= b;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }

    // x_i -> x_i^{-1}
    LaurentPoly inverted_var(int var) const {
        LaurentPoly p(nvars_);
        for (const auto& [e, c] : terms_) {
            Exps f = e;
            f[var] = -f[var];
            p.terms_[f] = c;
        }
        return p;
    }

    // Simultaneous substitution x_v -> y^{powers[v]}; returns a univariate
    // Laurent polynomial in y.
    LaurentPoly substitute_powers(const std::vector<long>& powers) const {
        if (static_cast<int>(powers.size()) < nvars_)
            throw std::invalid_argument("substitute_powers: need a power per variable");
        LaurentPoly p(1);
        for (const auto& [e, c] : terms_) {
            long long deg = 0;
            for (int v = 0; v < nvars_; ++v) deg += static_cast<long long>(e[v]) * powers[v];
            Exps f{};
            f[0] = static_cast<int32_t>(deg);
            p.add_term(f, c);
        }
        return p;
    }

    Rat eval(const std::vector<Rat>& point) const {
        if (static_cast<int>(point.size()) < nvars_)
            throw std::invalid_argument("eval: need a value per variable");
        Rat acc(0);
        for (const auto& [e, c] : terms_) {
            Rat term = c;
            for (int v = 0; v < nvars_; ++v)
                if (e[v] != 0) term *= rat_pow(point[v], e[v]);
            acc += term;
        }
        return acc;
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rat a = c;
            if (first) {
                if (sgn(a) < 0) {
                    out += "-";
                    a = -a;
                }
            } else {
                out += sgn(a) < 0 ? " - " : " + ";
                if (sgn(a) < 0) a = -a;
            }
            std::string mono;
            for (int v = 0; v < nvars_; ++v) {
                if (e[v] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names.at(v);
                if (e[v] != 1) mono += "^" + std::to_string(e[v]);
            }
            if (mono.empty())
                out += a.get_str();
            else if (a == 1)
                out += mono;
            else
                out += a.get_str() + "*" + mono;
            first = false;
        }
        return out;
    }

  private:
    static int check_arity(int n) {
        if (n < 1 || n > kMaxVars) throw std::invalid_argument("LaurentPoly: bad arity");
        return n;
    }
    void check_same(const LaurentPoly& o) const {
        if (nvars_ != o.nvars_)
            throw std::invalid_argument("LaurentPoly: arity mismatch");
    }

    int nvars_;
    std::map<Exps, Rat> terms_;

    friend LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);
};

inline bool value_is_zero(const LaurentPoly& p) { return p.is_zero(); }

struct ExactDivisionError : std::domain_error {
    using std::domain_error::domain_error;
};

// Exact quotient q with b*q = a; throws ExactDivisionError (naming the
// residual) when b does not divide a. Greedy leading-term cancellation in
// lex order after shifting both operands to nonnegative exponents.
inline LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw ExactDivisionError("exact_div: division by zero");
    if (a.is_zero()) return LaurentPoly(a.nvars());
    a.check_same(b);

    Exps shift_a{}, shift_b{};
    auto min_exps = [](const LaurentPoly& p) {
        Exps m{};
        bool first = true;
        for (const auto& [e, c] : p.terms()) {
            for (int v = 0; v < kMaxVars; ++v)
                m[v] = first ? e[v] : std::min(m[v], e[v]);
            first = false;
        }
        return m;
    };
    shift_a = min_exps(a);
    shift_b = min_exps(b);
    auto shifted = [](const LaurentPoly& p, const Exps& s) {
        LaurentPoly r(p.nvars());
        for (const auto& [e, c] : p.terms()) {
            Exps f{};
            for (int v = 0; v < kMaxVars; ++v) f[v] = e[v] - s[v];
            r.add_term(f, c);
        }
        return r;
    };
    LaurentPoly rem = shifted(a, shift_a);
    const LaurentPoly div = shifted(b, shift_b);
    const auto [lb, cb] = div.leading_term();

    LaurentPoly quot(a.nvars());
    while (!rem.is_zero()) {
        const auto [lr, cr] = rem.leading_term();
        Exps e{};
        for (int v = 0; v < kMaxVars; ++v) {
            e[v] = lr[v] - lb[v];
            if (e[v] < 0)
                throw ExactDivisionError("exact_div: nonzero remainder (" +
                                         std::to_string(rem.term_count()) + " residual terms)");
        }
        const Rat c = cr / cb;
        LaurentPoly step = LaurentPoly::monomial(c, e, a.nvars());
        quot += step;
        rem -= step * div;
    }
    // Undo the normalization shift on the quotient.
    Exps s{};
    for (int v = 0; v < kMaxVars; ++v) s[v] = shift_b[v] - shift_a[v];
    return shifted(quot, s);
}

}  // namespace qcores
