#include <catch2/catch_amalgamated.hpp>

#include <cstdint>

#include "qcores/laurent.hpp"
#include "qcores/rational.hpp"
#include "qcores/series.hpp"

using namespace qcores;

namespace {

std::uint64_t rng_state = 0x1234abcdULL;
long rnd(long m) {
    rng_state = rng_state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long>((rng_state >> 33) % m);
}

LaurentPoly random_poly(int nvars, int max_terms = 4) {
    LaurentPoly p(nvars);
    const int n = 1 + static_cast<int>(rnd(max_terms));
    for (int k = 0; k < n; ++k) {
        Exps e{};
        for (int v = 0; v < nvars; ++v) e[v] = static_cast<int32_t>(rnd(7) - 3);
        p.add_term(e, ratio(rnd(9) - 4, 1 + rnd(3)));
    }
    return p;
}

}  // namespace

TEST_CASE("laurent arithmetic basics") {
    const LaurentPoly x = LaurentPoly::variable(0, 1, 1);
    const LaurentPoly xinv = LaurentPoly::variable(0, -1, 1);
    CHECK((x - xinv) * (x + xinv) ==
          LaurentPoly::variable(0, 2, 1) - LaurentPoly::variable(0, -2, 1));
    CHECK((x - xinv).pow(2) * (x - xinv) == (x - xinv).pow(3));
    CHECK(LaurentPoly::one(2).to_string({"a", "b"}) == "1");
}

TEST_CASE("exact division") {
    const LaurentPoly x = LaurentPoly::variable(0, 1, 1);
    const LaurentPoly num = LaurentPoly::variable(0, 3, 1) - LaurentPoly::variable(0, -3, 1);
    const LaurentPoly den = x - LaurentPoly::variable(0, -1, 1);
    const LaurentPoly q = exact_div(num, den);
    LaurentPoly expect = LaurentPoly::variable(0, 2, 1) + LaurentPoly::one(1) +
                         LaurentPoly::variable(0, -2, 1);
    CHECK(q == expect);  // this is sp_(2) in one variable

    CHECK(exact_div(LaurentPoly::variable(0, 2, 1), LaurentPoly::variable(0, 3, 1)) ==
          LaurentPoly::variable(0, -1, 1));

    CHECK_THROWS_AS(exact_div(x + LaurentPoly::one(1), x - LaurentPoly::one(1)),
                    ExactDivisionError);
}

TEST_CASE("laurent ring axioms on random triples") {
    for (int rep = 0; rep < 200; ++rep) {
        const LaurentPoly a = random_poly(2), b = random_poly(2), c = random_poly(2);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a * b == b * a);
        if (!b.is_zero()) REQUIRE(exact_div(a * b, b) == a);
    }
}

TEST_CASE("series inverse and unit check") {
    SeriesSpec spec;
    spec.cap = {4, 0};
    TruncatedSeries f = TruncatedSeries::one(spec);
    f.add_term({1, 0}, LaurentPoly::constant(Rat(-1), 1));  // 1 - T
    const TruncatedSeries g = f.inverse();
    for (int32_t k = 0; k <= 4; ++k) REQUIRE(g.coeff({k, 0}).is_one());
    REQUIRE(f * g == TruncatedSeries::one(spec));

    TruncatedSeries bad = TruncatedSeries::zero(spec);
    bad.add_term({0, 0}, LaurentPoly::one(1) + LaurentPoly::variable(0, 1, 1));
    CHECK_THROWS_AS(bad.inverse(), std::domain_error);

    // exp needs zero constant grade; log needs constant term 1
    CHECK_THROWS_AS(TruncatedSeries::one(spec).exp(), std::domain_error);
    TruncatedSeries two = TruncatedSeries::one(spec);
    two.add_term({0, 0}, LaurentPoly::one(1));
    CHECK_THROWS_AS(two.log(), std::domain_error);
}

TEST_CASE("f * inverse(f) = 1 for random unit series") {
    SeriesSpec spec;
    spec.ngrading = 2;
    spec.cap = {3, 3};
    spec.coeff_vars = 2;
    for (int rep = 0; rep < 50; ++rep) {
        TruncatedSeries f = TruncatedSeries::one(spec);
        for (int32_t a = 0; a <= 3; ++a)
            for (int32_t b = 0; b <= 3; ++b)
                if (a + b > 0 && rnd(2)) f.add_term({a, b}, random_poly(2, 3));
        REQUIRE(f * f.inverse() == TruncatedSeries::one(spec));
    }
}

TEST_CASE("exp and log are mutually inverse") {
    SeriesSpec spec;
    spec.cap = {6, 0};
    for (int rep = 0; rep < 50; ++rep) {
        TruncatedSeries f = TruncatedSeries::one(spec);
        for (int32_t a = 1; a <= 6; ++a)
            if (rnd(2)) f.add_term({a, 0}, random_poly(1, 2));
        REQUIRE(f.log().exp() == f);
    }
}

TEST_CASE("polynomial-exponent powers via exp/log") {
    SeriesSpec spec;
    spec.cap = {2, 0};
    TruncatedSeries f = TruncatedSeries::one(spec);
    f.add_term({1, 0}, LaurentPoly::constant(Rat(-1), 1));  // 1 - T
    const LaurentPoly z = LaurentPoly::variable(0, 1, 1);
    const TruncatedSeries g = f.pow_poly(z - LaurentPoly::one(1));  // (1-T)^{z-1}

    LaurentPoly t1 = LaurentPoly::one(1) - z;  // 1 - z
    CHECK(g.coeff({1, 0}) == t1);
    // (z-1)(z-2)/2
    LaurentPoly t2 = (z - LaurentPoly::one(1)) * (z - LaurentPoly::constant(Rat(2), 1));
    t2 = t2.scaled(ratio(1, 2));
    CHECK(g.coeff({2, 0}) == t2);

    // interpolation oracle: at integer z = n the series equals pow_int(n-1)
    SeriesSpec rspec;
    rspec.cap = {2, 0};
    for (long n = -2; n <= 3; ++n) {
        TruncatedSeries base = TruncatedSeries::one(rspec);
        base.add_term({1, 0}, LaurentPoly::constant(Rat(-1), 1));
        const TruncatedSeries direct = base.pow_int(n - 1);
        for (int32_t k = 0; k <= 2; ++k)
            REQUIRE(g.coeff({k, 0}).eval({Rat(n)}) == direct.coeff({k, 0}).eval({Rat(0)}));
    }
}

TEST_CASE("series ring axioms on random triples") {
    SeriesSpec spec;
    spec.ngrading = 2;
    spec.cap = {3, 3};
    spec.coeff_vars = 2;
    auto random_series = [&]() {
        TruncatedSeries f = TruncatedSeries::zero(spec);
        for (int32_t a = 0; a <= 3; ++a)
            for (int32_t b = 0; b <= 3; ++b)
                if (rnd(3) == 0) f.add_term({a, b}, random_poly(2, 2));
        return f;
    };
    for (int rep = 0; rep < 60; ++rep) {
        const TruncatedSeries a = random_series(), b = random_series(), c = random_series();
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a * b == b * a);
    }
}

TEST_CASE("pochhammer products") {
    SeriesSpec spec;
    spec.cap = {12, 0};
    const TruncatedSeries euler = pochhammer(LaurentPoly::one(1), {1, 0}, {1, 0}, spec);
    // pentagonal-number coefficients
    std::map<int, int> expect{{0, 1}, {1, -1}, {2, -1}, {5, 1}, {7, 1}, {12, -1}};
    for (int32_t k = 0; k <= 12; ++k) {
        const LaurentPoly c = euler.coeff({k, 0});
        if (expect.count(k))
            REQUIRE(c == LaurentPoly::constant(Rat(expect[k]), 1));
        else
            REQUIRE(c.is_zero());
    }

    SeriesSpec xs;
    xs.cap = {1, 0};
    xs.coeff_vars = 1;
    const TruncatedSeries tx2 = pochhammer(LaurentPoly::variable(0, 2, 1), {1, 0}, {1, 0}, xs);
    CHECK(tx2.coeff({1, 0}) == -LaurentPoly::variable(0, 2, 1));

    SeriesSpec half;
    half.cap = {4, 0};
    half.denom = {2, 1};
    const TruncatedSeries he = pochhammer(LaurentPoly::one(1), {1, 0}, {1, 0}, half);
    CHECK(he.coeff({0, 0}).is_one());
    CHECK(he.coeff({1, 0}) == LaurentPoly::constant(Rat(-1), 1));  // -T^{1/2}
    CHECK(he.coeff({2, 0}) == LaurentPoly::constant(Rat(-1), 1));  // -T
    CHECK(he.coeff({3, 0}).is_zero());
    CHECK(he.coeff({4, 0}).is_zero());

    CHECK_THROWS_AS(pochhammer(LaurentPoly::one(1), {1, 0}, {0, 0}, spec),
                    std::invalid_argument);
}

TEST_CASE("multi-argument pochhammer is the product of singles") {
    SeriesSpec spec;
    spec.cap = {6, 0};
    spec.coeff_vars = 1;
    const LaurentPoly x = LaurentPoly::variable(0, 1, 1);
    const auto multi = pochhammer_multi(
        {{LaurentPoly::one(1), {1, 0}}, {x, {1, 0}}, {x.inverted_var(0), {2, 0}}}, {1, 0}, spec);
    auto single = pochhammer(LaurentPoly::one(1), {1, 0}, {1, 0}, spec);
    single *= pochhammer(x, {1, 0}, {1, 0}, spec);
    single *= pochhammer(x.inverted_var(0), {2, 0}, {1, 0}, spec);
    CHECK(multi == single);
}

TEST_CASE("K_T and the Weyl factor") {
    SeriesSpec s1;
    s1.cap = {5, 0};
    s1.coeff_vars = 1;
    CHECK(k_t_product(1, s1) == TruncatedSeries::one(s1));

    CHECK(weyl_denominator_c(1) ==
          LaurentPoly::variable(0, -1, 1) - LaurentPoly::variable(0, 1, 1));

    SeriesSpec s2;
    s2.cap = {1, 0};
    s2.coeff_vars = 2;
    const TruncatedSeries k2 = k_t_product(2, s2);
    LaurentPoly expect(2);
    expect.add_term(Exps{1, 1, 0, 0}, Rat(-1));
    expect.add_term(Exps{-1, -1, 0, 0}, Rat(-1));
    expect.add_term(Exps{1, -1, 0, 0}, Rat(-1));
    expect.add_term(Exps{-1, 1, 0, 0}, Rat(-1));
    CHECK(k2.coeff({1, 0}) == expect);
}

TEST_CASE("series dump is canonical") {
    SeriesSpec spec;
    spec.ngrading = 2;
    spec.cap = {2, 2};
    spec.denom = {2, 1};
    TruncatedSeries f = TruncatedSeries::one(spec);
    f.add_term({1, 2}, LaurentPoly::variable(0, -1, 1) - LaurentPoly::variable(0, 2, 1));
    CHECK(f.dump({"u"}) == "T^0 q^0 : 1\nT^(1/2) q^2 : u^-1 - u^2\n");
}
