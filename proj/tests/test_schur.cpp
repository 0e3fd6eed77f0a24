#include <catch2/catch_amalgamated.hpp>

#include "qcores/enumerate.hpp"
#include "qcores/partition.hpp"
#include "qcores/schur.hpp"

using namespace qcores;

namespace {

// Weyl dimension formula oracles (independent of the bialternants):
// dim sp_mu with l_i = mu_i + t - i + 1, m_i = t - i + 1, and
// dim so_mu with the same data shifted by 1/2 (computed in halves).
Rat sp_dimension(const Partition& mu, int t) {
    Rat dim(1);
    for (int i = 1; i <= t; ++i) {
        const long li = mu.part(i) + t - i + 1, mi = t - i + 1;
        dim *= Rat(li) / Rat(mi);
        for (int j = i + 1; j <= t; ++j) {
            const long lj = mu.part(j) + t - j + 1, mj = t - j + 1;
            dim *= Rat(li * li - lj * lj) / Rat(mi * mi - mj * mj);
        }
    }
    return dim;
}

Rat so_dimension(const Partition& mu, int t) {
    Rat dim(1);
    for (int i = 1; i <= t; ++i) {
        const long li = 2 * (mu.part(i) + t - i) + 1, mi = 2 * (t - i) + 1;  // doubled halves
        dim *= Rat(li) / Rat(mi);
        for (int j = i + 1; j <= t; ++j) {
            const long lj = 2 * (mu.part(j) + t - j) + 1, mj = 2 * (t - j) + 1;
            dim *= Rat(li * li - lj * lj) / Rat(mi * mi - mj * mj);
        }
    }
    return dim;
}

Rat eval_all_ones(const LaurentPoly& p, int t) {
    return p.eval(std::vector<Rat>(static_cast<std::size_t>(t), Rat(1)));
}

}  // namespace

TEST_CASE("small characters") {
    CHECK(sp(Partition(), 1).is_one());
    CHECK(sp(Partition(), 3).is_one());
    CHECK(so_odd(Partition(), 2).is_one());

    const LaurentPoly sp2 = sp(Partition::parse("2"), 1);
    LaurentPoly expect = LaurentPoly::variable(0, 2, 1) + LaurentPoly::one(1) +
                         LaurentPoly::variable(0, -2, 1);
    CHECK(sp2 == expect);

    const LaurentPoly so1 = so_odd(Partition::parse("1"), 1);
    LaurentPoly e2 = LaurentPoly::variable(0, 1, 1) + LaurentPoly::one(1) +
                     LaurentPoly::variable(0, -1, 1);
    CHECK(so1 == e2);

    CHECK_THROWS_AS(sp(Partition::parse("1,1"), 1), std::invalid_argument);
}

TEST_CASE("principal specialization examples") {
    CHECK(principal_sp(Partition(), 2).is_one());
    const LaurentPoly p = principal_sp(Partition::parse("2"), 1);
    LaurentPoly expect = LaurentPoly::variable(0, 2, 1) + LaurentPoly::one(1) +
                         LaurentPoly::variable(0, -2, 1);
    CHECK(p == expect);
}

TEST_CASE("invariance under inverting any variable") {
    for (int t = 1; t <= 3; ++t) {
        for_each_partition_up_to(8, [&](const std::vector<int>& parts) {
            const Partition mu(parts);
            if (mu.length() > t) return;
            const LaurentPoly s = sp(mu, t);
            const LaurentPoly o = so_odd(mu, t);
            for (int v = 0; v < t; ++v) {
                REQUIRE(s.inverted_var(v) == s);
                REQUIRE(o.inverted_var(v) == o);
            }
        });
    }
}

TEST_CASE("principal specialization equals substitution into the character") {
    for (int t = 1; t <= 3; ++t) {
        std::vector<long> powers;
        for (int i = 1; i <= t; ++i) powers.push_back(i);
        for_each_partition_up_to(6, [&](const std::vector<int>& parts) {
            const Partition mu(parts);
            if (mu.length() > t) return;
            REQUIRE(sp(mu, t).substitute_powers(powers) == principal_sp(mu, t));
        });
    }
}

TEST_CASE("dimensions against the Weyl formula") {
    for (int t = 1; t <= 3; ++t) {
        for_each_partition_up_to(8, [&](const std::vector<int>& parts) {
            const Partition mu(parts);
            if (mu.length() > t) return;
            const Rat ds = eval_all_ones(sp(mu, t), t);
            REQUIRE(ds == sp_dimension(mu, t));
            REQUIRE(sgn(ds) > 0);
            REQUIRE(principal_sp(mu, t).eval({Rat(1)}) == ds);
            REQUIRE(eval_all_ones(so_odd(mu, t), t) == so_dimension(mu, t));
        });
    }
}
