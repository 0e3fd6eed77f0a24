#include <catch2/catch_amalgamated.hpp>

#include "qcores/enumerate.hpp"
#include "qcores/littlewood.hpp"
#include "qcores/partition.hpp"

using namespace qcores;

TEST_CASE("decomposition worked example") {
    const Decomposition d = decompose(Partition::parse("4,4,3,2"), 3);
    CHECK(d.core == Partition::parse("1"));
    REQUIRE(d.quotient.size() == 3);
    CHECK(d.quotient[0] == Partition::parse("1,1"));
    CHECK(d.quotient[1].empty());
    CHECK(d.quotient[2] == Partition::parse("2"));
    CHECK(compose(d) == Partition::parse("4,4,3,2"));
}

TEST_CASE("compose from scratch") {
    Decomposition d;
    d.t = 3;
    d.core = Partition::parse("1");
    d.quotient = {Partition::parse("1,1"), Partition(), Partition::parse("2")};
    CHECK(compose(d) == Partition::parse("4,4,3,2"));
}

TEST_CASE("decompose(compose(d)) = d on random decompositions") {
    std::uint64_t state = 0x5151;
    auto rnd = [&](long long m) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<long long>((state >> 33) % m);
    };
    auto random_partition = [&](long maxw) {
        std::vector<int> parts;
        long left = rnd(maxw + 1);
        int cap = static_cast<int>(maxw);
        while (left > 0) {
            int p = 1 + static_cast<int>(rnd(std::min<long>(cap, left)));
            parts.push_back(p);
            cap = p;
            left -= p;
        }
        std::sort(parts.rbegin(), parts.rend());
        return Partition(parts);
    };
    for (int rep = 0; rep < 200; ++rep) {
        const int t = 2 + static_cast<int>(rnd(3));
        CoreVector cv;
        cv.modulus = t;
        long long sum = 0;
        for (int i = 0; i + 1 < t; ++i) {
            cv.n.push_back(rnd(5) - 2);
            sum += cv.n.back();
        }
        cv.n.push_back(-sum);
        Decomposition d;
        d.t = t;
        d.core = core_from_vector(cv);
        for (int k = 0; k < t; ++k) d.quotient.push_back(random_partition(4));
        const Partition lambda = compose(d);
        const Decomposition back = decompose(lambda, t);
        REQUIRE(back.core == d.core);
        REQUIRE(back.quotient == d.quotient);
    }
}

TEST_CASE("decomposition degenerate cases") {
    for (int t : {2, 5}) {
        const Decomposition d = decompose(Partition(), t);
        CHECK(d.core.empty());
        for (const Partition& nu : d.quotient) CHECK(nu.empty());
        CHECK(compose(d).empty());
    }
    // A t-core decomposes to itself with an empty quotient.
    const Partition core = Partition::parse("4,2");
    const Decomposition d = decompose(core, 3);
    CHECK(d.core == core);
    for (const Partition& nu : d.quotient) CHECK(nu.empty());
}

TEST_CASE("roundtrip and weight identity") {
    for_each_partition_up_to(16, [](const std::vector<int>& parts) {
        const Partition p(parts);
        for (int t = 2; t <= 5; ++t) {
            const Decomposition d = decompose(p, t);
            REQUIRE(is_t_core(d.core, t));
            long qw = 0;
            for (const Partition& nu : d.quotient) qw += nu.weight();
            REQUIRE(p.weight() == d.core.weight() + t * qw);
            REQUIRE(compose(d) == p);
        }
    });
}

TEST_CASE("t-core iff empty quotient") {
    for_each_partition_up_to(20, [](const std::vector<int>& parts) {
        const Partition p(parts);
        for (int t = 2; t <= 7; ++t) {
            const Decomposition d = decompose(p, t);
            bool all_empty = true;
            for (const Partition& nu : d.quotient) all_empty = all_empty && nu.empty();
            REQUIRE(hooks_mod(p, t).empty() == all_empty);
        }
    });
}

TEST_CASE("compose validates its input") {
    Decomposition d;
    d.t = 3;
    d.core = Partition::parse("2,1");  // hooks {3,1,1}: not a 3-core
    d.quotient = {Partition(), Partition(), Partition()};
    CHECK_THROWS_AS(compose(d), std::invalid_argument);
}

TEST_CASE("core vectors") {
    CHECK(core_vector(Partition::parse("4,2"), 3).n == std::vector<long long>{2, -1, -1});
    CHECK(core_vector(Partition(), 4).n == std::vector<long long>{0, 0, 0, 0});
    CHECK(core_vector(Partition::parse("11,6,4,2,2,1,1,1,1,1"), 6).n ==
          std::vector<long long>{0, 1, -2, 0, 2, -1});
    CHECK_THROWS_AS(core_vector(Partition::parse("2,1"), 3), std::invalid_argument);

    CoreVector bad;
    bad.modulus = 3;
    bad.n = {1, 0, 0};
    CHECK_THROWS_AS(core_from_vector(bad), std::invalid_argument);
}

TEST_CASE("core vector roundtrip over random balanced vectors") {
    std::uint64_t state = 99;
    auto rnd = [&](long long m) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<long long>((state >> 33) % m);
    };
    for (int rep = 0; rep < 300; ++rep) {
        const int t = 2 + static_cast<int>(rnd(5));
        CoreVector cv;
        cv.modulus = t;
        long long sum = 0;
        for (int i = 0; i + 1 < t; ++i) {
            cv.n.push_back(rnd(7) - 3);
            sum += cv.n.back();
        }
        cv.n.push_back(-sum);
        const Partition core = core_from_vector(cv);
        REQUIRE(is_t_core(core, t));
        REQUIRE(core_vector(core, t).n == cv.n);
        REQUIRE(weight_from_core_vector(cv) == core.weight());
    }
}

TEST_CASE("quadratic weight examples") {
    CoreVector a;
    a.modulus = 3;
    a.n = {2, -1, -1};
    CHECK(weight_from_core_vector(a) == 6);
    CoreVector z;
    z.modulus = 5;
    z.n = {0, 0, 0, 0, 0};
    CHECK(weight_from_core_vector(z) == 0);
    CoreVector f;
    f.modulus = 6;
    f.n = {0, 1, -2, 0, 2, -1};
    CHECK(weight_from_core_vector(f) == 30);
}

TEST_CASE("reduced weight formulas") {
    // DD, t = 2: free block (1, -2) is the g = 6 worked example of weight 30.
    CHECK(dd_reduced_weight(dd_full_vector(2, {1, -2})) == 30);
    CHECK(dd_reduced_weight(dd_full_vector(2, {0, 0})) == 0);
    // SC, t = 1: the core (1) has n_0 = 1.
    CHECK(sc_reduced_weight(sc_full_vector(1, {1})) == 1);

    CoreVector broken = dd_full_vector(2, {1, -2});
    broken.n[1] = 2;  // break the mirror symmetry
    CHECK_THROWS_AS(dd_reduced_weight(broken), std::invalid_argument);
}

TEST_CASE("reduced formulas and symmetries on the full range") {
    for (int t = 1; t <= 3; ++t) {
        for (const auto& fv : dd_free_vectors(t, 40)) {
            const CoreVector cv = dd_full_vector(t, fv);
            const Partition core = core_from_vector(cv);
            REQUIRE(is_doubled_distinct(core));
            REQUIRE(is_t_core(core, 2 * t + 2));
            REQUIRE(dd_reduced_weight(cv) == core.weight());
            const CoreVector direct = core_vector(core, 2 * t + 2);
            REQUIRE(direct.n == cv.n);  // n_0 = 0, n_{t+1} = 0, n_i = -n_{g-i}
        }
        for (const auto& fv : sc_free_vectors(t, 40)) {
            const CoreVector cv = sc_full_vector(t, fv);
            const Partition core = core_from_vector(cv);
            REQUIRE(is_self_conjugate(core));
            REQUIRE(is_t_core(core, 2 * t));
            REQUIRE(sc_reduced_weight(cv) == core.weight());
            REQUIRE(core_vector(core, 2 * t).n == cv.n);  // n_i = -n_{g-1-i}
        }
    }
}

TEST_CASE("DD structure of the decomposition") {
    CHECK(check_dd_structure(Partition(), 4).all());
    CHECK(check_dd_structure(Partition::parse("2"), 3).all());
    CHECK_THROWS_AS(check_dd_structure(Partition::parse("2,1"), 3), std::invalid_argument);
    for (const Partition& p : enumerate_family_sieve(PFamily::DD, 0, 24)) {
        for (int t : {3, 4, 5}) REQUIRE(check_dd_structure(p, t).all());
    }
}
