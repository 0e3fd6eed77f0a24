#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>

#include "qcores/enumerate.hpp"
#include "qcores/partition.hpp"

using namespace qcores;

TEST_CASE("parse and validate") {
    CHECK(Partition::parse("").empty());
    CHECK(Partition::parse("4,4,3,2").weight() == 13);
    CHECK(Partition::parse("11,6,4,2,2,1,1,1,1,1").length() == 10);
    CHECK_THROWS_AS(Partition::parse("3,4"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,0"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,,1"), std::invalid_argument);
}

TEST_CASE("conjugate examples") {
    CHECK(conjugate(Partition::parse("4,4,3,2")) == Partition::parse("4,4,3,2"));
    CHECK(conjugate(Partition()) == Partition());
    CHECK(is_self_conjugate(Partition::parse("5,3,3,1,1")));
    CHECK(conjugate(Partition::parse("3,1")) == Partition::parse("2,1,1"));
}

TEST_CASE("conjugation is an involution and preserves hooks") {
    for_each_partition_up_to(25, [](const std::vector<int>& parts) {
        const Partition p(parts);
        const Partition c = conjugate(p);
        REQUIRE(conjugate(c) == p);
        REQUIRE(hook_multiset(p) == hook_multiset(c));
    });
}

TEST_CASE("durfee") {
    CHECK(durfee(Partition::parse("5,3,3,1,1")) == 3);
    CHECK(durfee(Partition()) == 0);
    CHECK(durfee(Partition::parse("11,6,4,2,2,1,1,1,1,1")) == 3);
}

TEST_CASE("boxes carry hooks and eps") {
    const auto bs = boxes(Partition::parse("2,1"));
    REQUIRE(bs.size() == 3);
    std::multiset<int> hooks;
    for (const Box& b : bs) hooks.insert(b.hook);
    CHECK(hooks == std::multiset<int>{1, 1, 3});
    CHECK(bs[0].eps == 1);   // (1,1)
    CHECK(bs[1].eps == 1);   // (1,2)
    CHECK(bs[2].eps == -1);  // (2,1)
    CHECK(bs[0].on_diagonal);

    const auto one = boxes(Partition::parse("1"));
    REQUIRE(one.size() == 1);
    CHECK(one[0].hook == 1);
    CHECK(one[0].eps == 1);
    CHECK(one[0].on_diagonal);

    const auto two = boxes(Partition::parse("2"));
    REQUIRE(two.size() == 2);
    CHECK(two[0].hook == 2);
    CHECK(two[1].hook == 1);
    CHECK((two[0].eps == 1 && two[1].eps == 1));
}

TEST_CASE("hooks_mod") {
    CHECK(hooks_mod(Partition::parse("2"), 4).empty());
    for (int k = 1; k <= 8; ++k) {
        std::vector<int> staircase;
        for (int v = k; v >= 1; --v) staircase.push_back(v);
        CHECK(hooks_mod(Partition(staircase), 2).empty());
    }
    CHECK(hooks_mod(Partition::parse("4,4,3,2"), 1).size() == 13);
}

TEST_CASE("self-conjugate and doubled distinct predicates") {
    CHECK(is_self_conjugate(Partition::parse("5,3,3,1,1")));
    CHECK(is_doubled_distinct(Partition::parse("6,4,4,1,1")));
    CHECK(is_self_conjugate(Partition::parse("2,1")));
    CHECK_FALSE(is_doubled_distinct(Partition::parse("2,1")));
    CHECK(is_self_conjugate(Partition()));
    CHECK(is_doubled_distinct(Partition()));
}

namespace {

// Oracle: build the doubled diagram literally, diagonal box plus an arm of
// mu_i and a leg of mu_i - 1 in row/column i, then read off row lengths.
Partition double_by_diagram(const Partition& mu) {
    std::map<int, int> row_len;
    for (int i = 1; i <= mu.length(); ++i) {
        for (int j = i; j <= i + mu.part(i); ++j) row_len[i] = std::max(row_len[i], j);
        for (int r = i + 1; r <= i + mu.part(i) - 1; ++r) row_len[r] = std::max(row_len[r], i);
    }
    std::vector<int> parts;
    for (int r = 1; !row_len.empty() && r <= row_len.rbegin()->first; ++r)
        if (row_len.count(r)) parts.push_back(row_len[r]);
    return Partition(parts);
}

}  // namespace

TEST_CASE("double and undouble") {
    CHECK(double_strict(Partition::parse("3,1")) == Partition::parse("4,3,1"));
    CHECK(undouble(Partition::parse("4,3,1")) == Partition::parse("3,1"));
    CHECK(double_strict(Partition()) == Partition());
    CHECK(undouble(Partition::parse("6,4,4,1,1")) == Partition::parse("5,2,1"));
    CHECK_THROWS_AS(double_strict(Partition::parse("2,2")), std::invalid_argument);
    CHECK_THROWS_AS(undouble(Partition::parse("2,1")), std::invalid_argument);

    // Against the diagram oracle, with the weight-doubling law.
    for_each_partition_up_to(12, [](const std::vector<int>& parts) {
        for (std::size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i] <= parts[i + 1]) return;
        const Partition mu(parts);
        const Partition dd = double_strict(mu);
        REQUIRE(dd == double_by_diagram(mu));
        REQUIRE(is_doubled_distinct(dd));
        REQUIRE(dd.weight() == 2 * mu.weight());
        REQUIRE(undouble(dd) == mu);
    });
}

TEST_CASE("DD diagonal hooks are even, SC diagonal hooks are odd") {
    for_each_partition_up_to(30, [](const std::vector<int>& parts) {
        const Partition p(parts);
        const bool dd = is_doubled_distinct(p);
        const bool sc = is_self_conjugate(p);
        if (!dd && !sc) return;
        for (const Box& b : boxes(p)) {
            if (!b.on_diagonal) continue;
            if (dd) REQUIRE(b.hook % 2 == 0);
            if (sc) REQUIRE(b.hook % 2 == 1);
        }
    });
}

TEST_CASE("h_plus statistics") {
    const HPlusStats a = h_plus_stats(Partition::parse("2"), 4);
    CHECK(a.h_plus == 2);
    const HPlusStats b = h_plus_stats(Partition(), 6);
    CHECK(b.h_plus == 0);
    CHECK(b.h_plus_diag == 0);
    const HPlusStats c = h_plus_stats(Partition::parse("1"), 2);
    CHECK(c.h_plus == 1);
    CHECK(c.h_plus_diag == 1);
    CHECK(c.alpha.at(1) == 1);

    // alpha sums to h_plus
    for_each_partition_up_to(14, [](const std::vector<int>& parts) {
        const Partition p(parts);
        for (int g : {2, 4, 6}) {
            const HPlusStats st = h_plus_stats(p, g);
            long sum = 0;
            for (const auto& [i, a] : st.alpha) sum += a;
            REQUIRE(sum == st.h_plus);
        }
    });
}
