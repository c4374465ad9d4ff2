#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "fockcr/fock.hpp"
#include "fockcr/partitions.hpp"

using namespace fockcr;

namespace {

Partition P(std::vector<int> parts) { return make_partition(std::move(parts)); }

ChargedBipartition CB(std::vector<int> c1, std::vector<int> c2, int s1, int s2) {
    return ChargedBipartition{P(std::move(c1)), P(std::move(c2)), s1, s2};
}

}  // namespace

TEST_CASE("charges attached to 2-cores") {
    CHECK(charge_for_core(0, 3) == std::pair<int, int>(-2, 0));
    CHECK(charge_for_core(1, 3) == std::pair<int, int>(-1, 2));
    CHECK(charge_for_core(2, 3) == std::pair<int, int>(-3, 1));
    CHECK(charge_for_core(3, 3) == std::pair<int, int>(-2, 3));
    CHECK(charge_for_core(4, 3) == std::pair<int, int>(-4, 2));
    CHECK(charge_for_core(5, 3) == std::pair<int, int>(-3, 4));
    CHECK(charge_for_core(0, 5) == std::pair<int, int>(-3, 0));
    for (int e : {3, 5, 7})
        for (int t = 0; t <= 10; ++t) {
            auto [s1, s2] = charge_for_core(t, e);
            CHECK(s2 - s1 == (e + 1) / 2 + t);
        }
    CHECK_THROWS_AS(charge_for_core(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(charge_for_core(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(charge_for_core(-1, 3), std::invalid_argument);
}

TEST_CASE("twisted quotient on recorded labels") {
    auto t1 = tau(P({2, 2, 2}), 3);
    CHECK(t1.t == 0);
    CHECK(t1.cb == CB({1}, {1, 1}, -2, 0));

    auto t2 = tau(P({1, 1, 1, 1, 1, 1}), 3);
    CHECK(t2.t == 0);
    CHECK(t2.cb == CB({1, 1, 1}, {}, -2, 0));

    auto t3 = tau(P({2, 1, 1, 1, 1}), 3);
    CHECK(t3.t == 0);
    CHECK(t3.cb == CB({}, {1, 1, 1}, -2, 0));

    auto t4 = tau(P({3, 2, 2, 2}), 3);
    CHECK(t4.t == 1);
    CHECK(t4.cb == CB({1}, {1, 1, 1}, -1, 2));

    auto t5 = tau(P({3, 2, 1}), 3);
    CHECK(t5.t == 3);
    CHECK(t5.cb == CB({}, {}, -2, 3));

    auto t6 = tau(P({5, 4, 3}), 3);
    CHECK(t6.t == 3);
    CHECK(t6.cb == CB({}, {1, 1, 1}, -2, 3));

    auto t7 = tau(P({5, 4, 3, 1}), 3);
    CHECK(t7.t == 1);
    CHECK(t7.cb == CB({}, {2, 2, 2}, -1, 2));

    auto t8 = tau(P({2, 2, 2, 2, 2}), 5);
    CHECK(t8.t == 0);
    CHECK(t8.cb == CB({1, 1}, {1, 1, 1}, -3, 0));
}

TEST_CASE("quotient size identity and round trip") {
    for (int e : {3, 5})
        for (int n = 0; n <= 10; ++n)
            for (const auto& p : partitions_of(n)) {
                auto tr = tau(p, e);
                CHECK(p.size() == 2 * tr.cb.size() + tr.t * (tr.t + 1) / 2);
                CHECK(tau_inverse(tr.cb, e, tr.t) == p);
            }
}

TEST_CASE("tau_inverse rejects a charge that does not belong to (e, t)") {
    CHECK_THROWS_AS(tau_inverse(CB({1}, {}, 0, 0), 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(tau_inverse(CB({}, {}, -1, 2), 3, 0), std::invalid_argument);
}

TEST_CASE("abacus round trip and membership") {
    for (int t : {0, 1, 2})
        for (int m = 0; m <= 5; ++m) {
            auto [s1, s2] = charge_for_core(t, 3);
            for (const auto& cb : bipartitions_of(m, s1, s2)) {
                Abacus a = abacus_of(cb);
                CHECK(bipartition_of(a) == cb);
                // deep columns are always beads
                CHECK(abacus_contains(a, 1, -50));
                CHECK(abacus_contains(a, 2, -50));
                // far right columns never are
                CHECK(!abacus_contains(a, 1, 50));
                CHECK(!abacus_contains(a, 2, 50));
            }
        }
}

TEST_CASE("boxes, contents, residues") {
    auto cb = CB({2, 1}, {1}, -2, 0);
    auto bx = boxes(cb);
    CHECK(bx.size() == 4);
    // first-row first-column boxes carry their component's charge as content
    for (const auto& b : bx)
        if (b.row == 1 && b.col == 1)
            CHECK(content(b, cb) == (b.comp == 1 ? -2 : 0));
    auto res = residue_multiset(cb, 3);
    long long total = 0;
    for (const auto& [r, c] : res) total += c;
    CHECK(total == 4);
}

TEST_CASE("bipartition enumeration is complete, sorted, distinct") {
    const std::vector<int> p = {1, 1, 2, 3, 5, 7, 11};
    for (int m = 0; m <= 6; ++m) {
        auto all = bipartitions_of(m, -2, 0);
        int expect = 0;
        for (int a = 0; a <= m; ++a) expect += p[a] * p[m - a];
        CHECK(static_cast<int>(all.size()) == expect);
        std::set<ChargedBipartition> seen;
        for (std::size_t i = 0; i < all.size(); ++i) {
            CHECK(all[i].size() == m);
            if (i > 0) CHECK(all[i - 1] < all[i]);
            seen.insert(all[i]);
        }
        CHECK(seen.size() == all.size());
    }
}
