#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "fockcr/partitions.hpp"

using namespace fockcr;

namespace {

Partition P(std::vector<int> parts) { return make_partition(std::move(parts)); }

/// Independent e-core oracle: remove one e-rim-hook at a time through the
/// bead picture (a hook is a bead b with b - e free) and check that every
/// removal order ends at the same partition.
void all_cores(const Partition& p, int e, std::set<Partition>& out) {
    BetaSet b = beta_set(p, p.length() + e + 1);
    bool any = false;
    for (int bead : b.beads) {
        if (beta_contains(b, bead - e)) continue;
        // bead - e is strictly above the implicit tail, so the window keeps
        // its length and its forced last entry
        std::vector<int> window = b.beads;
        window.erase(std::find(window.begin(), window.end(), bead));
        window.push_back(bead - e);
        std::sort(window.begin(), window.end(), std::greater<int>());
        any = true;
        all_cores(partition_from_beta(make_beta_set(b.charge, window)), e, out);
    }
    if (!any) out.insert(p);
}

}  // namespace

TEST_CASE("make_partition validates and strips zeros") {
    CHECK(P({3, 2, 0, 0}).parts() == std::vector<int>{3, 2});
    CHECK(P({}).empty());
    CHECK(P({5}).size() == 5);
    CHECK_THROWS_AS(make_partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(make_partition({2, -1}), std::invalid_argument);
    CHECK(P({2, 2, 1}).part(1) == 2);
    CHECK(P({2, 2, 1}).part(3) == 1);
    CHECK(P({2, 2, 1}).part(4) == 0);
}

TEST_CASE("transpose is an involution and matches examples") {
    CHECK(transpose(P({3, 1})) == P({2, 1, 1}));
    CHECK(transpose(P({})) == P({}));
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : partitions_of(n)) {
            CHECK(transpose(transpose(p)) == p);
            CHECK(transpose(p).size() == p.size());
        }
}

TEST_CASE("concat and delta") {
    CHECK(concat(P({2, 1}), P({1, 1})) == P({2, 1, 1, 1}));
    CHECK(concat(P({}), P({3})) == P({3}));
    CHECK(delta(0) == P({}));
    CHECK(delta(3) == P({3, 2, 1}));
    CHECK(delta(3).size() == 6);
}

TEST_CASE("dominance order") {
    CHECK(dominance_leq(P({1, 1, 1}), P({2, 1})));
    CHECK(dominance_leq(P({2, 1}), P({3})));
    CHECK(!dominance_leq(P({3}), P({2, 1})));
    CHECK(dominance_leq(P({2, 2}), P({2, 2})));
    // incomparable pair
    CHECK(!dominance_leq(P({3, 1, 1, 1}), P({2, 2, 2})));
    CHECK(!dominance_leq(P({2, 2, 2}), P({3, 1, 1, 1})));
    CHECK_THROWS_AS(dominance_leq(P({2}), P({1})), std::invalid_argument);
}

TEST_CASE("lex order helpers") {
    CHECK(lex_less(P({2, 1}), P({3})));
    CHECK(lex_less(P({3}), P({3, 1})));
    CHECK(!lex_less(P({3, 1}), P({3, 1})));
}

TEST_CASE("beta sets round trip at every charge") {
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : partitions_of(n))
            for (int charge = -3; charge <= 3; ++charge) {
                BetaSet b = beta_set(p, charge);
                CHECK(b.charge == charge);
                CHECK(partition_from_beta(b) == p);
                // window entries strictly decrease and end at the forced value
                for (std::size_t i = 0; i + 1 < b.beads.size(); ++i)
                    CHECK(b.beads[i] > b.beads[i + 1]);
                CHECK(b.beads.back() == charge - static_cast<int>(b.beads.size()) + 1);
            }
}

TEST_CASE("beta membership sees the infinite tail") {
    BetaSet b = beta_set(P({2, 1}), 0);
    CHECK(beta_contains(b, b.beads.front()));
    CHECK(beta_contains(b, -100));
    CHECK(!beta_contains(b, b.beads.front() + 1));
}

TEST_CASE("make_beta_set rejects malformed windows") {
    CHECK_THROWS_AS(make_beta_set(0, {1, 2}), std::invalid_argument);        // not decreasing
    CHECK_THROWS_AS(make_beta_set(0, {2, 1, 0, -2}), std::invalid_argument); // wrong tail
    CHECK(make_beta_set(0, {2, 0, -1, -3, -4, -5, -6, -7}).beads ==
          beta_set(P({2, 1, 1}), 0).beads);
}

TEST_CASE("bead windows recover the natural charge") {
    for (int n = 0; n <= 7; ++n)
        for (const auto& p : partitions_of(n))
            for (int charge : {-2, 0, 3})
                for (int extra = 0; extra <= 2; ++extra) {
                    int len = p.length() + 1 + extra;
                    auto window = beta_window(p, charge, len);
                    auto read = partition_of_bead_window(window);
                    CHECK(read.partition == p);
                    CHECK(read.natural_charge == charge);
                }
}

TEST_CASE("2-quotient matches the recorded example and its size identity") {
    auto tq = two_core_quotient(P({2, 1, 1, 1, 1}));
    CHECK(tq.t == 0);
    CHECK(tq.q1 == P({}));
    CHECK(tq.q2 == P({1, 1, 1}));

    for (int t = 0; t <= 5; ++t) {
        auto staircase = two_core_quotient(delta(t));
        CHECK(staircase.t == t);
        CHECK(staircase.q1 == P({}));
        CHECK(staircase.q2 == P({}));
    }

    for (int n = 0; n <= 10; ++n)
        for (const auto& p : partitions_of(n)) {
            auto q = two_core_quotient(p);
            CHECK(p.size() == 2 * (q.q1.size() + q.q2.size()) + q.t * (q.t + 1) / 2);
        }
}

TEST_CASE("e-core examples") {
    CHECK(e_core(P({2, 2, 2}), 3) == P({}));
    CHECK(e_core(P({2, 1}), 3) == P({}));
    CHECK(e_core(P({1, 1, 1}), 3) == P({}));
    CHECK(e_core(P({2, 1}), 2) == P({2, 1}));  // no dominoes removable from a 2-core
    CHECK(e_core(P({}), 4) == P({}));
}

TEST_CASE("e-core agrees with exhaustive rim-hook removal") {
    for (int e : {2, 3, 4, 5})
        for (int n = 0; n <= 8; ++n)
            for (const auto& p : partitions_of(n)) {
                std::set<Partition> terminal;
                all_cores(p, e, terminal);
                REQUIRE(terminal.size() == 1);
                CHECK(*terminal.begin() == e_core(p, e));
            }
}

TEST_CASE("e-core properties") {
    for (int e : {2, 3, 5})
        for (int n = 0; n <= 10; ++n)
            for (const auto& p : partitions_of(n)) {
                Partition core = e_core(p, e);
                CHECK((p.size() - core.size()) % e == 0);
                CHECK(e_core(core, e) == core);
            }
}

TEST_CASE("partitions_of counts and order") {
    const std::vector<int> counts = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) {
        auto all = partitions_of(n);
        CHECK(static_cast<int>(all.size()) == counts[static_cast<std::size_t>(n)]);
        std::set<Partition> seen;
        for (std::size_t i = 0; i < all.size(); ++i) {
            CHECK(all[i].size() == n);
            if (i > 0) CHECK(lex_less(all[i], all[i - 1]));
            seen.insert(all[i]);
        }
        CHECK(seen.size() == all.size());
    }
}

TEST_CASE("content residues sum to the size") {
    for (const auto& p : partitions_of(6)) {
        auto res = content_residues(p, 3);
        long long total = 0;
        for (const auto& [r, c] : res) {
            CHECK(r >= 0);
            CHECK(r < 3);
            total += c;
        }
        CHECK(total == 6);
    }
}
