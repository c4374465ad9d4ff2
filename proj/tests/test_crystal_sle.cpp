#include <doctest.h>

#include <optional>
#include <vector>

#include "fockcr/crystal_sle.hpp"
#include "fockcr/fock.hpp"
#include "fockcr/partitions.hpp"

using namespace fockcr;

namespace {

Partition P(std::vector<int> parts) { return make_partition(std::move(parts)); }

ChargedBipartition CB(std::vector<int> c1, std::vector<int> c2, int s1, int s2) {
    return ChargedBipartition{P(std::move(c1)), P(std::move(c2)), s1, s2};
}

}  // namespace

TEST_CASE("anchor verdicts for the box crystal") {
    CHECK(is_sle_source(CB({1, 1, 1}, {}, -2, 0), 3));
    CHECK(!is_sle_source(CB({}, {1}, -1, 2), 3));
    CHECK(is_sle_source(CB({}, {}, -2, 0), 3));
    CHECK(is_sle_source(CB({}, {1, 1, 1}, -2, 0), 3));  // quotient of 2 1^4
}

TEST_CASE("the flipped cancellation gives different verdicts on the anchors") {
    bool flipped_agrees = is_sle_source(CB({1, 1, 1}, {}, -2, 0), 3,
                                        CancelOrientation::flipped) &&
                          !is_sle_source(CB({}, {1}, -1, 2), 3, CancelOrientation::flipped);
    CHECK(!flipped_agrees);
}

TEST_CASE("box operators add one box of the right residue and invert") {
    for (int t : {0, 1})
        for (int m = 0; m <= 5; ++m) {
            auto [s1, s2] = charge_for_core(t, 3);
            for (const auto& cb : bipartitions_of(m, s1, s2))
                for (int i = 0; i < 3; ++i) {
                    auto up = f_tilde(cb, 3, i);
                    if (!up) continue;
                    CHECK(up->size() == cb.size() + 1);
                    auto before = residue_multiset(cb, 3);
                    auto after = residue_multiset(*up, 3);
                    before[i] += 1;
                    CHECK(after == before);
                    auto down = e_tilde(*up, 3, i);
                    REQUIRE(down.has_value());
                    CHECK(*down == cb);
                }
        }
}

TEST_CASE("a vertex is a source exactly when every lowering operator dies") {
    auto [s1, s2] = charge_for_core(0, 3);
    for (int m = 0; m <= 6; ++m)
        for (const auto& cb : bipartitions_of(m, s1, s2)) {
            bool all_dead = true;
            for (int i = 0; i < 3; ++i)
                if (e_tilde(cb, 3, i)) all_dead = false;
            CHECK(all_dead == is_sle_source(cb, 3));
        }
}

TEST_CASE("depth paths factor through the box operators") {
    for (int t : {0, 1}) {
        auto [s1, s2] = charge_for_core(t, 3);
        for (int m = 0; m <= 6; ++m)
            for (const auto& cb : bipartitions_of(m, s1, s2)) {
                auto path = sle_depth_path(cb, 3);
                CHECK(path.r == static_cast<int>(path.word.size()));
                CHECK(is_sle_source(path.source, 3));
                ChargedBipartition acc = path.source;
                for (auto it = path.word.rbegin(); it != path.word.rend(); ++it) {
                    auto next = f_tilde(acc, 3, *it);
                    REQUIRE(next.has_value());
                    acc = *next;
                }
                CHECK(acc == cb);
            }
    }
}

TEST_CASE("depth and source do not depend on the residue order") {
    const std::vector<std::vector<int>> orders = {{0, 1, 2}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    auto [s1, s2] = charge_for_core(1, 3);
    for (int m = 0; m <= 6; ++m)
        for (const auto& cb : bipartitions_of(m, s1, s2)) {
            auto base = sle_depth_path(cb, 3);
            for (const auto& order : orders) {
                auto alt = sle_depth_path(cb, 3, order);
                CHECK(alt.r == base.r);
                CHECK(alt.source == base.source);
            }
        }
}

TEST_CASE("good boxes of distinct residues do not collide") {
    auto [s1, s2] = charge_for_core(0, 3);
    for (int m = 0; m <= 5; ++m)
        for (const auto& cb : bipartitions_of(m, s1, s2)) {
            std::vector<BoxRef> goods;
            for (int i = 0; i < 3; ++i)
                if (auto g = good_addable(cb, 3, i)) goods.push_back(*g);
            for (std::size_t a = 0; a < goods.size(); ++a)
                for (std::size_t b = a + 1; b < goods.size(); ++b)
                    CHECK(!(goods[a] == goods[b]));
        }
}
