#pragma once

#include <map>
#include <utility>
#include <vector>

#include "fockcr/partitions.hpp"

namespace fockcr {

/// Quantum parameter and charge shared by crystal computations.
struct FockContext {
    int e = 3;
    int s1 = 0, s2 = 0;
};

/// A bipartition with an integer charge attached to each component.
struct ChargedBipartition {
    Partition c1, c2;
    int s1 = 0, s2 = 0;

    int size() const { return c1.size() + c2.size(); }
    bool operator==(const ChargedBipartition&) const = default;
    auto operator<=>(const ChargedBipartition&) const = default;
};

/// Charge pair attached to the 2-core index t (e odd >= 3, t >= 0).
/// The difference s2 - s1 always equals (e+1)/2 + t.
std::pair<int, int> charge_for_core(int t, int e);

/// Twisted 2-quotient: partition -> charged bipartition plus 2-core index.
struct TauResult {
    ChargedBipartition cb;
    int t = 0;
};
TauResult tau(const Partition& p, int e);

/// Inverse of tau at a fixed (e, t); validates that the stored charge is the
/// one charge_for_core(t, e) prescribes.
Partition tau_inverse(const ChargedBipartition& cb, int e, int t);

/// Two-runner abacus: row 2 (component 2) drawn above row 1 (component 1).
struct Abacus {
    BetaSet row1, row2;

    bool operator==(const Abacus&) const = default;
};

Abacus abacus_of(const ChargedBipartition& cb);
ChargedBipartition bipartition_of(const Abacus& a);

/// Bead test; row is 1 or 2.
bool abacus_contains(const Abacus& a, int row, int col);

/// A cell of one component: row/col are 1-based diagram coordinates.
struct BoxRef {
    int row = 1, col = 1, comp = 1;

    bool operator==(const BoxRef&) const = default;
    auto operator<=>(const BoxRef&) const = default;
};

/// All cells of both components, in a fixed deterministic order.
std::vector<BoxRef> boxes(const ChargedBipartition& cb);

/// Content col - row + s_comp of a box.
int content(const BoxRef& b, const ChargedBipartition& cb);

/// Content mod e, reduced to [0, e).
int residue(const BoxRef& b, const ChargedBipartition& cb, int e);

/// Multiset of box residues of the whole bipartition.
std::map<int, long long> residue_multiset(const ChargedBipartition& cb, int e);

/// All charged bipartitions with |c1| + |c2| == size at the given charges,
/// in increasing (c1, c2) order.
std::vector<ChargedBipartition> bipartitions_of(int size, int s1, int s2);

}  // namespace fockcr
