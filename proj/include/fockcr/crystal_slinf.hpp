#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fockcr/fock.hpp"

namespace fockcr {

/// A chain of e beads on consecutive columns, a (possibly empty) row-2 prefix
/// followed by a row-1 suffix. Beads are listed from the highest column down.
struct EPeriod {
    std::vector<std::pair<int, int>> beads;  // (column, row)

    int lead_col() const { return beads.front().first; }
    bool has(int row, int col) const {
        for (auto [c, r] : beads)
            if (c == col && r == row) return true;
        return false;
    }
    bool operator==(const EPeriod&) const = default;
};

/// The first `count` periods of the greedy decomposition (each period starts
/// at the largest remaining bead and prefers row 1 at every column once row 1
/// has a remaining bead there). nullopt if any of them does not exist.
std::optional<std::vector<EPeriod>> try_first_periods(const Abacus& a, int e, int count);

std::optional<EPeriod> first_period(const Abacus& a, int e);

/// Greedy decomposition, stopping once the remainder is the abacus of the
/// empty bipartition (both rows full to the left).
struct PeriodDecomposition {
    std::vector<EPeriod> periods;
    bool totally_periodic = false;
};
PeriodDecomposition period_decomposition(const Abacus& a, int e);

bool is_totally_periodic(const Abacus& a, int e);

/// Single crystal edge: slides the k-th period one column right. Valid only
/// when the moved beads land on free columns and form the k-th period of the
/// result; nullopt otherwise.
std::optional<Abacus> shift_period_right(const Abacus& a, int e, int k);

/// All edges out of a vertex (totally periodic bipartition), as (k, target).
/// Non-periodic bipartitions have no edges.
std::vector<std::pair<int, ChargedBipartition>> slinf_edges_out(const ChargedBipartition& cb, int e);

/// Composite move indexed by a partition sigma: for each column of sigma
/// (tallest first), the periods P_1..P_c of the current abacus are computed
/// once and all slid one column right simultaneously. Throws
/// std::invalid_argument naming the failing column and period if the path is
/// not valid.
ChargedBipartition a_tilde(const ChargedBipartition& cb, int e, const Partition& sigma);
std::optional<ChargedBipartition> try_a_tilde(const ChargedBipartition& cb, int e,
                                              const Partition& sigma);

/// The maximal e-bead chain of allowed shape in an arbitrary abacus: highest
/// start column wins, then the fewest leading row-2 beads.
EPeriod first_fore_period(const Abacus& a, int e);

/// Pattern-avoidance source test: true iff none of the e+1 forbidden
/// patterns occurs with all of its columns at or left of the fore period's
/// lead column.
bool is_slinf_source(const ChargedBipartition& cb, int e);

/// Position of a bipartition in its crystal component: depth k, the unique
/// partition sigma with a_tilde(source, sigma) == cb, and the source itself.
/// For non-periodic input the good-box word is stripped first, the position
/// computed at the stripped vertex, and the word re-added to the source.
struct SlinfPosition {
    int k = 0;
    Partition sigma;
    ChargedBipartition source;
};
SlinfPosition slinf_position(const ChargedBipartition& cb, int e);

}  // namespace fockcr
